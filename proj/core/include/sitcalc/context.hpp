#pragma once

#include "sitcalc/ast.hpp"
#include "sitcalc/type.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sitcalc {

/// Typing context: variable bindings (each a non-empty set of candidate
/// types) plus fluent signatures. Contexts are persistent — extension
/// returns a new context sharing structure with the old one, so leaving a
/// scope is simply "keep using the outer context". Inner bindings shadow
/// outer ones.
class TypingContext {
public:
    /// Fresh context with only the initial situation bound (s0 : Situation).
    TypingContext();

    /// New context with `name` bound to `candidates` in the innermost scope.
    /// Throws std::invalid_argument if `candidates` is empty.
    TypingContext bind(const std::string& name, std::vector<Type> candidates) const;

    /// New context with a fluent signature registered. The signature must be
    /// a relational or functional arrow; the name must be fresh among
    /// fluents. Throws std::invalid_argument otherwise.
    TypingContext declare_fluent(const std::string& name, Type signature) const;

    /// Candidate types of `name`, innermost binding first wins; empty when
    /// unbound.
    std::vector<Type> lookup(const std::string& name) const;

    bool has_variable(const std::string& name) const { return !lookup(name).empty(); }

    /// Signature of a declared fluent, or nullptr.
    const Type* fluent(const std::string& name) const;

    const std::map<std::string, Type>& fluents() const { return *fluents_; }

    /// Names of visible variables bound to exactly {Situation}, sorted.
    /// (s0 is excluded: fix templates want a statement-scoped variable.)
    std::vector<std::string> situation_variables() const;

    /// All visible variable names, innermost shadowing applied, sorted.
    std::vector<std::string> variable_names() const;

private:
    struct Binding {
        std::string name;
        std::vector<Type> candidates;
        std::shared_ptr<const Binding> outer;
    };

    std::shared_ptr<const Binding> vars_;
    std::shared_ptr<const std::map<std::string, Type>> fluents_;
};

/// Free-function spellings of the two context operations.
inline std::vector<Type> context_lookup(const TypingContext& w, const std::string& name) {
    return w.lookup(name);
}

inline TypingContext context_extend(const TypingContext& w, const std::string& name,
                                    std::vector<Type> candidates) {
    return w.bind(name, std::move(candidates));
}

} // namespace sitcalc
