#pragma once

#include <string>
#include <vector>

namespace sitcalc {

enum class TypeKind : std::uint8_t {
    Unit,      // value of an assertion; also the type of uniformly-typed collections
    Bool,
    Situation, // an action history rooted at the initial situation s0
    Action,
    Object,
    Arrow,     // fluent signature: params -> ... -> result
};

/// First-order types. Base types are scalar; Arrow carries its full parameter
/// list plus result (curried form is display-only). Arrows never nest: fluent
/// signatures take base-typed parameters and yield a base-typed result.
class Type {
public:
    Type() : kind_(TypeKind::Unit) {}

    static Type unit() { return Type(TypeKind::Unit); }
    static Type boolean() { return Type(TypeKind::Bool); }
    static Type situation() { return Type(TypeKind::Situation); }
    static Type action() { return Type(TypeKind::Action); }
    static Type object() { return Type(TypeKind::Object); }

    /// Signature with explicit parameters and result. Throws std::invalid_argument
    /// if `params` is empty or any component is itself an arrow.
    static Type arrow(std::vector<Type> params, Type result);

    /// Relational-fluent signature: given object-level parameters P1..Pn,
    /// builds P1 -> ... -> Pn -> Situation -> Situation.
    static Type relational(std::vector<Type> object_params);

    /// Functional-fluent signature: P1 -> ... -> Pn -> Action.
    static Type functional(std::vector<Type> params);

    TypeKind kind() const { return kind_; }
    bool is_arrow() const { return kind_ == TypeKind::Arrow; }

    /// Arrow accessors; undefined for base types.
    std::size_t param_count() const { return sig_.size() - 1; }
    const Type& param(std::size_t i) const { return sig_[i]; }
    const Type& result() const { return sig_.back(); }

    std::string to_string() const;

    bool operator==(const Type& other) const;
    bool operator!=(const Type& other) const { return !(*this == other); }

private:
    explicit Type(TypeKind k) : kind_(k) {}

    TypeKind kind_;
    std::vector<Type> sig_; // Arrow only: parameters followed by the result
};

/// Parses a base type name ("Unit", "Bool", "Situation", "Action", "Object").
/// Returns false if the name is not a base type.
bool base_type_from_name(const std::string& name, Type& out);

bool is_relational_signature(const Type& t);
bool is_functional_signature(const Type& t);

} // namespace sitcalc
