#pragma once

#include "sitcalc/ast.hpp"
#include "sitcalc/context.hpp"
#include "sitcalc/span.hpp"
#include "sitcalc/type.hpp"

#include <string>
#include <vector>

namespace sitcalc {

struct Declaration {
    enum class Kind : std::uint8_t { Var, Rel, Fun };

    Kind kind = Kind::Var;
    std::string name;
    /// Var: candidate types (>= 1, '|'-separated in source).
    /// Rel/Fun: declared parameter types (>= 1); the trailing Situation of a
    /// relational signature and the Action result are implicit in source.
    std::vector<Type> types;
    Span span{};
};

struct Statement {
    std::string name;
    NodePtr body;
    Span span{};
};

/// A parsed source file: declarations first, then named statements.
struct SourceProgram {
    std::string file;
    std::vector<Declaration> declarations;
    std::vector<Statement> statements;

    /// Typing context induced by the declarations (plus the built-in s0).
    /// Declarations are pre-validated by the parser, so this cannot fail.
    TypingContext base_context() const;
};

/// Full signature of a declaration as registered in the context: relational
/// declarations gain the trailing Situation parameter and Situation result,
/// functional ones the Action result.
Type declared_signature(const Declaration& d);

} // namespace sitcalc
