#pragma once

#include "sitcalc/ast.hpp"
#include "sitcalc/program.hpp"

#include <string>

namespace sitcalc {

// Canonical pretty-printer: single spaces around binary operators, ", "
// between arguments, parentheses only where precedence demands them.
// parse(pretty_print(p)) reproduces p structurally for any parseable AST.
// Situation values — which only arise during evaluation and have no surface
// syntax — print as "<s0 . a1 . a2>".

std::string pretty_print(const Node& n);
std::string pretty_print(const NodePtr& n);
std::string pretty_print(const Declaration& d);
std::string pretty_print(const Statement& s);
std::string pretty_print(const SourceProgram& p);

} // namespace sitcalc
