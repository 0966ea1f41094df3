#pragma once

#include "sitcalc/ast.hpp"
#include "sitcalc/world.hpp"

#include <vector>

namespace sitcalc::test {

/// What a satisfaction query can come back with. `Undefined` stands for the
/// library raising UninterpretedError; the oracle computes it as a value so
/// agreement can be asserted without exception plumbing.
enum class Sat3 { True, False, Undefined };

const char* sat3_name(Sat3 v);

/// Independent model-checking oracle. Where the library substitutes into the
/// tree and consults World's lookup methods, this one carries an explicit
/// binding environment and scans the raw table rows itself. Short-circuits,
/// lookup order, and the exact points where an unknown name surfaces are
/// mirrored deliberately, since `Undefined` depends on them.
Sat3 oracle_satisfies(const World& w, const NodePtr& n);

/// Every small world over up to three instances {x, y, z} and up to three
/// situations {s0, s1, s2}, with the relational table `p` and the functional
/// table `a` ranging over every subset of their possible rows — plus, for
/// each, the table being absent altogether (absent and empty behave
/// differently: an absent table makes the name unknown). 5769 worlds.
std::vector<World> world_space();

/// Formulas exercising every satisfaction clause: literals, bare names,
/// table lookups through both fluent layers, connective short-circuits in
/// both operand orders, situation-name antecedents, execution and
/// possibility claims, and quantifiers (including a bound variable in an
/// argument slot, an unknown fluent under a quantifier, and shadowing).
std::vector<NodePtr> sat_formula_family();

} // namespace sitcalc::test
