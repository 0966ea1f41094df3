#pragma once

#include "sitcalc/ast.hpp"
#include "sitcalc/world.hpp"

#include <stdexcept>
#include <string>

namespace sitcalc {

/// Raised when a formula mentions a name the world does not interpret at
/// all, or a construct the finite-model semantics has no clause for ('=').
/// Surfaces as E010.
class UninterpretedError : public std::runtime_error {
public:
    UninterpretedError(std::string what_name, Span where, const std::string& detail)
        : std::runtime_error(detail), name(std::move(what_name)), span(where) {}

    std::string name;
    Span span;
};

/// Finite-model satisfaction, clause by clause:
///
///   w |= x            iff x is an instance of w
///   w |= ~t           iff not (w |= t)
///   w |= t1 => t2     iff w |= t1 implies w |= t2; a situation name on the
///                     left is read as "reachable", i.e. membership in the
///                     world's situation list
///   w |= t1 /\ t2     both;   w |= t1 \/ t2   either
///   w |= t1, .., tn   every element
///   w |= r(args, s)   iff every argument is an instance and the tuple
///                     (args, s) is in r's table; non-name arguments never
///                     match a table row
///   w |= f(args)      iff the tuple is in f's table
///   w |= do(bt, s)    iff bt holds in some listed situation
///   w |= poss(bt, s)  iff for some listed situation si, w |= si => do(bt, si)
///   w |= (Q x: T) b   iff for all (forall) / some (exists) listed situation
///                     si, w |= b[x := si] — the quantifier ranges over the
///                     situation list
///
/// Quantifiers ranging over the situation list regardless of the bound
/// variable's declared type is deliberate, not an oversight; the brute-force
/// oracle in the test suite implements the same reading independently.
bool satisfies(const World& w, const NodePtr& node);

} // namespace sitcalc
