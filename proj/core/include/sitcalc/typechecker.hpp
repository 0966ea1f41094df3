#pragma once

#include "sitcalc/ast.hpp"
#include "sitcalc/context.hpp"
#include "sitcalc/diagnostic.hpp"
#include "sitcalc/judgment.hpp"
#include "sitcalc/program.hpp"

#include <optional>
#include <vector>

namespace sitcalc {

// ===========================================================================
// Rule summary
// ===========================================================================
//
// Term layer:
//   T-True / T-False    true, false : Bool
//   T-Var               x : T when T is among the declared candidates for x.
//                       At positions with an expected type, the expectation
//                       selects the candidate; elsewhere the candidate set
//                       must be a singleton.
//   T-Neg               ~t : T when t : T (all negation layers type this way)
//   T-Spt/T-Conj/T-Disj t1 op t2 : Unit when t1 and t2 share one type — a
//                       uniformly-typed collection is a unit value
//   T-Seq               t1, ..., tn : T when every element has type T
//
// Behavioral layer:
//   T-RelFlt            r(args, sit) : Situation, each argument checked
//                       against the declared signature position-by-position
//   T-FunFlt            f(args) : Action, likewise
//   T-Do                do(bt, s) : Situation when bt : Action, s : Situation
//   T-Poss              poss(bt, s) : Unit classifying "bt is executable"
//   T-Unv1/T-Est1       quantifier over a (possibly negated) relational-
//                       fluent body; every occurrence of the bound variable
//                       in the application must demand exactly the declared
//                       type; result is the body's type
//   T-Unv2/T-Est2       same for functional-fluent bodies
//
// Formula layer:
//   M-SupsetBT          lhs => rhs over behavioral sides: both sides must
//                       share one type, which is the result. A Unit-typed
//                       left side (a poss guard) accepts any well-typed right
//                       side and yields Unit.
//   M-ConjUnit          /\ and \/ chains are flattened; all components must
//                       share one type and the chain types as Unit
//   M-Eq                both sides of '=' must share one type (E006)
//
// Multi-candidate quantifiers are expanded (expand_typed_quantifier) before
// checking; the derivation reported is the expansion's.
//
// Failure reporting: checking continues across statements, but inside one
// statement the first failing premise aborts that statement's derivation.
// ===========================================================================

enum class QuantifierMode : std::uint8_t {
    /// forall expands to a conjunction over the candidate types, exists to a
    /// disjunction.
    Standard,
    /// The convention of the formulation this system reproduces, which swaps
    /// the two connectives (forall -> disjunction, exists -> conjunction).
    AsWritten,
};

struct CheckOptions {
    QuantifierMode quantifier_mode = QuantifierMode::Standard;
    std::size_t max_errors = 0; // 0 = unlimited
};

std::optional<Judgment> typecheck_term(const TypingContext& w, const NodePtr& t,
                                       DiagnosticSink& sink, const CheckOptions& opts = {});
std::optional<Judgment> typecheck_behavioral(const TypingContext& w, const NodePtr& bt,
                                             DiagnosticSink& sink, const CheckOptions& opts = {});
std::optional<Judgment> typecheck_formula(const TypingContext& w, const NodePtr& f,
                                          DiagnosticSink& sink, const CheckOptions& opts = {});

/// Quantifier checking against a single candidate type (the single-type case
/// of the Quant node). `body` is the quantifier body with `variable` not yet
/// bound in `w`.
std::optional<Judgment> typecheck_quantifier(const TypingContext& w, QuantKind kind,
                                             const std::string& variable, const Type& type,
                                             const NodePtr& body, DiagnosticSink& sink,
                                             const CheckOptions& opts = {});

/// Rewrites a multi-candidate quantifier into the connective chain over its
/// single-type instances. Single-candidate quantifiers are returned as-is.
NodePtr expand_typed_quantifier(const NodePtr& q, QuantifierMode mode);

// ---------------------------------------------------------------------------
// Whole-program checking.
// ---------------------------------------------------------------------------

struct StatementVerdict {
    int index = 0;
    std::string name;
    bool well_typed = false;
    std::optional<Judgment> judgment; // present iff well_typed
};

struct CheckResult {
    std::vector<StatementVerdict> statements;
    std::vector<Diagnostic> diagnostics; // sorted by (statement, span)
    bool all_well_typed() const;
};

CheckResult check_program(const SourceProgram& p, const CheckOptions& opts = {});

} // namespace sitcalc
