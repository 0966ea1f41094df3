#pragma once

#include "sitcalc/ast.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sitcalc {

// Small-step evaluation. The only redexes are do(bt, s) and poss(bt, s)
// whose operand is a normal action term and whose situation operand is
// ground-rooted (reducible to a history starting at s0):
//
//   E-Do    do(bt, s)   -->  the successor situation value
//   E-Poss  poss(bt, s) -->  s => successor(s, bt)
//
// Everything else is congruence: E-Neg descends through negations, E-Spt /
// E-Conj / E-Disj step the leftmost steppable side of their connective,
// E-Seq steps the leftmost steppable element of a sequence or application
// argument list, and E-Unv / E-Est step a quantifier body. The rule reported
// for a step is the one at the root of the rewritten node.
//
// A situation with a variable root (do(a, s) for bound s) has no history to
// extend and is simply a normal form, as are fluent atoms and connectives
// over normal parts: they denote assertions the evaluator has no world to
// decide. Such normal forms are values with payload `unit`. Stuck is
// reserved for genuinely jammed nodes: '=' (which has no evaluation rule)
// and do/poss whose operands are normal but of the wrong shape.

struct TransitionPolicy {
    /// Maps a ground-rooted situation term plus an action term to the
    /// successor situation's history. Returning nullopt means no transition
    /// is defined there (e.g. the situation is symbolic) and the node is
    /// left as a normal form. Must be deterministic.
    std::function<std::optional<std::vector<NodePtr>>(const NodePtr& sit, const NodePtr& bt)>
        successor;

    /// Appends the action to the situation's history.
    static TransitionPolicy default_policy();
};

/// History of a ground-rooted situation term: s0 itself, a situation value,
/// or a do-chain over those. nullopt for symbolic situations.
std::optional<std::vector<NodePtr>> flatten_history(const NodePtr& sit);

enum class StepRule : std::uint8_t { EUnv, EEst, ENeg, ESpt, EConj, EDisj, ESeq, EDo, EPoss };
const char* step_rule_name(StepRule r);

struct StepResult {
    enum class Status : std::uint8_t { Stepped, IsValue, Stuck };

    Status status = Status::IsValue;

    // Stepped
    NodePtr next;
    StepRule rule = StepRule::EDo;

    // IsValue
    Value value;

    // Stuck
    NodePtr stuck_node;
    std::string reason;
};

StepResult step(const NodePtr& node, const TransitionPolicy& policy = TransitionPolicy::default_policy());

struct TraceEntry {
    NodePtr node; // the node after this step
    StepRule rule;
};

struct EvalResult {
    enum class Status : std::uint8_t { Value, Stuck, OutOfFuel };

    Status status = Status::Value;
    Value value;
    NodePtr stuck_node;
    std::string stuck_reason;
    NodePtr last; // final node reached (for OutOfFuel, the node fuel ran out on)
    std::vector<TraceEntry> trace;
};

/// Iterates step at most `fuel` times. fuel must be >= 1.
EvalResult evaluate(const NodePtr& node,
                    const TransitionPolicy& policy = TransitionPolicy::default_policy(),
                    int fuel = 1000);

/// Schema check for a recorded step: the reported rule must match the shape
/// of the rewrite (right node kind, exactly one changed child for
/// congruences, proper redex shapes for E-Do/E-Poss). Empty string on
/// success, else the violation.
std::string verify_step(const NodePtr& before, const NodePtr& after, StepRule rule);

} // namespace sitcalc
