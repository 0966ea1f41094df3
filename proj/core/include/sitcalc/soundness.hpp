#pragma once

#include "sitcalc/context.hpp"
#include "sitcalc/eval.hpp"
#include "sitcalc/typechecker.hpp"

#include <optional>
#include <vector>

namespace sitcalc {

// Preservation and progress checks over a single formula's evaluation trace.
// These are the system's central testable claims; the randomized suite in
// tests/ runs them over generated well-typed formulas.

struct PreservationViolation {
    int step_index = 0; // 0 = first step
    NodePtr before;
    NodePtr after;
    std::optional<Type> before_type;
    std::optional<Type> after_type; // nullopt: node no longer typechecks
};

struct PreservationReport {
    bool initially_well_typed = false;
    int steps = 0;
    std::vector<PreservationViolation> violations;

    bool ok() const { return initially_well_typed && violations.empty(); }
};

/// Evaluates `f` under `policy` and re-typechecks every node along the
/// trace, recording each step whose type differs from the initial one.
PreservationReport check_preservation(const TypingContext& w, const NodePtr& f,
                                      const TransitionPolicy& policy, int max_steps = 1000);

struct ProgressReport {
    bool initially_well_typed = false;
    int steps = 0;
    bool stuck = false;
    NodePtr stuck_node;
    std::string stuck_reason;

    /// Progress holds if every node along the trace was a value or stepped.
    bool ok() const { return initially_well_typed && !stuck; }
};

ProgressReport check_progress(const TypingContext& w, const NodePtr& f,
                              const TransitionPolicy& policy, int max_steps = 1000);

} // namespace sitcalc
