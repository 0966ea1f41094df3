#include "sitcalc/soundness.hpp"

namespace sitcalc {

namespace {

std::optional<Type> type_of(const TypingContext& w, const NodePtr& n) {
    DiagnosticSink sink;
    auto j = typecheck_formula(w, n, sink);
    if (!j) {
        return std::nullopt;
    }
    return j->type;
}

} // namespace

PreservationReport check_preservation(const TypingContext& w, const NodePtr& f,
                                      const TransitionPolicy& policy, int max_steps) {
    PreservationReport report;
    std::optional<Type> current_type = type_of(w, f);
    report.initially_well_typed = current_type.has_value();
    if (!report.initially_well_typed) {
        return report;
    }

    NodePtr current = f;
    for (int i = 0; i < max_steps; ++i) {
        StepResult r = step(current, policy);
        if (r.status != StepResult::Status::Stepped) {
            break;
        }
        std::optional<Type> next_type = type_of(w, r.next);
        if (!next_type || *next_type != *current_type) {
            PreservationViolation v;
            v.step_index = report.steps;
            v.before = current;
            v.after = r.next;
            v.before_type = current_type;
            v.after_type = next_type;
            report.violations.push_back(std::move(v));
        }
        if (next_type) {
            current_type = next_type;
        }
        current = r.next;
        ++report.steps;
    }
    return report;
}

ProgressReport check_progress(const TypingContext& w, const NodePtr& f,
                              const TransitionPolicy& policy, int max_steps) {
    ProgressReport report;
    report.initially_well_typed = type_of(w, f).has_value();
    if (!report.initially_well_typed) {
        return report;
    }

    NodePtr current = f;
    for (int i = 0; i < max_steps; ++i) {
        StepResult r = step(current, policy);
        if (r.status == StepResult::Status::IsValue) {
            return report;
        }
        if (r.status == StepResult::Status::Stuck) {
            report.stuck = true;
            report.stuck_node = r.stuck_node;
            report.stuck_reason = r.reason;
            return report;
        }
        current = r.next;
        ++report.steps;
    }
    // Out of budget with steps still available: progress held at every node
    // we saw.
    return report;
}

} // namespace sitcalc
