#include "sitcalc/eval.hpp"

#include "sitcalc/printer.hpp"

#include <stdexcept>

namespace sitcalc {

const char* step_rule_name(StepRule r) {
    switch (r) {
    case StepRule::EUnv: return "E-Unv";
    case StepRule::EEst: return "E-Est";
    case StepRule::ENeg: return "E-Neg";
    case StepRule::ESpt: return "E-Spt";
    case StepRule::EConj: return "E-Conj";
    case StepRule::EDisj: return "E-Disj";
    case StepRule::ESeq: return "E-Seq";
    case StepRule::EDo: return "E-Do";
    case StepRule::EPoss: return "E-Poss";
    }
    return "?";
}

namespace {

/// An action term the transition machinery can execute: a functional-fluent
/// application under an optional chain of behavioral negations.
bool action_shaped(const Node& n) {
    if (n.kind == NodeKind::FunFluent) {
        return true;
    }
    if (n.kind == NodeKind::NegB) {
        return action_shaped(*n.children[0]);
    }
    return false;
}

NodePtr history_node(std::vector<NodePtr> history, Span span) {
    if (history.empty()) {
        return ast::var(kInitialSituation, span);
    }
    return ast::situation_value(std::move(history), span);
}

StepResult value_of(const Node& n) {
    StepResult r;
    r.status = StepResult::Status::IsValue;
    switch (n.kind) {
    case NodeKind::TrueLit: r.value = Value::boolean(true); break;
    case NodeKind::FalseLit: r.value = Value::boolean(false); break;
    case NodeKind::SituationValue: r.value = Value::ground_situation(n.children); break;
    default: r.value = Value::unit(); break;
    }
    return r;
}

StepResult stuck(const NodePtr& n, std::string reason) {
    StepResult r;
    r.status = StepResult::Status::Stuck;
    r.stuck_node = n;
    r.reason = std::move(reason);
    return r;
}

StepResult stepped(NodePtr next, StepRule rule) {
    StepResult r;
    r.status = StepResult::Status::Stepped;
    r.next = std::move(next);
    r.rule = rule;
    return r;
}

/// Steps the leftmost steppable child; a stuck child jams the parent.
/// Empty when every child is a normal form.
std::optional<StepResult> step_children(const NodePtr& n, StepRule rule,
                                        const TransitionPolicy& policy);

StepResult step_impl(const NodePtr& n, const TransitionPolicy& policy) {
    switch (n->kind) {
    case NodeKind::Var:
    case NodeKind::TrueLit:
    case NodeKind::FalseLit:
    case NodeKind::UnitLit:
    case NodeKind::SituationValue:
        return value_of(*n);

    case NodeKind::Neg:
    case NodeKind::NegB:
    case NodeKind::NegF: {
        if (auto r = step_children(n, StepRule::ENeg, policy)) {
            return *r;
        }
        return value_of(*n);
    }

    case NodeKind::Atom: {
        // Pure layer marker: delegate, preserving the inner step's rule.
        StepResult inner = step_impl(n->child(0), policy);
        if (inner.status == StepResult::Status::Stepped) {
            auto rebuilt = std::make_shared<Node>(*n);
            rebuilt->children[0] = inner.next;
            inner.next = rebuilt;
        }
        return inner;
    }

    case NodeKind::Supset:
    case NodeKind::SupsetF: {
        if (auto r = step_children(n, StepRule::ESpt, policy)) {
            return *r;
        }
        return value_of(*n);
    }
    case NodeKind::Conj:
    case NodeKind::ConjF: {
        if (auto r = step_children(n, StepRule::EConj, policy)) {
            return *r;
        }
        return value_of(*n);
    }
    case NodeKind::Disj:
    case NodeKind::DisjF: {
        if (auto r = step_children(n, StepRule::EDisj, policy)) {
            return *r;
        }
        return value_of(*n);
    }
    case NodeKind::Seq:
    case NodeKind::RelFluent:
    case NodeKind::FunFluent: {
        if (auto r = step_children(n, StepRule::ESeq, policy)) {
            return *r;
        }
        return value_of(*n);
    }

    case NodeKind::Quant: {
        StepRule rule = n->quant == QuantKind::Forall ? StepRule::EUnv : StepRule::EEst;
        if (auto r = step_children(n, rule, policy)) {
            return *r;
        }
        return value_of(*n);
    }

    case NodeKind::Do:
    case NodeKind::Poss: {
        const NodePtr& operand = n->child(0);
        const NodePtr& sit = n->child(1);

        StepResult op = step_impl(operand, policy);
        if (op.status == StepResult::Status::Stepped) {
            auto rebuilt = std::make_shared<Node>(*n);
            rebuilt->children[0] = op.next;
            return stepped(rebuilt, StepRule::ESeq);
        }
        if (op.status == StepResult::Status::Stuck) {
            return op;
        }

        // The redex case consumes a whole ground-rooted do-chain at once, so
        // an inner ground do never steps by congruence.
        if (flatten_history(sit)) {
            if (!action_shaped(*operand)) {
                return stuck(n, n->kind == NodeKind::Do
                                    ? "'do' needs an action to execute, got '" +
                                          pretty_print(*operand) + "'"
                                    : "'poss' needs an action to test, got '" +
                                          pretty_print(*operand) + "'");
            }
            auto successor = policy.successor(sit, operand);
            if (!successor) {
                return value_of(*n); // the policy declined: leave it in place
            }
            NodePtr next_sit = history_node(std::move(*successor), n->span);
            if (n->kind == NodeKind::Do) {
                return stepped(std::move(next_sit), StepRule::EDo);
            }
            return stepped(ast::supset(sit, std::move(next_sit), n->span), StepRule::EPoss);
        }

        // Not ground-rooted: the situation side may still contain work (for
        // example a nested poss); otherwise the node is a symbolic normal
        // form.
        StepResult st = step_impl(sit, policy);
        if (st.status == StepResult::Status::Stepped) {
            auto rebuilt = std::make_shared<Node>(*n);
            rebuilt->children[1] = st.next;
            return stepped(rebuilt, StepRule::ESeq);
        }
        if (st.status == StepResult::Status::Stuck) {
            return st;
        }
        return value_of(*n);
    }

    case NodeKind::Eq:
        return stuck(n, "no evaluation rule for '='");
    }
    return stuck(n, "malformed node");
}

std::optional<StepResult> step_children(const NodePtr& n, StepRule rule,
                                        const TransitionPolicy& policy) {
    for (std::size_t i = 0; i < n->children.size(); ++i) {
        StepResult r = step_impl(n->children[i], policy);
        if (r.status == StepResult::Status::Stepped) {
            auto rebuilt = std::make_shared<Node>(*n);
            rebuilt->children[i] = r.next;
            return stepped(rebuilt, rule);
        }
        if (r.status == StepResult::Status::Stuck) {
            return r;
        }
    }
    return std::nullopt;
}

bool one_changed_child(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.name != b.name || a.children.size() != b.children.size()) {
        return false;
    }
    std::size_t changed = 0;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!equal(*a.children[i], *b.children[i])) {
            ++changed;
        }
    }
    return changed == 1;
}

NodePtr peel_atoms(const NodePtr& n) {
    return n->kind == NodeKind::Atom ? peel_atoms(n->child(0)) : n;
}

} // namespace

TransitionPolicy TransitionPolicy::default_policy() {
    TransitionPolicy p;
    p.successor = [](const NodePtr& sit, const NodePtr& bt) -> std::optional<std::vector<NodePtr>> {
        auto history = flatten_history(sit);
        if (!history) {
            return std::nullopt;
        }
        history->push_back(bt);
        return history;
    };
    return p;
}

std::optional<std::vector<NodePtr>> flatten_history(const NodePtr& sit) {
    switch (sit->kind) {
    case NodeKind::Var:
        if (sit->name == kInitialSituation) {
            return std::vector<NodePtr>{};
        }
        return std::nullopt;
    case NodeKind::SituationValue:
        return sit->children;
    case NodeKind::Do: {
        auto inner = flatten_history(sit->child(1));
        if (!inner) {
            return std::nullopt;
        }
        inner->push_back(sit->child(0));
        return inner;
    }
    default:
        return std::nullopt;
    }
}

StepResult step(const NodePtr& node, const TransitionPolicy& policy) {
    return step_impl(node, policy);
}

EvalResult evaluate(const NodePtr& node, const TransitionPolicy& policy, int fuel) {
    if (fuel < 1) {
        throw std::invalid_argument("evaluate needs fuel >= 1");
    }
    EvalResult result;
    NodePtr current = node;
    for (int i = 0; i < fuel; ++i) {
        StepResult r = step(current, policy);
        switch (r.status) {
        case StepResult::Status::Stepped:
            current = r.next;
            result.trace.push_back(TraceEntry{current, r.rule});
            continue;
        case StepResult::Status::IsValue:
            result.status = EvalResult::Status::Value;
            result.value = r.value;
            result.last = current;
            return result;
        case StepResult::Status::Stuck:
            result.status = EvalResult::Status::Stuck;
            result.stuck_node = r.stuck_node;
            result.stuck_reason = r.reason;
            result.last = current;
            return result;
        }
    }
    result.status = EvalResult::Status::OutOfFuel;
    result.last = current;
    return result;
}

std::string verify_step(const NodePtr& before, const NodePtr& after, StepRule rule) {
    const NodePtr b = peel_atoms(before);
    const NodePtr a = peel_atoms(after);
    auto mismatch = [&](const char* what) {
        return std::string(step_rule_name(rule)) + ": " + what;
    };

    switch (rule) {
    case StepRule::EDo: {
        if (b->kind != NodeKind::Do) {
            return mismatch("subject is not a do node");
        }
        if (!action_shaped(*b->child(0))) {
            return mismatch("operand is not action-shaped");
        }
        if (!flatten_history(b->child(1))) {
            return mismatch("situation operand is not ground-rooted");
        }
        if (a->kind != NodeKind::SituationValue &&
            !(a->kind == NodeKind::Var && a->name == kInitialSituation)) {
            return mismatch("result is not a situation value");
        }
        return {};
    }
    case StepRule::EPoss: {
        if (b->kind != NodeKind::Poss) {
            return mismatch("subject is not a poss node");
        }
        if (!action_shaped(*b->child(0))) {
            return mismatch("operand is not action-shaped");
        }
        if (!flatten_history(b->child(1))) {
            return mismatch("situation operand is not ground-rooted");
        }
        if (a->kind != NodeKind::Supset) {
            return mismatch("result is not a term-layer '=>'");
        }
        if (!equal(a->child(0), b->child(1))) {
            return mismatch("left side must be the original situation operand");
        }
        const Node& succ = *a->child(1);
        if (succ.kind != NodeKind::SituationValue &&
            !(succ.kind == NodeKind::Var && succ.name == kInitialSituation)) {
            return mismatch("right side is not a situation value");
        }
        return {};
    }
    case StepRule::ENeg:
        if (!is_neg_kind(b->kind)) {
            return mismatch("subject is not a negation");
        }
        if (!one_changed_child(*b, *a)) {
            return mismatch("congruence must rewrite exactly the operand");
        }
        return {};
    case StepRule::ESpt:
        if (b->kind != NodeKind::Supset && b->kind != NodeKind::SupsetF) {
            return mismatch("subject is not '=>'");
        }
        if (!one_changed_child(*b, *a)) {
            return mismatch("congruence must rewrite exactly one side");
        }
        return {};
    case StepRule::EConj:
        if (b->kind != NodeKind::Conj && b->kind != NodeKind::ConjF) {
            return mismatch("subject is not a conjunction");
        }
        if (!one_changed_child(*b, *a)) {
            return mismatch("congruence must rewrite exactly one side");
        }
        return {};
    case StepRule::EDisj:
        if (b->kind != NodeKind::Disj && b->kind != NodeKind::DisjF) {
            return mismatch("subject is not a disjunction");
        }
        if (!one_changed_child(*b, *a)) {
            return mismatch("congruence must rewrite exactly one side");
        }
        return {};
    case StepRule::ESeq: {
        switch (b->kind) {
        case NodeKind::Seq:
        case NodeKind::RelFluent:
        case NodeKind::FunFluent:
        case NodeKind::Do:
        case NodeKind::Poss:
            break;
        default:
            return mismatch("subject does not carry an argument vector");
        }
        if (!one_changed_child(*b, *a)) {
            return mismatch("congruence must rewrite exactly one element");
        }
        return {};
    }
    case StepRule::EUnv:
    case StepRule::EEst: {
        QuantKind want = rule == StepRule::EUnv ? QuantKind::Forall : QuantKind::Exists;
        if (b->kind != NodeKind::Quant || b->quant != want) {
            return mismatch("subject is not the right quantifier");
        }
        if (a->kind != NodeKind::Quant || !one_changed_child(*b, *a)) {
            return mismatch("congruence must rewrite exactly the body");
        }
        return {};
    }
    }
    return mismatch("unknown rule");
}

} // namespace sitcalc
