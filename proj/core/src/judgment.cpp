#include "sitcalc/judgment.hpp"

#include "sitcalc/printer.hpp"

namespace sitcalc {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::TTrue: return "T-True";
    case Rule::TFalse: return "T-False";
    case Rule::TVar: return "T-Var";
    case Rule::TUnv1: return "T-Unv1";
    case Rule::TEst1: return "T-Est1";
    case Rule::TUnv2: return "T-Unv2";
    case Rule::TEst2: return "T-Est2";
    case Rule::TNeg: return "T-Neg";
    case Rule::TSpt: return "T-Spt";
    case Rule::TConj: return "T-Conj";
    case Rule::TDisj: return "T-Disj";
    case Rule::TSeq: return "T-Seq";
    case Rule::TRelFlt: return "T-RelFlt";
    case Rule::TFunFlt: return "T-FunFlt";
    case Rule::TDo: return "T-Do";
    case Rule::TPoss: return "T-Poss";
    case Rule::MSupsetBT: return "M-SupsetBT";
    case Rule::MConjUnit: return "M-ConjUnit";
    case Rule::MEq: return "M-Eq";
    }
    return "?";
}

namespace {

bool folded(const Judgment& j, bool fold_var_leaves) {
    return fold_var_leaves && j.rule == Rule::TVar && j.premises.empty();
}

void render(const Judgment& j, const DerivationOptions& opts, int depth, std::string& out) {
    for (const Judgment& p : j.premises) {
        if (!folded(p, opts.fold_var_leaves)) {
            render(p, opts, depth + 1, out);
        }
    }
    out.append(static_cast<std::size_t>(depth * opts.indent_width), ' ');
    out += pretty_print(*j.subject);
    out += " : ";
    out += j.type.to_string();
    out += "  [";
    out += rule_name(j.rule);
    out += "]\n";
}

void collect(const Judgment& j, bool fold_var_leaves, std::vector<Rule>& out) {
    if (folded(j, fold_var_leaves)) {
        return;
    }
    for (const Judgment& p : j.premises) {
        collect(p, fold_var_leaves, out);
    }
    out.push_back(j.rule);
}

NodePtr unwrap_atom(const NodePtr& n) {
    return n->kind == NodeKind::Atom ? unwrap_atom(n->child(0)) : n;
}

/// Components of a same-kind connective chain, left to right.
void chain_components(const NodePtr& n, NodeKind kind, std::vector<NodePtr>& out) {
    if (n->kind == kind) {
        chain_components(n->child(0), kind, out);
        chain_components(n->child(1), kind, out);
    } else {
        out.push_back(n);
    }
}

struct Verifier {
    std::string check(const TypingContext& w, const Judgment& j) {
        const Node& n = *j.subject;
        switch (j.rule) {
        case Rule::TTrue:
            return axiom(j, NodeKind::TrueLit, Type::boolean());
        case Rule::TFalse:
            return axiom(j, NodeKind::FalseLit, Type::boolean());
        case Rule::TVar: {
            if (n.kind != NodeKind::Var) {
                return bad(j, "T-Var subject is not a variable");
            }
            if (!j.premises.empty()) {
                return bad(j, "T-Var takes no premises");
            }
            std::vector<Type> candidates = w.lookup(n.name);
            for (const Type& c : candidates) {
                if (c == j.type) {
                    return {};
                }
            }
            return bad(j, "T-Var type is not among the candidates for '" + n.name + "'");
        }
        case Rule::TNeg: {
            if (!is_neg_kind(n.kind)) {
                return bad(j, "T-Neg subject is not a negation");
            }
            if (j.premises.size() != 1) {
                return bad(j, "T-Neg takes one premise");
            }
            if (!equal(unwrap_atom(n.children[0]), unwrap_atom(j.premises[0].subject))) {
                return bad(j, "T-Neg premise is not the operand");
            }
            if (j.premises[0].type != j.type) {
                return bad(j, "T-Neg must preserve the operand type");
            }
            return premises(w, j);
        }
        case Rule::TSpt: {
            if (n.kind != NodeKind::Supset) {
                return bad(j, "T-Spt subject is not a term-layer =>");
            }
            if (j.premises.size() != 2) {
                return bad(j, "T-Spt takes two premises");
            }
            if (j.premises[0].type != j.premises[1].type) {
                return bad(j, "T-Spt sides must share one type");
            }
            if (j.type != Type::unit()) {
                return bad(j, "T-Spt concludes Unit");
            }
            return premises(w, j);
        }
        case Rule::TConj:
        case Rule::TDisj: {
            NodeKind want = j.rule == Rule::TConj ? NodeKind::Conj : NodeKind::Disj;
            if (n.kind != want) {
                return bad(j, "chain rule subject has the wrong connective");
            }
            return chain(w, j, want, Type::unit());
        }
        case Rule::TSeq: {
            if (n.kind != NodeKind::Seq) {
                return bad(j, "T-Seq subject is not a sequence");
            }
            if (j.premises.size() != n.children.size()) {
                return bad(j, "T-Seq needs one premise per element");
            }
            for (const Judgment& p : j.premises) {
                if (p.type != j.type) {
                    return bad(j, "T-Seq elements must all have the conclusion type");
                }
            }
            return premises(w, j);
        }
        case Rule::TRelFlt:
            return application(w, j, NodeKind::RelFluent, Type::situation());
        case Rule::TFunFlt:
            return application(w, j, NodeKind::FunFluent, Type::action());
        case Rule::TDo: {
            if (n.kind == NodeKind::SituationValue) {
                if (j.premises.size() != n.children.size()) {
                    return bad(j, "a situation value needs one premise per executed action");
                }
                for (const Judgment& p : j.premises) {
                    if (p.type != Type::action()) {
                        return bad(j, "executed actions must have type Action");
                    }
                }
                if (j.type != Type::situation()) {
                    return bad(j, "T-Do concludes Situation");
                }
                return premises(w, j);
            }
            return transition(w, j, NodeKind::Do, Type::situation());
        }
        case Rule::TPoss:
            return transition(w, j, NodeKind::Poss, Type::unit());
        case Rule::TUnv1:
            return quantifier(w, j, QuantKind::Forall, NodeKind::RelFluent);
        case Rule::TEst1:
            return quantifier(w, j, QuantKind::Exists, NodeKind::RelFluent);
        case Rule::TUnv2:
            return quantifier(w, j, QuantKind::Forall, NodeKind::FunFluent);
        case Rule::TEst2:
            return quantifier(w, j, QuantKind::Exists, NodeKind::FunFluent);
        case Rule::MSupsetBT: {
            if (n.kind != NodeKind::SupsetF) {
                return bad(j, "M-SupsetBT subject is not a formula-layer =>");
            }
            if (j.premises.size() != 2) {
                return bad(j, "M-SupsetBT takes two premises");
            }
            if (j.premises[0].type == Type::unit()) {
                if (j.type != Type::unit()) {
                    return bad(j, "a Unit guard concludes Unit");
                }
            } else if (j.premises[0].type != j.premises[1].type || j.type != j.premises[0].type) {
                return bad(j, "M-SupsetBT sides must share the conclusion type");
            }
            return premises(w, j);
        }
        case Rule::MConjUnit: {
            if (n.kind != NodeKind::ConjF && n.kind != NodeKind::DisjF) {
                return bad(j, "M-ConjUnit subject is not a formula-layer chain");
            }
            return chain(w, j, n.kind, Type::unit());
        }
        case Rule::MEq: {
            if (n.kind != NodeKind::Eq) {
                return bad(j, "M-Eq subject is not '='");
            }
            if (j.premises.size() != 2) {
                return bad(j, "M-Eq takes two premises");
            }
            if (j.premises[0].type != j.premises[1].type || j.type != j.premises[0].type) {
                return bad(j, "M-Eq sides must share the conclusion type");
            }
            return premises(w, j);
        }
        }
        return bad(j, "unknown rule");
    }

private:
    static std::string bad(const Judgment& j, const std::string& what) {
        return std::string(rule_name(j.rule)) + ": " + what + " (subject: " +
               pretty_print(*j.subject) + ")";
    }

    std::string premises(const TypingContext& w, const Judgment& j) {
        for (const Judgment& p : j.premises) {
            std::string err = check(w, p);
            if (!err.empty()) {
                return err;
            }
        }
        return {};
    }

    std::string axiom(const Judgment& j, NodeKind kind, const Type& type) {
        if (j.subject->kind != kind) {
            return bad(j, "subject has the wrong shape");
        }
        if (!j.premises.empty()) {
            return bad(j, "axioms take no premises");
        }
        if (j.type != type) {
            return bad(j, "wrong conclusion type");
        }
        return {};
    }

    std::string chain(const TypingContext& w, const Judgment& j, NodeKind kind,
                      const Type& conclusion) {
        std::vector<NodePtr> parts;
        chain_components(j.subject, kind, parts);
        if (j.premises.size() != parts.size()) {
            return bad(j, "chain rule needs one premise per component");
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!equal(unwrap_atom(parts[i]), unwrap_atom(j.premises[i].subject))) {
                return bad(j, "premise order does not match the chain components");
            }
        }
        for (const Judgment& p : j.premises) {
            if (p.type != j.premises[0].type) {
                return bad(j, "chain components must share one type");
            }
        }
        if (j.type != conclusion) {
            return bad(j, "wrong conclusion type for a uniform chain");
        }
        return premises(w, j);
    }

    std::string application(const TypingContext& w, const Judgment& j, NodeKind kind,
                            const Type& conclusion) {
        const Node& n = *j.subject;
        if (n.kind != kind) {
            return bad(j, "subject is not the right application shape");
        }
        const Type* sig = w.fluent(n.name);
        if (sig == nullptr) {
            return bad(j, "fluent '" + n.name + "' is not declared");
        }
        if (sig->param_count() != n.children.size() ||
            j.premises.size() != n.children.size()) {
            return bad(j, "application arity does not match the signature");
        }
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (j.premises[i].type != sig->param(i)) {
                return bad(j, "argument type does not match the signature");
            }
            if (!equal(n.children[i], j.premises[i].subject)) {
                return bad(j, "premise order does not match the arguments");
            }
        }
        if (j.type != conclusion) {
            return bad(j, "wrong conclusion type");
        }
        return premises(w, j);
    }

    std::string transition(const TypingContext& w, const Judgment& j, NodeKind kind,
                           const Type& conclusion) {
        const Node& n = *j.subject;
        if (n.kind != kind) {
            return bad(j, "subject is not do/poss");
        }
        if (j.premises.size() != 2) {
            return bad(j, "do/poss take an operand premise and a situation premise");
        }
        if (j.premises[0].type != Type::action()) {
            return bad(j, "operand must have type Action");
        }
        if (j.premises[1].type != Type::situation()) {
            return bad(j, "situation argument must have type Situation");
        }
        if (j.type != conclusion) {
            return bad(j, "wrong conclusion type");
        }
        return premises(w, j);
    }

    std::string quantifier(const TypingContext& w, const Judgment& j, QuantKind kind,
                           NodeKind core_kind) {
        const Node& n = *j.subject;
        if (n.kind != NodeKind::Quant || n.quant != kind) {
            return bad(j, "subject is not the right quantifier");
        }
        if (n.types.size() != 1) {
            return bad(j, "multi-candidate quantifiers must be expanded before checking");
        }
        if (j.premises.size() != 1) {
            return bad(j, "quantifier rules take the body premise");
        }
        NodePtr core = unwrap_atom(n.children[0]);
        while (is_neg_kind(core->kind)) {
            core = unwrap_atom(core->children[0]);
        }
        if (core->kind != core_kind) {
            return bad(j, "quantifier body has the wrong application shape");
        }
        if (j.premises[0].type != j.type) {
            return bad(j, "quantifier concludes its body's type");
        }
        TypingContext inner = w.bind(n.name, n.types);
        return premises(inner, j);
    }
};

} // namespace

std::string render_derivation(const Judgment& j, const DerivationOptions& opts) {
    std::string out;
    render(j, opts, 0, out);
    return out;
}

std::vector<Rule> rule_sequence(const Judgment& j, bool fold_var_leaves) {
    std::vector<Rule> out;
    collect(j, fold_var_leaves, out);
    return out;
}

std::string verify_judgment(const TypingContext& w, const Judgment& j) {
    Verifier v;
    return v.check(w, j);
}

} // namespace sitcalc
