#include "sitcalc/typechecker.hpp"

#include "sitcalc/printer.hpp"

#include <sstream>

namespace sitcalc {

namespace {

NodePtr unwrap_atom(const NodePtr& n) {
    return n->kind == NodeKind::Atom ? unwrap_atom(n->child(0)) : n;
}

std::string type_list(const std::vector<Type>& types) {
    std::string out;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += types[i].to_string();
    }
    return out;
}

std::string candidate_list(const std::vector<Type>& types) {
    std::string out;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (i > 0) {
            out += " | ";
        }
        out += types[i].to_string();
    }
    return out;
}

void flatten_chain(const NodePtr& n, NodeKind kind, std::vector<NodePtr>& out) {
    if (n->kind == kind) {
        flatten_chain(n->child(0), kind, out);
        flatten_chain(n->child(1), kind, out);
    } else {
        out.push_back(n);
    }
}

/// Free occurrence of `name` anywhere in `n` (stops at shadowing binders).
bool occurs_free(const Node& n, const std::string& name) {
    if (n.kind == NodeKind::Var) {
        return n.name == name;
    }
    if (n.kind == NodeKind::Quant && n.name == name) {
        return false;
    }
    for (const NodePtr& c : n.children) {
        if (occurs_free(*c, name)) {
            return true;
        }
    }
    return false;
}

class Checker {
public:
    Checker(DiagnosticSink& sink, const CheckOptions& opts) : sink_(sink), opts_(opts) {}

    /// `expected`, when set, is threaded through negations into variable
    /// lookups so a multi-candidate variable resolves to the demanded type.
    /// `mismatch` is the code reported when the expectation fails (E008 at
    /// do/poss operand positions, E003 everywhere else).
    std::optional<Judgment> check(const TypingContext& w, const NodePtr& n,
                                  const std::optional<Type>& expected,
                                  DiagCode mismatch = DiagCode::E003) {
        switch (n->kind) {
        case NodeKind::Var: return check_var(w, n, expected, mismatch);
        case NodeKind::TrueLit: return done(n, Type::boolean(), Rule::TTrue, {}, expected, mismatch);
        case NodeKind::FalseLit:
            return done(n, Type::boolean(), Rule::TFalse, {}, expected, mismatch);
        case NodeKind::UnitLit:
            error(DiagCode::E003, n, "no typing rule applies to the unit literal");
            return std::nullopt;
        case NodeKind::Neg:
        case NodeKind::NegB:
        case NodeKind::NegF: {
            // Negation preserves the operand type in every layer, so the
            // expectation passes straight through.
            auto operand = check(w, n->child(0), expected, mismatch);
            if (!operand) {
                return std::nullopt;
            }
            Type t = operand->type;
            return Judgment{n, t, Rule::TNeg, {std::move(*operand)}};
        }
        case NodeKind::Supset: {
            auto lhs = check(w, n->child(0), std::nullopt);
            if (!lhs) {
                return std::nullopt;
            }
            auto rhs = check(w, n->child(1), std::nullopt);
            if (!rhs) {
                return std::nullopt;
            }
            if (lhs->type != rhs->type) {
                error(DiagCode::E004, n,
                      "sides of '=>' have different types: " + lhs->type.to_string() + " vs " +
                          rhs->type.to_string());
                return std::nullopt;
            }
            return done(n, Type::unit(), Rule::TSpt, {std::move(*lhs), std::move(*rhs)}, expected,
                        mismatch);
        }
        case NodeKind::Conj:
        case NodeKind::Disj:
            return check_chain(w, n, n->kind == NodeKind::Conj ? Rule::TConj : Rule::TDisj,
                               expected, mismatch);
        case NodeKind::Seq: {
            std::vector<Judgment> elems;
            for (const NodePtr& e : n->children) {
                auto je = check(w, e, std::nullopt);
                if (!je) {
                    return std::nullopt;
                }
                elems.push_back(std::move(*je));
            }
            for (const Judgment& je : elems) {
                if (je.type != elems.front().type) {
                    error(DiagCode::E005, n,
                          "sequence elements have different types: " + premise_types(elems));
                    return std::nullopt;
                }
            }
            Type t = elems.front().type;
            return done(n, t, Rule::TSeq, std::move(elems), expected, mismatch);
        }
        case NodeKind::SituationValue: {
            std::vector<Judgment> acts;
            for (const NodePtr& a : n->children) {
                auto ja = check(w, a, Type::action(), DiagCode::E008);
                if (!ja) {
                    return std::nullopt;
                }
                acts.push_back(std::move(*ja));
            }
            return done(n, Type::situation(), Rule::TDo, std::move(acts), expected, mismatch);
        }
        case NodeKind::RelFluent:
            return check_application(w, n, true, expected, mismatch);
        case NodeKind::FunFluent:
            return check_application(w, n, false, expected, mismatch);
        case NodeKind::Do:
        case NodeKind::Poss: {
            auto operand = check(w, n->child(0), Type::action(), DiagCode::E008);
            if (!operand) {
                return std::nullopt;
            }
            auto sit = check(w, n->child(1), Type::situation());
            if (!sit) {
                return std::nullopt;
            }
            bool is_do = n->kind == NodeKind::Do;
            return done(n, is_do ? Type::situation() : Type::unit(),
                        is_do ? Rule::TDo : Rule::TPoss, {std::move(*operand), std::move(*sit)},
                        expected, mismatch);
        }
        case NodeKind::Atom:
            // Layer marker only; it contributes no rule of its own.
            return check(w, n->child(0), expected, mismatch);
        case NodeKind::SupsetF: {
            auto lhs = check(w, n->child(0), std::nullopt);
            if (!lhs) {
                return std::nullopt;
            }
            auto rhs = check(w, n->child(1), std::nullopt);
            if (!rhs) {
                return std::nullopt;
            }
            // A Unit-typed guard (an executability assertion) accepts a
            // consequent of any type; otherwise the sides must agree, and
            // the implication carries their common type.
            Type t = Type::unit();
            if (lhs->type != Type::unit()) {
                if (lhs->type != rhs->type) {
                    error(DiagCode::E004, n,
                          "sides of '=>' have different types: " + lhs->type.to_string() +
                              " vs " + rhs->type.to_string());
                    return std::nullopt;
                }
                t = lhs->type;
            }
            return done(n, t, Rule::MSupsetBT, {std::move(*lhs), std::move(*rhs)}, expected,
                        mismatch);
        }
        case NodeKind::ConjF:
        case NodeKind::DisjF:
            return check_chain(w, n, Rule::MConjUnit, expected, mismatch);
        case NodeKind::Eq: {
            auto lhs = check(w, n->child(0), std::nullopt);
            if (!lhs) {
                return std::nullopt;
            }
            auto rhs = check(w, n->child(1), std::nullopt);
            if (!rhs) {
                return std::nullopt;
            }
            if (lhs->type != rhs->type) {
                error(DiagCode::E006, n,
                      "sides of '=' have different types: " + lhs->type.to_string() + " vs " +
                          rhs->type.to_string());
                return std::nullopt;
            }
            Type t = lhs->type;
            return done(n, t, Rule::MEq, {std::move(*lhs), std::move(*rhs)}, expected, mismatch);
        }
        case NodeKind::Quant:
            return check_quant(w, n, expected, mismatch);
        }
        error(DiagCode::E003, n, "no typing rule applies here");
        return std::nullopt;
    }

private:
    void error(DiagCode code, const NodePtr& n, std::string message) {
        Diagnostic d;
        d.code = code;
        d.message = std::move(message);
        d.span = n->span;
        d.node = n;
        sink_.emit(std::move(d));
    }

    static std::string premise_types(const std::vector<Judgment>& js) {
        std::vector<Type> ts;
        ts.reserve(js.size());
        for (const Judgment& j : js) {
            ts.push_back(j.type);
        }
        return type_list(ts);
    }

    /// Final gate of every successful rule: enforce a pending expectation.
    std::optional<Judgment> done(const NodePtr& n, Type type, Rule rule,
                                 std::vector<Judgment> premises,
                                 const std::optional<Type>& expected, DiagCode mismatch) {
        if (expected && type != *expected) {
            error(mismatch, n,
                  mismatch == DiagCode::E008
                      ? "operand must have type " + expected->to_string() + ", got " +
                            type.to_string()
                      : "expression has type " + type.to_string() + ", expected " +
                            expected->to_string());
            return std::nullopt;
        }
        return Judgment{n, std::move(type), rule, std::move(premises)};
    }

    std::optional<Judgment> check_var(const TypingContext& w, const NodePtr& n,
                                      const std::optional<Type>& expected, DiagCode mismatch) {
        std::vector<Type> candidates = w.lookup(n->name);
        if (candidates.empty()) {
            error(DiagCode::E001, n, "unbound name '" + n->name + "'");
            return std::nullopt;
        }
        if (expected) {
            for (const Type& c : candidates) {
                if (c == *expected) {
                    return Judgment{n, c, Rule::TVar, {}};
                }
            }
            error(mismatch, n,
                  "variable '" + n->name + "' has type " + candidate_list(candidates) +
                      ", but this position expects " + expected->to_string());
            return std::nullopt;
        }
        if (candidates.size() > 1) {
            error(DiagCode::E003, n,
                  "variable '" + n->name + "' is declared with candidates " +
                      candidate_list(candidates) +
                      " and this position does not determine one");
            return std::nullopt;
        }
        return Judgment{n, candidates.front(), Rule::TVar, {}};
    }

    std::optional<Judgment> check_chain(const TypingContext& w, const NodePtr& n, Rule rule,
                                        const std::optional<Type>& expected, DiagCode mismatch) {
        std::vector<NodePtr> parts;
        flatten_chain(n, n->kind, parts);
        std::vector<Judgment> premises;
        premises.reserve(parts.size());
        for (const NodePtr& p : parts) {
            auto jp = check(w, p, std::nullopt);
            if (!jp) {
                return std::nullopt;
            }
            premises.push_back(std::move(*jp));
        }
        for (const Judgment& jp : premises) {
            if (jp.type != premises.front().type) {
                const char* what = n->kind == NodeKind::Conj || n->kind == NodeKind::ConjF
                                       ? "conjuncts"
                                       : "disjuncts";
                error(DiagCode::E005, n,
                      std::string(what) + " have different types: " + premise_types(premises));
                return std::nullopt;
            }
        }
        return done(n, Type::unit(), rule, std::move(premises), expected, mismatch);
    }

    std::optional<Judgment> check_application(const TypingContext& w, const NodePtr& n,
                                              bool relational, const std::optional<Type>& expected,
                                              DiagCode mismatch) {
        const Type* sig = w.fluent(n->name);
        if (sig == nullptr) {
            error(DiagCode::E001, n, "unbound fluent '" + n->name + "'");
            return std::nullopt;
        }
        if (relational != is_relational_signature(*sig) ||
            sig->param_count() != n->children.size()) {
            std::ostringstream msg;
            msg << "'" << n->name << "' expects " << sig->param_count() << " argument"
                << (sig->param_count() == 1 ? "" : "s");
            if (is_relational_signature(*sig)) {
                msg << " (the last a situation)";
            }
            msg << ", got " << n->children.size();
            error(DiagCode::E002, n, msg.str());
            return std::nullopt;
        }
        std::vector<Judgment> premises;
        premises.reserve(n->children.size());
        for (std::size_t i = 0; i < n->children.size(); ++i) {
            auto ja = check(w, n->child(i), sig->param(i));
            if (!ja) {
                return std::nullopt;
            }
            premises.push_back(std::move(*ja));
        }
        return done(n, relational ? Type::situation() : Type::action(),
                    relational ? Rule::TRelFlt : Rule::TFunFlt, std::move(premises), expected,
                    mismatch);
    }

    std::optional<Judgment> check_quant(const TypingContext& w, const NodePtr& n,
                                        const std::optional<Type>& expected, DiagCode mismatch) {
        if (n->types.size() > 1) {
            NodePtr expanded = expand_typed_quantifier(n, opts_.quantifier_mode);
            return check(w, expanded, expected, mismatch);
        }
        const Type& bound = n->types.front();

        // The body must be a fluent application under an optional chain of
        // negations; anything else has no quantifier rule.
        NodePtr core = unwrap_atom(n->child(0));
        while (is_neg_kind(core->kind)) {
            core = unwrap_atom(core->child(0));
        }
        if (core->kind != NodeKind::RelFluent && core->kind != NodeKind::FunFluent) {
            error(DiagCode::E003, n->child(0),
                  "no quantifier rule applies: the body must be a fluent application, "
                  "possibly negated");
            return std::nullopt;
        }

        // Every direct argument occurrence of the bound variable must sit at
        // a position whose declared type is exactly the bound type. When the
        // fluent is unknown or mis-applied, these checks step aside so the
        // body check below reports E001/E002 instead.
        if (const Type* sig = w.fluent(core->name);
            sig != nullptr && sig->param_count() == core->children.size()) {
            if (!occurs_free(*core, n->name)) {
                error(DiagCode::E009, n,
                      "quantified variable '" + n->name + "' does not occur in the body");
                return std::nullopt;
            }
            for (std::size_t i = 0; i < core->children.size(); ++i) {
                const Node& arg = *core->child(i);
                if (arg.kind != NodeKind::Var || arg.name != n->name) {
                    continue;
                }
                if (sig->param(i) != bound) {
                    std::ostringstream msg;
                    msg << "bound variable '" << n->name << "' occurs at position " << (i + 1)
                        << " of '" << core->name << "', which expects "
                        << sig->param(i).to_string() << ", not " << bound.to_string();
                    error(DiagCode::E003, core->child(i), msg.str());
                    return std::nullopt;
                }
            }
        }

        TypingContext inner = w.bind(n->name, n->types);
        auto body = check(inner, n->child(0), std::nullopt);
        if (!body) {
            return std::nullopt;
        }
        Rule rule;
        if (core->kind == NodeKind::RelFluent) {
            rule = n->quant == QuantKind::Forall ? Rule::TUnv1 : Rule::TEst1;
        } else {
            rule = n->quant == QuantKind::Forall ? Rule::TUnv2 : Rule::TEst2;
        }
        Type t = body->type;
        return done(n, t, rule, {std::move(*body)}, expected, mismatch);
    }

    DiagnosticSink& sink_;
    CheckOptions opts_;
};

} // namespace

std::optional<Judgment> typecheck_term(const TypingContext& w, const NodePtr& t,
                                       DiagnosticSink& sink, const CheckOptions& opts) {
    return Checker(sink, opts).check(w, t, std::nullopt);
}

std::optional<Judgment> typecheck_behavioral(const TypingContext& w, const NodePtr& bt,
                                             DiagnosticSink& sink, const CheckOptions& opts) {
    return Checker(sink, opts).check(w, bt, std::nullopt);
}

std::optional<Judgment> typecheck_formula(const TypingContext& w, const NodePtr& f,
                                          DiagnosticSink& sink, const CheckOptions& opts) {
    return Checker(sink, opts).check(w, f, std::nullopt);
}

std::optional<Judgment> typecheck_quantifier(const TypingContext& w, QuantKind kind,
                                             const std::string& variable, const Type& type,
                                             const NodePtr& body, DiagnosticSink& sink,
                                             const CheckOptions& opts) {
    NodePtr q = ast::quant(kind, variable, {type}, body, body->span);
    return Checker(sink, opts).check(w, q, std::nullopt);
}

NodePtr expand_typed_quantifier(const NodePtr& q, QuantifierMode mode) {
    if (q->kind != NodeKind::Quant || q->types.size() <= 1) {
        return q;
    }
    bool conjunctive = (q->quant == QuantKind::Forall) == (mode == QuantifierMode::Standard);
    NodePtr chain;
    for (const Type& t : q->types) {
        NodePtr instance = ast::quant(q->quant, q->name, {t}, q->child(0), q->span);
        if (!chain) {
            chain = std::move(instance);
        } else if (conjunctive) {
            chain = ast::conj_f(std::move(chain), std::move(instance), q->span);
        } else {
            chain = ast::disj_f(std::move(chain), std::move(instance), q->span);
        }
    }
    return chain;
}

bool CheckResult::all_well_typed() const {
    for (const StatementVerdict& v : statements) {
        if (!v.well_typed) {
            return false;
        }
    }
    return true;
}

CheckResult check_program(const SourceProgram& p, const CheckOptions& opts) {
    CheckResult result;
    DiagnosticSink sink(opts.max_errors);
    TypingContext w = p.base_context();
    for (std::size_t i = 0; i < p.statements.size(); ++i) {
        const Statement& s = p.statements[i];
        sink.set_statement(static_cast<int>(i));
        Checker checker(sink, opts);
        auto j = checker.check(w, s.body, std::nullopt);
        StatementVerdict v;
        v.index = static_cast<int>(i);
        v.name = s.name;
        v.well_typed = j.has_value();
        v.judgment = std::move(j);
        result.statements.push_back(std::move(v));
    }
    result.diagnostics = sink.sorted();
    return result;
}

} // namespace sitcalc
