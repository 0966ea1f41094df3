#include "sitcalc/satisfies.hpp"

#include "sitcalc/printer.hpp"

#include <optional>

namespace sitcalc {

namespace {

[[noreturn]] void uninterpreted(const std::string& name, const Node& n) {
    throw UninterpretedError(name, n.span,
                             "the world does not interpret '" + name + "'");
}

/// Substitutes Var(replacement) for free occurrences of `name`.
NodePtr substitute(const NodePtr& n, const std::string& name, const std::string& replacement) {
    if (n->kind == NodeKind::Var) {
        if (n->name == name) {
            return ast::var(replacement, n->span);
        }
        return n;
    }
    if (n->kind == NodeKind::Quant && n->name == name) {
        return n; // shadowed
    }
    bool changed = false;
    std::vector<NodePtr> children;
    children.reserve(n->children.size());
    for (const NodePtr& c : n->children) {
        NodePtr c2 = substitute(c, name, replacement);
        changed = changed || c2 != c;
        children.push_back(std::move(c2));
    }
    if (!changed) {
        return n;
    }
    auto rebuilt = std::make_shared<Node>(*n);
    rebuilt->children = std::move(children);
    return rebuilt;
}

struct Model {
    const World& w;

    bool eval(const NodePtr& n) {
        switch (n->kind) {
        case NodeKind::Var: {
            if (!w.interprets(n->name)) {
                uninterpreted(n->name, *n);
            }
            return w.has_instance(n->name);
        }
        case NodeKind::TrueLit: return true;
        case NodeKind::FalseLit: return false;
        case NodeKind::UnitLit:
            uninterpreted("unit", *n);
        case NodeKind::Neg:
        case NodeKind::NegB:
        case NodeKind::NegF:
            return !eval(n->child(0));
        case NodeKind::Atom:
            return eval(n->child(0));
        case NodeKind::Supset:
        case NodeKind::SupsetF:
            return !antecedent(n->child(0)) || eval(n->child(1));
        case NodeKind::Conj:
        case NodeKind::ConjF:
            return eval(n->child(0)) && eval(n->child(1));
        case NodeKind::Disj:
        case NodeKind::DisjF:
            return eval(n->child(0)) || eval(n->child(1));
        case NodeKind::Seq: {
            for (const NodePtr& e : n->children) {
                if (!eval(e)) {
                    return false;
                }
            }
            return true;
        }
        case NodeKind::RelFluent:
            return lookup_rel(*n);
        case NodeKind::FunFluent:
            return lookup_fun(*n);
        case NodeKind::Do: {
            // An execution claim holds if the action holds in some listed
            // situation; the situation operand itself plays no role.
            for (const std::string& si : w.situations) {
                if (holds_in(n->child(0), si)) {
                    return true;
                }
            }
            return false;
        }
        case NodeKind::Poss: {
            // poss(bt, s) holds if, for some listed si, si => do(bt, si)
            // does; a listed si is reachable by construction.
            for (const std::string& si : w.situations) {
                bool reachable = w.has_situation(si);
                if (!reachable || eval_do_at(n->child(0))) {
                    return true;
                }
            }
            return false;
        }
        case NodeKind::SituationValue:
            uninterpreted(Value::ground_situation(n->children).to_string(), *n);
        case NodeKind::Quant: {
            // The quantifier ranges over the listed situations, whatever the
            // declared candidate types say.
            bool all = true;
            bool any = false;
            for (const std::string& si : w.situations) {
                bool v = eval(substitute(n->child(0), n->name, si));
                all = all && v;
                any = any || v;
            }
            return n->quant == QuantKind::Forall ? all : any;
        }
        case NodeKind::Eq:
            uninterpreted("=", *n);
        }
        uninterpreted(pretty_print(*n), *n);
    }

private:
    /// Left side of '=>': a situation name reads as "listed/reachable".
    bool antecedent(const NodePtr& n) {
        if (n->kind == NodeKind::Var && w.has_situation(n->name)) {
            return true;
        }
        return eval(n);
    }

    bool eval_do_at(const NodePtr& bt) {
        for (const std::string& sj : w.situations) {
            if (holds_in(bt, sj)) {
                return true;
            }
        }
        return false;
    }

    /// The argument tuple of an application, as names; empty optional when
    /// any argument is not a plain name (those never match a table row).
    std::optional<std::vector<std::string>> name_tuple(const Node& app, std::size_t count) {
        std::vector<std::string> tuple;
        tuple.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            const Node& arg = *app.children[i];
            if (arg.kind != NodeKind::Var) {
                return std::nullopt;
            }
            if (!w.interprets(arg.name)) {
                uninterpreted(arg.name, arg);
            }
            tuple.push_back(arg.name);
        }
        return tuple;
    }

    bool lookup_rel(const Node& app) {
        auto table = w.rel_tables.find(app.name);
        if (table == w.rel_tables.end()) {
            if (!w.interprets(app.name)) {
                uninterpreted(app.name, app);
            }
            return false;
        }
        auto tuple = name_tuple(app, app.children.size());
        if (!tuple) {
            return false;
        }
        return table->second.count(*tuple) > 0;
    }

    bool lookup_fun(const Node& app) {
        auto table = w.fun_tables.find(app.name);
        if (table == w.fun_tables.end()) {
            if (!w.interprets(app.name)) {
                uninterpreted(app.name, app);
            }
            return false;
        }
        auto tuple = name_tuple(app, app.children.size());
        if (!tuple) {
            return false;
        }
        return table->second.count(*tuple) > 0;
    }

    /// "bt holds in si": a functional fluent with a relational table is read
    /// at si; otherwise its own table decides, independent of si.
    bool holds_in(const NodePtr& bt, const std::string& si) {
        switch (bt->kind) {
        case NodeKind::NegB:
        case NodeKind::Neg:
        case NodeKind::NegF:
            return !holds_in(bt->child(0), si);
        case NodeKind::Atom:
            return holds_in(bt->child(0), si);
        case NodeKind::FunFluent: {
            auto rel = w.rel_tables.find(bt->name);
            if (rel != w.rel_tables.end()) {
                auto tuple = name_tuple(*bt, bt->children.size());
                if (!tuple) {
                    return false;
                }
                tuple->push_back(si);
                return rel->second.count(*tuple) > 0;
            }
            return lookup_fun(*bt);
        }
        case NodeKind::RelFluent: {
            auto table = w.rel_tables.find(bt->name);
            if (table == w.rel_tables.end()) {
                if (!w.interprets(bt->name)) {
                    uninterpreted(bt->name, *bt);
                }
                return false;
            }
            auto tuple = name_tuple(*bt, bt->children.size() - 1);
            if (!tuple) {
                return false;
            }
            tuple->push_back(si);
            return table->second.count(*tuple) > 0;
        }
        default:
            return eval(bt);
        }
    }
};

} // namespace

bool satisfies(const World& w, const NodePtr& node) {
    Model m{w};
    return m.eval(node);
}

} // namespace sitcalc
