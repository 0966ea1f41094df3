#include "support/generators.hpp"

#include <utility>

namespace sitcalc::test {

namespace {

struct FluentSpec {
    const char* name;
    int object_args;
};

// Eight fluents: three relational, five functional.
constexpr FluentSpec kRels[] = {{"holds", 1}, {"near", 2}, {"at", 2}};
constexpr FluentSpec kFuns[] = {{"move", 1}, {"grab", 2}, {"release", 1}, {"mark", 1},
                                {"swap", 2}};

NodePtr to_formula(NodePtr n) {
    if (is_behavioral_kind(n->kind)) {
        return ast::atom(std::move(n));
    }
    return n;
}

/// Mirrors the parser's connective selection: term connective when both
/// sides are terms, formula connective (with behavioral sides lifted to
/// atoms) otherwise.
NodePtr combine(NodeKind term_kind, NodePtr lhs, NodePtr rhs) {
    if (is_term_kind(lhs->kind) && is_term_kind(rhs->kind)) {
        switch (term_kind) {
        case NodeKind::Supset: return ast::supset(std::move(lhs), std::move(rhs));
        case NodeKind::Conj: return ast::conj(std::move(lhs), std::move(rhs));
        default: return ast::disj(std::move(lhs), std::move(rhs));
        }
    }
    lhs = to_formula(std::move(lhs));
    rhs = to_formula(std::move(rhs));
    switch (term_kind) {
    case NodeKind::Supset: return ast::supset_f(std::move(lhs), std::move(rhs));
    case NodeKind::Conj: return ast::conj_f(std::move(lhs), std::move(rhs));
    default: return ast::disj_f(std::move(lhs), std::move(rhs));
    }
}

} // namespace

FormulaGen::FormulaGen(std::uint32_t seed) : rng_(seed) {}

int FormulaGen::roll(int bound) {
    return static_cast<int>(std::uniform_int_distribution<std::uint32_t>(
        0, static_cast<std::uint32_t>(bound - 1))(rng_));
}

bool FormulaGen::chance(int percent) { return roll(100) < percent; }

TypingContext FormulaGen::context() const {
    SourceProgram p;
    p.declarations = declarations();
    return p.base_context();
}

std::vector<Declaration> FormulaGen::declarations() const {
    std::vector<Declaration> decls;
    decls.push_back({Declaration::Kind::Var, "x", {Type::object()}, Span{}});
    decls.push_back({Declaration::Kind::Var, "y", {Type::object()}, Span{}});
    decls.push_back({Declaration::Kind::Var, "s", {Type::situation()}, Span{}});
    for (const FluentSpec& f : kRels) {
        decls.push_back({Declaration::Kind::Rel, f.name,
                         std::vector<Type>(f.object_args, Type::object()), Span{}});
    }
    for (const FluentSpec& f : kFuns) {
        decls.push_back({Declaration::Kind::Fun, f.name,
                         std::vector<Type>(f.object_args, Type::object()), Span{}});
    }
    return decls;
}

NodePtr FormulaGen::object_var() { return ast::var(chance(50) ? "x" : "y"); }

NodePtr FormulaGen::action(int depth) {
    const FluentSpec& f = kFuns[roll(static_cast<int>(std::size(kFuns)))];
    std::vector<NodePtr> args;
    for (int i = 0; i < f.object_args; ++i) {
        args.push_back(object_var());
    }
    NodePtr n = ast::fun_fluent(f.name, std::move(args));
    if (depth > 1 && chance(25)) {
        n = ast::neg_b(std::move(n));
        if (depth > 2 && chance(20)) {
            n = ast::neg_b(std::move(n));
        }
    }
    return n;
}

NodePtr FormulaGen::situation(int depth) {
    if (chance(20)) {
        return ast::var("s"); // symbolic: a normal form for the evaluator
    }
    NodePtr sit = ast::var(kInitialSituation);
    int links = depth <= 1 ? 0 : roll(std::min(depth - 1, 3));
    for (int i = 0; i < links; ++i) {
        sit = ast::do_(action(depth - 1 - i), std::move(sit));
    }
    return sit;
}

NodePtr FormulaGen::rel_app(int depth) {
    const FluentSpec& f = kRels[roll(static_cast<int>(std::size(kRels)))];
    std::vector<NodePtr> args;
    for (int i = 0; i < f.object_args; ++i) {
        args.push_back(object_var());
    }
    return ast::rel_fluent(f.name, std::move(args), situation(depth - 1));
}

NodePtr FormulaGen::quantifier(int depth, bool relational_body) {
    QuantKind kind = chance(50) ? QuantKind::Forall : QuantKind::Exists;
    NodePtr core;
    if (relational_body) {
        const FluentSpec& f = kRels[roll(static_cast<int>(std::size(kRels)))];
        int z_at = roll(f.object_args);
        std::vector<NodePtr> args;
        for (int i = 0; i < f.object_args; ++i) {
            args.push_back(i == z_at ? ast::var("z") : object_var());
        }
        core = ast::rel_fluent(f.name, std::move(args), situation(depth - 1));
    } else {
        const FluentSpec& f = kFuns[roll(static_cast<int>(std::size(kFuns)))];
        int z_at = roll(f.object_args);
        std::vector<NodePtr> args;
        for (int i = 0; i < f.object_args; ++i) {
            args.push_back(i == z_at ? ast::var("z") : object_var());
        }
        core = ast::fun_fluent(f.name, std::move(args));
    }
    if (chance(30)) {
        core = ast::neg_b(std::move(core));
    }
    return ast::quant(kind, "z", {Type::object()}, ast::atom(std::move(core)));
}

NodePtr FormulaGen::formula_shaped(const Type& t, int depth) {
    // Like of_type, but never a bare term: a term-kind side would make the
    // connective helper pick the term layer off-plan (term connectives type
    // as Unit, skewing a chain built for one component type).
    NodePtr n = of_type(t, depth);
    if (!is_term_kind(n->kind)) {
        return n;
    }
    if (t == Type::action()) {
        return ast::atom(action(std::max(depth, 1)));
    }
    return ast::atom(rel_app(std::max(depth, 1)));
}

NodePtr FormulaGen::of_type(const Type& t, int depth) {
    // Leaves when the budget runs out.
    if (depth <= 1) {
        if (t == Type::situation()) {
            return ast::atom(ast::rel_fluent("holds", {object_var()}, ast::var("s")));
        }
        if (t == Type::action()) {
            return ast::atom(ast::fun_fluent("mark", {object_var()}));
        }
        if (t == Type::unit()) {
            return ast::atom(ast::poss(action(1), ast::var("s")));
        }
        return chance(50) ? ast::lit_true() : ast::lit_false();
    }

    if (t == Type::boolean()) {
        NodePtr b = chance(50) ? ast::lit_true() : ast::lit_false();
        int negs = roll(3);
        for (int i = 0; i < negs; ++i) {
            b = ast::neg(std::move(b)); // term negation of a literal
        }
        return b;
    }

    if (t == Type::situation()) {
        switch (roll(6)) {
        case 0: return ast::atom(rel_app(depth));
        case 1: return ast::atom(ast::do_(action(depth - 1), situation(depth - 1)));
        case 2: return ast::atom(ast::neg_b(rel_app(depth - 1)));
        case 3: return quantifier(depth, /*relational_body=*/true);
        case 4:
            return combine(NodeKind::Supset, formula_shaped(t, depth - 1),
                           of_type(t, depth - 1));
        default: {
            std::vector<NodePtr> elems;
            int count = 2 + roll(2);
            for (int i = 0; i < count; ++i) {
                elems.push_back(rel_app(depth - 1));
            }
            return ast::seq(std::move(elems)); // sequences stay bare, like the parser's
        }
        }
    }

    if (t == Type::action()) {
        switch (roll(4)) {
        case 0: return ast::atom(action(depth));
        case 1: return quantifier(depth, /*relational_body=*/false);
        case 2:
            return combine(NodeKind::Supset, formula_shaped(t, depth - 1),
                           of_type(t, depth - 1));
        default: {
            std::vector<NodePtr> elems;
            for (int i = 0; i < 2; ++i) {
                elems.push_back(action(depth - 1));
            }
            return ast::seq(std::move(elems));
        }
        }
    }

    // Unit
    switch (roll(4)) {
    case 0: return ast::atom(ast::poss(action(depth - 1), situation(depth - 1)));
    case 1: {
        // An executability guard in front of an arbitrary consequent.
        NodePtr guard = ast::atom(ast::poss(action(depth - 1), situation(depth - 1)));
        return combine(NodeKind::Supset, std::move(guard),
                       of_type(Type::situation(), depth - 1));
    }
    case 2: {
        // A uniformly-typed pair under a term connective.
        NodePtr l = of_type(Type::boolean(), depth - 1);
        NodePtr r = of_type(Type::boolean(), depth - 1);
        NodeKind op = chance(50) ? NodeKind::Conj : NodeKind::Supset;
        return combine(op, std::move(l), std::move(r));
    }
    default: {
        // A connective chain over one common component type.
        Type component = chance(60) ? Type::situation() : Type::action();
        bool conjunctive = chance(50);
        NodePtr chain = formula_shaped(component, depth - 1);
        int extra = 1 + roll(2);
        for (int i = 0; i < extra; ++i) {
            NodePtr next = of_type(component, depth - 1);
            chain = combine(conjunctive ? NodeKind::Conj : NodeKind::Disj, std::move(chain),
                            std::move(next));
        }
        return chain;
    }
    }
}

NodePtr FormulaGen::formula(int max_depth) {
    switch (roll(10)) {
    case 0: return of_type(Type::boolean(), max_depth);
    case 1:
    case 2: return of_type(Type::action(), max_depth);
    case 3:
    case 4:
    case 5: return of_type(Type::unit(), max_depth);
    default: return of_type(Type::situation(), max_depth);
    }
}

SourceProgram FormulaGen::program(int count, int max_depth) {
    SourceProgram p;
    p.file = "<generated>";
    p.declarations = declarations();
    for (int i = 0; i < count; ++i) {
        Statement stmt;
        stmt.name = "g" + std::to_string(i);
        stmt.body = formula(max_depth);
        p.statements.push_back(std::move(stmt));
    }
    return p;
}

} // namespace sitcalc::test
