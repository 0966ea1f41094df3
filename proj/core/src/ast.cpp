#include "sitcalc/ast.hpp"

#include "sitcalc/printer.hpp"

#include <stdexcept>

namespace sitcalc {

namespace ast {

namespace {

std::shared_ptr<Node> make(NodeKind kind, Span span) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->span = span;
    return n;
}

void require(bool ok, const char* what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

NodePtr unary(NodeKind kind, NodePtr operand, Span span, const char* what) {
    require(operand != nullptr, what);
    auto n = make(kind, span);
    n->children.push_back(std::move(operand));
    return n;
}

NodePtr binary(NodeKind kind, NodePtr lhs, NodePtr rhs, Span span, const char* what) {
    require(lhs != nullptr && rhs != nullptr, what);
    auto n = make(kind, span);
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return n;
}

} // namespace

NodePtr var(std::string name, Span span) {
    require(!name.empty(), "variable needs a name");
    auto n = make(NodeKind::Var, span);
    n->name = std::move(name);
    return n;
}

NodePtr lit_true(Span span) { return make(NodeKind::TrueLit, span); }
NodePtr lit_false(Span span) { return make(NodeKind::FalseLit, span); }
NodePtr lit_unit(Span span) { return make(NodeKind::UnitLit, span); }

NodePtr neg(NodePtr operand, Span span) {
    return unary(NodeKind::Neg, std::move(operand), span, "negation needs an operand");
}
NodePtr neg_b(NodePtr operand, Span span) {
    return unary(NodeKind::NegB, std::move(operand), span, "negation needs an operand");
}
NodePtr neg_f(NodePtr operand, Span span) {
    return unary(NodeKind::NegF, std::move(operand), span, "negation needs an operand");
}

NodePtr supset(NodePtr lhs, NodePtr rhs, Span span) {
    return binary(NodeKind::Supset, std::move(lhs), std::move(rhs), span, "=> needs two sides");
}
NodePtr conj(NodePtr lhs, NodePtr rhs, Span span) {
    return binary(NodeKind::Conj, std::move(lhs), std::move(rhs), span, "/\\ needs two sides");
}
NodePtr disj(NodePtr lhs, NodePtr rhs, Span span) {
    return binary(NodeKind::Disj, std::move(lhs), std::move(rhs), span, "\\/ needs two sides");
}
NodePtr supset_f(NodePtr lhs, NodePtr rhs, Span span) {
    return binary(NodeKind::SupsetF, std::move(lhs), std::move(rhs), span, "=> needs two sides");
}
NodePtr conj_f(NodePtr lhs, NodePtr rhs, Span span) {
    return binary(NodeKind::ConjF, std::move(lhs), std::move(rhs), span, "/\\ needs two sides");
}
NodePtr disj_f(NodePtr lhs, NodePtr rhs, Span span) {
    return binary(NodeKind::DisjF, std::move(lhs), std::move(rhs), span, "\\/ needs two sides");
}
NodePtr eq(NodePtr lhs, NodePtr rhs, Span span) {
    return binary(NodeKind::Eq, std::move(lhs), std::move(rhs), span, "= needs two sides");
}

NodePtr seq(std::vector<NodePtr> elements, Span span) {
    require(!elements.empty(), "sequence needs at least one element");
    for (const NodePtr& e : elements) {
        require(e != nullptr, "sequence element missing");
    }
    auto n = make(NodeKind::Seq, span);
    n->children = std::move(elements);
    return n;
}

NodePtr rel_fluent(std::string name, std::vector<NodePtr> args, NodePtr sit, Span span) {
    require(!name.empty(), "fluent needs a name");
    require(!args.empty(), "relational fluent needs at least one argument");
    require(sit != nullptr, "relational fluent needs a situation argument");
    for (const NodePtr& a : args) {
        require(a != nullptr, "fluent argument missing");
    }
    auto n = make(NodeKind::RelFluent, span);
    n->name = std::move(name);
    n->children = std::move(args);
    n->children.push_back(std::move(sit));
    return n;
}

NodePtr fun_fluent(std::string name, std::vector<NodePtr> args, Span span) {
    require(!name.empty(), "fluent needs a name");
    require(!args.empty(), "functional fluent needs at least one argument");
    for (const NodePtr& a : args) {
        require(a != nullptr, "fluent argument missing");
    }
    auto n = make(NodeKind::FunFluent, span);
    n->name = std::move(name);
    n->children = std::move(args);
    return n;
}

NodePtr do_(NodePtr operand, NodePtr sit, Span span) {
    return binary(NodeKind::Do, std::move(operand), std::move(sit), span,
                  "do needs an action and a situation");
}

NodePtr poss(NodePtr operand, NodePtr sit, Span span) {
    return binary(NodeKind::Poss, std::move(operand), std::move(sit), span,
                  "poss needs an action and a situation");
}

NodePtr situation_value(std::vector<NodePtr> actions, Span span) {
    require(!actions.empty(), "situation value needs at least one executed action");
    for (const NodePtr& a : actions) {
        require(a != nullptr, "situation value action missing");
    }
    auto n = make(NodeKind::SituationValue, span);
    n->children = std::move(actions);
    return n;
}

NodePtr atom(NodePtr behavioral, Span span) {
    require(behavioral != nullptr, "atom needs an operand");
    if (!span.valid()) {
        span = behavioral->span;
    }
    auto n = make(NodeKind::Atom, span);
    n->children.push_back(std::move(behavioral));
    return n;
}

NodePtr quant(QuantKind kind, std::string variable, std::vector<Type> types, NodePtr body,
              Span span) {
    require(!variable.empty(), "quantifier needs a variable name");
    require(!types.empty(), "quantifier needs at least one candidate type");
    require(body != nullptr, "quantifier needs a body");
    for (const Type& t : types) {
        require(!t.is_arrow(), "quantifier candidates must be base types");
    }
    auto n = make(NodeKind::Quant, span);
    n->quant = kind;
    n->name = std::move(variable);
    n->types = std::move(types);
    n->children.push_back(std::move(body));
    return n;
}

} // namespace ast

bool is_term_kind(NodeKind k) {
    switch (k) {
    case NodeKind::Var:
    case NodeKind::TrueLit:
    case NodeKind::FalseLit:
    case NodeKind::UnitLit:
    case NodeKind::Neg:
    case NodeKind::Supset:
    case NodeKind::Conj:
    case NodeKind::Disj:
    case NodeKind::Seq:
    case NodeKind::SituationValue:
        // Situation values behave as ground terms once produced: they sit in
        // argument positions and under term connectives.
        return true;
    default:
        return false;
    }
}

bool is_behavioral_kind(NodeKind k) {
    switch (k) {
    case NodeKind::NegB:
    case NodeKind::RelFluent:
    case NodeKind::FunFluent:
    case NodeKind::Do:
    case NodeKind::Poss:
        return true;
    default:
        return false;
    }
}

bool is_formula_kind(NodeKind k) {
    switch (k) {
    case NodeKind::Atom:
    case NodeKind::NegF:
    case NodeKind::SupsetF:
    case NodeKind::ConjF:
    case NodeKind::DisjF:
    case NodeKind::Eq:
    case NodeKind::Quant:
        return true;
    default:
        return false;
    }
}

bool is_neg_kind(NodeKind k) {
    return k == NodeKind::Neg || k == NodeKind::NegB || k == NodeKind::NegF;
}

bool is_value_literal(const Node& n) {
    switch (n.kind) {
    case NodeKind::TrueLit:
    case NodeKind::FalseLit:
    case NodeKind::UnitLit:
    case NodeKind::SituationValue:
        return n.kind != NodeKind::SituationValue || !n.children.empty();
    default:
        return false;
    }
}

bool equal(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.name != b.name || a.children.size() != b.children.size()) {
        return false;
    }
    if (a.kind == NodeKind::Quant && (a.quant != b.quant || a.types != b.types)) {
        return false;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!equal(*a.children[i], *b.children[i])) {
            return false;
        }
    }
    return true;
}

bool equal(const NodePtr& a, const NodePtr& b) {
    if (a == b) {
        return true;
    }
    if (!a || !b) {
        return false;
    }
    return equal(*a, *b);
}

std::size_t node_count(const Node& n) {
    std::size_t total = 1;
    for (const NodePtr& c : n.children) {
        total += node_count(*c);
    }
    return total;
}

bool contains_kind(const Node& n, NodeKind k) {
    if (n.kind == k) {
        return true;
    }
    for (const NodePtr& c : n.children) {
        if (contains_kind(*c, k)) {
            return true;
        }
    }
    return false;
}

NodePtr replace_node(const NodePtr& root, const NodePtr& target, const NodePtr& replacement) {
    if (root == target) {
        return replacement;
    }
    for (std::size_t i = 0; i < root->children.size(); ++i) {
        NodePtr rebuilt = replace_node(root->children[i], target, replacement);
        if (rebuilt) {
            auto n = std::make_shared<Node>(*root);
            n->children[i] = rebuilt;
            return n;
        }
    }
    return nullptr;
}

std::string Value::to_string() const {
    switch (kind) {
    case Kind::Unit: return "unit";
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::GroundSituation: {
        std::string out = "<";
        out += kInitialSituation;
        for (const NodePtr& a : history) {
            out += " . ";
            out += pretty_print(*a);
        }
        out += ">";
        return out;
    }
    }
    return "?";
}

bool Value::operator==(const Value& other) const {
    if (kind != other.kind) {
        return false;
    }
    if (kind != Kind::GroundSituation) {
        return true;
    }
    if (history.size() != other.history.size()) {
        return false;
    }
    for (std::size_t i = 0; i < history.size(); ++i) {
        if (!equal(history[i], other.history[i])) {
            return false;
        }
    }
    return true;
}

} // namespace sitcalc
