#include "sitcalc/printer.hpp"

#include <string>

namespace sitcalc {

namespace {

// Binding strength, loosest first. '=' sits below everything; parenthesized
// groups re-enter at implication level, which is why '=' never needs (and
// never gets) parentheses.
enum Level : int {
    kEq = 0,
    kImp = 1,
    kOr = 2,
    kAnd = 3,
    kUnary = 4,
    kPrimary = 5,
};

int level_of(const Node& n) {
    switch (n.kind) {
    case NodeKind::Eq: return kEq;
    case NodeKind::Supset:
    case NodeKind::SupsetF: return kImp;
    case NodeKind::Disj:
    case NodeKind::DisjF: return kOr;
    case NodeKind::Conj:
    case NodeKind::ConjF: return kAnd;
    case NodeKind::Neg:
    case NodeKind::NegB:
    case NodeKind::NegF:
    case NodeKind::Quant: return kUnary;
    case NodeKind::Atom: return level_of(*n.child(0));
    default: return kPrimary;
    }
}

void print_node(const Node& n, int min_level, std::string& out);

void print_args(const Node& n, std::size_t count, std::string& out) {
    for (std::size_t i = 0; i < count; ++i) {
        if (i > 0) {
            out += ", ";
        }
        print_node(*n.child(i), kImp, out);
    }
}

void print_node(const Node& n, int min_level, std::string& out) {
    const bool parens = level_of(n) < min_level;
    if (parens) {
        out += '(';
    }
    switch (n.kind) {
    case NodeKind::Var:
        out += n.name;
        break;
    case NodeKind::TrueLit:
        out += "true";
        break;
    case NodeKind::FalseLit:
        out += "false";
        break;
    case NodeKind::UnitLit:
        out += "unit";
        break;
    case NodeKind::Neg:
    case NodeKind::NegB:
    case NodeKind::NegF:
        out += '~';
        print_node(*n.child(0), kUnary, out);
        break;
    case NodeKind::Supset:
    case NodeKind::SupsetF:
        print_node(*n.child(0), kImp + 1, out);
        out += " => ";
        print_node(*n.child(1), kImp, out);
        break;
    case NodeKind::Conj:
    case NodeKind::ConjF:
        print_node(*n.child(0), kAnd, out);
        out += " /\\ ";
        print_node(*n.child(1), kAnd + 1, out);
        break;
    case NodeKind::Disj:
    case NodeKind::DisjF:
        print_node(*n.child(0), kOr, out);
        out += " \\/ ";
        print_node(*n.child(1), kOr + 1, out);
        break;
    case NodeKind::Eq:
        print_node(*n.child(0), kImp, out);
        out += " = ";
        print_node(*n.child(1), kImp, out);
        break;
    case NodeKind::Seq:
        out += '(';
        print_args(n, n.children.size(), out);
        out += ')';
        break;
    case NodeKind::RelFluent:
    case NodeKind::FunFluent:
        out += n.name;
        out += '(';
        print_args(n, n.children.size(), out);
        out += ')';
        break;
    case NodeKind::Do:
    case NodeKind::Poss:
        out += n.kind == NodeKind::Do ? "do(" : "poss(";
        print_args(n, 2, out);
        out += ')';
        break;
    case NodeKind::SituationValue:
        out += '<';
        out += kInitialSituation;
        for (const NodePtr& a : n.children) {
            out += " . ";
            print_node(*a, kImp, out);
        }
        out += '>';
        break;
    case NodeKind::Atom:
        // Transparent: the atom is a layer marker, not surface syntax.
        if (parens) {
            // The wrapping above already consulted the child's level.
            print_node(*n.child(0), kEq, out);
        } else {
            print_node(*n.child(0), min_level, out);
        }
        break;
    case NodeKind::Quant:
        out += '(';
        out += n.quant == QuantKind::Forall ? "forall " : "exists ";
        out += n.name;
        out += ": ";
        for (std::size_t i = 0; i < n.types.size(); ++i) {
            if (i > 0) {
                out += " | ";
            }
            out += n.types[i].to_string();
        }
        out += ") ";
        print_node(*n.child(0), kUnary, out);
        break;
    }
    if (parens) {
        out += ')';
    }
}

} // namespace

std::string pretty_print(const Node& n) {
    std::string out;
    print_node(n, kEq, out);
    return out;
}

std::string pretty_print(const NodePtr& n) { return pretty_print(*n); }

std::string pretty_print(const Declaration& d) {
    std::string out;
    switch (d.kind) {
    case Declaration::Kind::Var:
        out += "var ";
        out += d.name;
        out += ": ";
        for (std::size_t i = 0; i < d.types.size(); ++i) {
            if (i > 0) {
                out += " | ";
            }
            out += d.types[i].to_string();
        }
        break;
    case Declaration::Kind::Rel:
    case Declaration::Kind::Fun:
        out += d.kind == Declaration::Kind::Rel ? "rel " : "fun ";
        out += d.name;
        out += '(';
        for (std::size_t i = 0; i < d.types.size(); ++i) {
            if (i > 0) {
                out += ", ";
            }
            out += d.types[i].to_string();
        }
        out += ')';
        break;
    }
    out += ';';
    return out;
}

std::string pretty_print(const Statement& s) {
    std::string out = "stmt ";
    out += s.name;
    out += ": ";
    out += pretty_print(*s.body);
    out += ';';
    return out;
}

std::string pretty_print(const SourceProgram& p) {
    std::string out;
    for (const Declaration& d : p.declarations) {
        out += pretty_print(d);
        out += '\n';
    }
    if (!p.declarations.empty() && !p.statements.empty()) {
        out += '\n';
    }
    for (const Statement& s : p.statements) {
        out += pretty_print(s);
        out += '\n';
    }
    return out;
}

} // namespace sitcalc
