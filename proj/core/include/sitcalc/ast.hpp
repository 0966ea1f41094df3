#pragma once

#include "sitcalc/span.hpp"
#include "sitcalc/type.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sitcalc {

// The surface language is layered: regular terms, behavioral terms (fluent
// applications, do, poss), and formulas (connectives over behavioral terms,
// plus the top-level '='). Evaluation can rewrite across layers — poss turns
// into a superset node over situation values — so all three layers share one
// node representation, with the layer recorded in the kind and enforced by
// the builders and the checker.

enum class NodeKind : std::uint8_t {
    // ---- term layer ----
    Var,
    TrueLit,
    FalseLit,
    UnitLit,
    Neg,    // ~t over a regular term
    Supset, // t1 => t2, both regular terms
    Conj,
    Disj,
    Seq, // comma sequence of terms, length >= 1

    // ---- behavioral layer ----
    NegB,      // ~bt
    RelFluent, // r(args..., sit)
    FunFluent, // f(args...)
    Do,        // do(bt, sit)
    Poss,      // poss(bt, sit)
    SituationValue, // executed action history; produced only by evaluation

    // ---- formula layer ----
    Atom, // a behavioral term used as a formula
    NegF,
    SupsetF,
    ConjF,
    DisjF,
    Eq,    // statement-level '='
    Quant, // (forall x: T | ...) body — realizes both term- and formula-level binders
};

enum class QuantKind : std::uint8_t { Forall, Exists };

class Node;
using NodePtr = std::shared_ptr<const Node>;

class Node {
public:
    NodeKind kind;
    Span span{};

    /// Var: the referenced name. RelFluent/FunFluent: the fluent name.
    /// Quant: the bound variable.
    std::string name;

    QuantKind quant = QuantKind::Forall; // Quant only

    /// Quant only: declared candidate types for the bound variable (>= 1).
    std::vector<Type> types;

    // Child layout by kind:
    //   Neg/NegB/NegF/Atom      [operand]
    //   Supset/Conj/Disj (+F)   [lhs, rhs]      Eq likewise
    //   Seq                     elements (>= 1)
    //   RelFluent               [args..., sit]  (>= 2 children)
    //   FunFluent               args (>= 1)
    //   Do/Poss                 [operand, sit]
    //   SituationValue          executed actions, oldest first (>= 1)
    //   Quant                   [body]
    std::vector<NodePtr> children;

    const NodePtr& child(std::size_t i) const { return children[i]; }

    // RelFluent convenience: argument positions vs. the trailing situation.
    std::size_t rel_arg_count() const { return children.size() - 1; }
    const NodePtr& rel_sit() const { return children.back(); }
};

// ---------------------------------------------------------------------------
// Builders. Each enforces the structural invariants of its kind and throws
// std::invalid_argument on violation (empty argument lists, missing children).
// ---------------------------------------------------------------------------
namespace ast {

NodePtr var(std::string name, Span span = {});
NodePtr lit_true(Span span = {});
NodePtr lit_false(Span span = {});
NodePtr lit_unit(Span span = {});

NodePtr neg(NodePtr operand, Span span = {});
NodePtr neg_b(NodePtr operand, Span span = {});
NodePtr neg_f(NodePtr operand, Span span = {});

NodePtr supset(NodePtr lhs, NodePtr rhs, Span span = {});
NodePtr conj(NodePtr lhs, NodePtr rhs, Span span = {});
NodePtr disj(NodePtr lhs, NodePtr rhs, Span span = {});
NodePtr supset_f(NodePtr lhs, NodePtr rhs, Span span = {});
NodePtr conj_f(NodePtr lhs, NodePtr rhs, Span span = {});
NodePtr disj_f(NodePtr lhs, NodePtr rhs, Span span = {});
NodePtr eq(NodePtr lhs, NodePtr rhs, Span span = {});

NodePtr seq(std::vector<NodePtr> elements, Span span = {});

NodePtr rel_fluent(std::string name, std::vector<NodePtr> args, NodePtr sit, Span span = {});
NodePtr fun_fluent(std::string name, std::vector<NodePtr> args, Span span = {});
NodePtr do_(NodePtr operand, NodePtr sit, Span span = {});
NodePtr poss(NodePtr operand, NodePtr sit, Span span = {});
NodePtr situation_value(std::vector<NodePtr> actions, Span span = {});

NodePtr atom(NodePtr behavioral, Span span = {});
NodePtr quant(QuantKind kind, std::string variable, std::vector<Type> types, NodePtr body,
              Span span = {});

} // namespace ast

/// Name of the distinguished initial situation. Always bound, with type
/// Situation, in every typing context; rejected as a declaration name.
inline constexpr const char* kInitialSituation = "s0";

bool is_term_kind(NodeKind k);
bool is_behavioral_kind(NodeKind k);
bool is_formula_kind(NodeKind k);

/// Negation of any layer.
bool is_neg_kind(NodeKind k);

/// true/false/unit literals and situation values: the nodes evaluation
/// reports as values of their own accord.
bool is_value_literal(const Node& n);

/// Structural equality; spans are ignored.
bool equal(const Node& a, const Node& b);
bool equal(const NodePtr& a, const NodePtr& b);

std::size_t node_count(const Node& n);
bool contains_kind(const Node& n, NodeKind k);

/// Rebuilds `root` with `target` (located by pointer identity) replaced by
/// `replacement`. Returns nullptr if `target` does not occur.
NodePtr replace_node(const NodePtr& root, const NodePtr& target, const NodePtr& replacement);

// ---------------------------------------------------------------------------
// Runtime values.
// ---------------------------------------------------------------------------

/// Result payload of evaluation. A ground situation is the history of
/// executed action terms, oldest first; the empty history is s0 itself.
struct Value {
    enum class Kind : std::uint8_t { Unit, True, False, GroundSituation };

    Kind kind = Kind::Unit;
    std::vector<NodePtr> history; // GroundSituation only

    static Value unit() { return {Kind::Unit, {}}; }
    static Value boolean(bool b) { return {b ? Kind::True : Kind::False, {}}; }
    static Value ground_situation(std::vector<NodePtr> h) {
        return {Kind::GroundSituation, std::move(h)};
    }

    std::string to_string() const;
    bool operator==(const Value& other) const;
};

} // namespace sitcalc
