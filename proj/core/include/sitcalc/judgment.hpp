#pragma once

#include "sitcalc/ast.hpp"
#include "sitcalc/context.hpp"
#include "sitcalc/type.hpp"

#include <string>
#include <vector>

namespace sitcalc {

/// Typing rules. The term layer (T-*) covers regular and behavioral terms;
/// the meta layer (M-*) covers the formula connectives over behavioral
/// operands, which the term rules deliberately do not reach.
enum class Rule : std::uint8_t {
    TTrue,
    TFalse,
    TVar,
    TUnv1, // forall over a relational-fluent body
    TEst1, // exists over a relational-fluent body
    TUnv2, // forall over a functional-fluent body
    TEst2, // exists over a functional-fluent body
    TNeg,
    TSpt,
    TConj,
    TDisj,
    TSeq,
    TRelFlt,
    TFunFlt,
    TDo,
    TPoss,
    MSupsetBT,
    MConjUnit,
    MEq,
};

/// Display name, e.g. "T-RelFlt", "M-SupsetBT".
const char* rule_name(Rule r);

/// One node of a typing derivation: the subject term, its assigned type, the
/// rule that concluded it, and the premise derivations in rule order.
struct Judgment {
    NodePtr subject;
    Type type;
    Rule rule = Rule::TVar;
    std::vector<Judgment> premises;
};

struct DerivationOptions {
    /// Variable lookups are axioms; folding them keeps the printed tree at
    /// the granularity derivations are usually written at.
    bool fold_var_leaves = true;
    int indent_width = 2;
};

/// Text rendering: premises above their conclusion, indented by depth, one
/// rule application per line.
std::string render_derivation(const Judgment& j, const DerivationOptions& opts = {});

/// Rule labels in premise-first order (the order render_derivation prints
/// them). T-Var leaves are omitted when fold_var_leaves is set.
std::vector<Rule> rule_sequence(const Judgment& j, bool fold_var_leaves = true);

/// Checks a derivation against the rule schema table: subject shape, premise
/// count, premise types and result type must all match the named rule.
/// Returns an empty string on success, else a description of the first
/// violation. `w` is the context the root judgment was made under.
std::string verify_judgment(const TypingContext& w, const Judgment& j);

} // namespace sitcalc
