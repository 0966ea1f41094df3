#include <gtest/gtest.h>

#include "sitcalc/parser.hpp"
#include "sitcalc/typechecker.hpp"

using namespace sitcalc;

class JudgmentTest : public ::testing::Test {
protected:
    /// Typechecks a one-statement program and returns the root judgment.
    Judgment judge(const std::string& body) {
        std::string src = "var x: Object;\nvar r: Object;\nvar s: Situation;\n"
                          "rel fragile(Object);\nrel broken(Object);\n"
                          "fun drop(Object, Object);\n"
                          "stmt t: " + body + ";";
        auto r = parse_program(src, "t.sitc");
        EXPECT_TRUE(r.ok());
        program_ = *r.program;
        CheckResult c = check_program(program_);
        EXPECT_TRUE(c.statements[0].well_typed)
            << (c.diagnostics.empty() ? "" : c.diagnostics[0].message);
        return *c.statements[0].judgment;
    }

    std::vector<std::string> rule_names(const Judgment& j, bool fold = true) {
        std::vector<std::string> out;
        for (Rule r : rule_sequence(j, fold)) {
            out.push_back(rule_name(r));
        }
        return out;
    }

    SourceProgram program_;
};

// --- Rendering ---

TEST_F(JudgmentTest, DerivationPrintsPremisesAboveConclusions) {
    Judgment j = judge("fragile(x, s) => broken(x, do(drop(r, x), s))");
    EXPECT_EQ(render_derivation(j),
              "  fragile(x, s) : Situation  [T-RelFlt]\n"
              "      drop(r, x) : Action  [T-FunFlt]\n"
              "    do(drop(r, x), s) : Situation  [T-Do]\n"
              "  broken(x, do(drop(r, x), s)) : Situation  [T-RelFlt]\n"
              "fragile(x, s) => broken(x, do(drop(r, x), s)) : Situation  [M-SupsetBT]\n");
}

TEST_F(JudgmentTest, VariableLeavesCanBeUnfolded) {
    Judgment j = judge("fragile(x, s)");
    EXPECT_EQ(render_derivation(j), "fragile(x, s) : Situation  [T-RelFlt]\n");

    DerivationOptions opts;
    opts.fold_var_leaves = false;
    EXPECT_EQ(render_derivation(j, opts),
              "  x : Object  [T-Var]\n"
              "  s : Situation  [T-Var]\n"
              "fragile(x, s) : Situation  [T-RelFlt]\n");
}

TEST_F(JudgmentTest, RuleSequenceIsPremiseFirst) {
    Judgment j = judge("fragile(x, s) => broken(x, do(drop(r, x), s))");
    EXPECT_EQ(rule_names(j),
              (std::vector<std::string>{"T-RelFlt", "T-FunFlt", "T-Do", "T-RelFlt",
                                        "M-SupsetBT"}));
    EXPECT_EQ(rule_names(j, false).front(), "T-Var");
}

TEST_F(JudgmentTest, RuleNamesAreStable) {
    EXPECT_STREQ(rule_name(Rule::TUnv1), "T-Unv1");
    EXPECT_STREQ(rule_name(Rule::TEst2), "T-Est2");
    EXPECT_STREQ(rule_name(Rule::MConjUnit), "M-ConjUnit");
    EXPECT_STREQ(rule_name(Rule::MEq), "M-Eq");
}

// --- Verification ---

TEST_F(JudgmentTest, CheckerOutputVerifies) {
    for (const char* body : {
             "fragile(x, s)",
             "poss(drop(r, x), s)",
             "fragile(x, s) => broken(x, do(drop(r, x), s))",
             "(forall z: Object) ~fragile(z, s)",
             "fragile(x, s) /\\ broken(x, s)",
             "x = r",
         }) {
        Judgment j = judge(body);
        EXPECT_EQ(verify_judgment(program_.base_context(), j), "") << body;
    }
}

TEST_F(JudgmentTest, TamperedTypeIsRejected) {
    Judgment j = judge("fragile(x, s)");
    j.type = Type::boolean();
    EXPECT_NE(verify_judgment(program_.base_context(), j), "");
}

TEST_F(JudgmentTest, TamperedRuleIsRejected) {
    Judgment j = judge("fragile(x, s)");
    j.rule = Rule::TFunFlt;
    EXPECT_NE(verify_judgment(program_.base_context(), j), "");
}

TEST_F(JudgmentTest, MissingPremiseIsRejected) {
    Judgment j = judge("fragile(x, s) => broken(x, s)");
    ASSERT_FALSE(j.premises.empty());
    j.premises.pop_back();
    EXPECT_NE(verify_judgment(program_.base_context(), j), "");
}

TEST_F(JudgmentTest, ForeignSubjectIsRejected) {
    Judgment j = judge("fragile(x, s)");
    Judgment other = judge("broken(r, s)");
    j.premises = other.premises;
    j.premises.push_back(other); // premise count no longer matches the rule
    EXPECT_NE(verify_judgment(program_.base_context(), j), "");
}
