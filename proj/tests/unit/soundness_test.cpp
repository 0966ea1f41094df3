#include <gtest/gtest.h>

#include "sitcalc/parser.hpp"
#include "sitcalc/printer.hpp"
#include "sitcalc/soundness.hpp"
#include "support/generators.hpp"

using namespace sitcalc;

class SoundnessTest : public ::testing::Test {
protected:
    SoundnessTest()
        : decls_(test::FormulaGen().declarations()), ctx_(test::FormulaGen().context()) {}

    NodePtr body(const std::string& formula) {
        auto r = parse_formula(formula, decls_);
        EXPECT_TRUE(r.diagnostics.empty()) << formula;
        return r.formula;
    }

    PreservationReport preservation(const std::string& formula) {
        return check_preservation(ctx_, body(formula), TransitionPolicy::default_policy());
    }

    ProgressReport progress(const std::string& formula) {
        return check_progress(ctx_, body(formula), TransitionPolicy::default_policy());
    }

    std::vector<Declaration> decls_;
    TypingContext ctx_;
};

// --- Preservation ---

TEST_F(SoundnessTest, GroundExecutionPreservesTypes) {
    PreservationReport r = preservation("do(move(x), s0)");
    EXPECT_TRUE(r.initially_well_typed);
    EXPECT_EQ(r.steps, 1);
    EXPECT_TRUE(r.ok());
}

TEST_F(SoundnessTest, PossibilityStepsPreserveTypes) {
    PreservationReport r = preservation("poss(grab(x, y), do(move(x), s0))");
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.steps, 2); // the rewrite, then the kept side catching up
}

TEST_F(SoundnessTest, ConnectiveTracesPreserveTypes) {
    EXPECT_TRUE(preservation("holds(x, do(move(x), s0)) /\\ holds(y, do(mark(y), s0))").ok());
    EXPECT_TRUE(preservation("poss(mark(x), s0) => holds(x, do(mark(x), s0))").ok());
    EXPECT_TRUE(preservation("(forall z: Object) holds(z, do(move(x), s0))").ok());
}

TEST_F(SoundnessTest, IllTypedInputsAreFlaggedNotChecked) {
    PreservationReport r = preservation("do(x, s0)"); // Object where an action belongs
    EXPECT_FALSE(r.initially_well_typed);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.steps, 0);
    EXPECT_TRUE(r.violations.empty());
}

// --- Progress ---

TEST_F(SoundnessTest, WellTypedFormulasRunToValues) {
    for (const char* formula : {
             "holds(x, s)",
             "do(move(x), s0)",
             "poss(release(x), do(move(x), s0))",
             "~holds(x, do(mark(x), s0)) \\/ holds(y, s)",
             "(exists z: Object) mark(z)",
         }) {
        ProgressReport r = progress(formula);
        EXPECT_TRUE(r.ok()) << formula << ": " << r.stuck_reason;
        EXPECT_FALSE(r.stuck);
    }
}

TEST_F(SoundnessTest, EqualityIsTheKnownProgressHole) {
    // `x = y` typechecks but has no evaluation rule, so progress fails on it.
    // The generators below therefore never emit '='.
    ProgressReport r = progress("x = y");
    EXPECT_TRUE(r.initially_well_typed);
    EXPECT_TRUE(r.stuck);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.stuck_reason, "no evaluation rule for '='");
}

TEST_F(SoundnessTest, IllTypedInputsAreNotEvaluated) {
    ProgressReport r = progress("do(x, s0)"); // would jam, but never runs
    EXPECT_FALSE(r.initially_well_typed);
    EXPECT_FALSE(r.stuck);
    EXPECT_FALSE(r.ok());
}

// --- Randomized suite ---

TEST_F(SoundnessTest, GeneratedFormulasSatisfyBothProperties) {
    test::FormulaGen gen(914u);
    TypingContext w = gen.context();
    TransitionPolicy policy = TransitionPolicy::default_policy();
    for (int i = 0; i < 200; ++i) {
        NodePtr f = gen.formula();
        PreservationReport pres = check_preservation(w, f, policy);
        EXPECT_TRUE(pres.ok()) << pretty_print(f);
        ProgressReport prog = check_progress(w, f, policy);
        EXPECT_TRUE(prog.ok()) << pretty_print(f) << ": " << prog.stuck_reason;
    }
}
