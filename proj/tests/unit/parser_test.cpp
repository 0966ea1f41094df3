#include <gtest/gtest.h>

#include "sitcalc/parser.hpp"
#include "sitcalc/printer.hpp"

using namespace sitcalc;

namespace {

const char* kPrelude =
    "var x: Object;\n"
    "var y: Object;\n"
    "var s: Situation;\n"
    "rel p(Object);\n"
    "rel near(Object, Object);\n"
    "fun a(Object);\n";

} // namespace

class ParserTest : public ::testing::Test {
protected:
    ParseResult parse(const std::string& src) { return parse_program(src, "t.sitc"); }

    /// Body of the sole statement of kPrelude + "stmt t: <src>;".
    NodePtr body(const std::string& src) {
        auto r = parse(std::string(kPrelude) + "stmt t: " + src + ";");
        EXPECT_TRUE(r.ok()) << (r.diagnostics.empty() ? "no program"
                                                      : r.diagnostics[0].message);
        if (!r.ok() || r.program->statements.empty()) {
            return nullptr;
        }
        return r.program->statements[0].body;
    }

    std::string printed(const std::string& src) {
        NodePtr b = body(src);
        return b ? pretty_print(b) : "<parse failed>";
    }

    bool has_code(const ParseResult& r, DiagCode code) {
        for (const auto& d : r.diagnostics) {
            if (d.code == code) return true;
        }
        return false;
    }
};

// --- Shapes ---

TEST_F(ParserTest, RelationalApplicationSplitsOffTheSituation) {
    NodePtr b = body("p(x, s)");
    ASSERT_EQ(b->kind, NodeKind::Atom); // behavioral statements are lifted
    const NodePtr& app = b->child(0);
    ASSERT_EQ(app->kind, NodeKind::RelFluent);
    EXPECT_EQ(app->name, "p");
    ASSERT_EQ(app->children.size(), 2u);
    EXPECT_EQ(app->child(0)->name, "x");
    EXPECT_EQ(app->child(1)->name, "s");
}

TEST_F(ParserTest, UndeclaredApplicationParsesAsFunctional) {
    NodePtr b = body("mystery(x, s)");
    EXPECT_EQ(b->child(0)->kind, NodeKind::FunFluent);
}

TEST_F(ParserTest, RelationalNameWithOneArgumentStaysFunctional) {
    // Too few arguments to split a situation off; the checker owns E002.
    NodePtr b = body("p(x)");
    EXPECT_EQ(b->child(0)->kind, NodeKind::FunFluent);
}

TEST_F(ParserTest, BareVariableStatementStaysATerm) {
    EXPECT_EQ(body("x")->kind, NodeKind::Var);
}

TEST_F(ParserTest, ParenthesizedSingleFormulaIsJustGrouping) {
    EXPECT_EQ(body("(x)")->kind, NodeKind::Var);
}

TEST_F(ParserTest, ParenthesizedCommaListIsASequence) {
    NodePtr b = body("(x, y, x)");
    ASSERT_EQ(b->kind, NodeKind::Seq);
    EXPECT_EQ(b->children.size(), 3u);
}

TEST_F(ParserTest, DoAndPossTakeOperandAndSituation) {
    NodePtr b = body("poss(a(x), s)");
    ASSERT_EQ(b->kind, NodeKind::Atom);
    ASSERT_EQ(b->child(0)->kind, NodeKind::Poss);
    EXPECT_EQ(b->child(0)->child(0)->kind, NodeKind::FunFluent);
    EXPECT_EQ(b->child(0)->child(1)->name, "s");
}

// --- Connective layers ---

TEST_F(ParserTest, ConnectiveOverTermsStaysInTheTermLayer) {
    EXPECT_EQ(body("x /\\ y")->kind, NodeKind::Conj);
    EXPECT_EQ(body("x => y")->kind, NodeKind::Supset);
}

TEST_F(ParserTest, ConnectiveOverBehavioralSidesIsLifted) {
    NodePtr b = body("p(x, s) /\\ a(x)");
    ASSERT_EQ(b->kind, NodeKind::ConjF);
    EXPECT_EQ(b->child(0)->kind, NodeKind::Atom);
    EXPECT_EQ(b->child(1)->kind, NodeKind::Atom);
}

TEST_F(ParserTest, MixedSidesLiftTheTermSideUnwrapped) {
    NodePtr b = body("x => p(x, s)");
    ASSERT_EQ(b->kind, NodeKind::SupsetF);
    EXPECT_EQ(b->child(0)->kind, NodeKind::Var); // terms pass bare
    EXPECT_EQ(b->child(1)->kind, NodeKind::Atom);
}

TEST_F(ParserTest, NegationPicksItsLayerFromTheOperand) {
    EXPECT_EQ(body("~x")->kind, NodeKind::Neg);
    NodePtr nb = body("~p(x, s)");
    ASSERT_EQ(nb->kind, NodeKind::Atom);
    EXPECT_EQ(nb->child(0)->kind, NodeKind::NegB);
    EXPECT_EQ(body("~(x /\\ y)")->kind, NodeKind::Neg);
}

// --- Precedence and associativity ---

TEST_F(ParserTest, AndBindsTighterThanOr) {
    EXPECT_EQ(printed("x \\/ y /\\ x"), "x \\/ y /\\ x");
    NodePtr b = body("x \\/ y /\\ x");
    ASSERT_EQ(b->kind, NodeKind::Disj);
    EXPECT_EQ(b->child(1)->kind, NodeKind::Conj);
}

TEST_F(ParserTest, AndIsLeftAssociative) {
    NodePtr b = body("x /\\ y /\\ x");
    ASSERT_EQ(b->kind, NodeKind::Conj);
    EXPECT_EQ(b->child(0)->kind, NodeKind::Conj);
}

TEST_F(ParserTest, ImpliesIsRightAssociativeAndLoosest) {
    NodePtr b = body("x => y => x");
    ASSERT_EQ(b->kind, NodeKind::Supset);
    EXPECT_EQ(b->child(0)->kind, NodeKind::Var);
    EXPECT_EQ(b->child(1)->kind, NodeKind::Supset);

    NodePtr c = body("x /\\ y => x");
    ASSERT_EQ(c->kind, NodeKind::Supset);
    EXPECT_EQ(c->child(0)->kind, NodeKind::Conj);
}

TEST_F(ParserTest, QuantifierBodyIsJustTheNextUnaryFormula) {
    NodePtr b = body("(forall z: Object) ~p(z, s) /\\ p(x, s)");
    ASSERT_EQ(b->kind, NodeKind::ConjF);
    ASSERT_EQ(b->child(0)->kind, NodeKind::Quant);
    EXPECT_EQ(b->child(0)->child(0)->child(0)->kind, NodeKind::NegB);
}

TEST_F(ParserTest, QuantifierCandidatesAreBarSeparated) {
    NodePtr b = body("(exists z: Object | Action) a(z)");
    ASSERT_EQ(b->kind, NodeKind::Quant);
    ASSERT_EQ(b->types.size(), 2u);
    EXPECT_EQ(b->types[0], Type::object());
    EXPECT_EQ(b->types[1], Type::action());
}

TEST_F(ParserTest, EqualsOnlyAtTheTopLevel) {
    NodePtr b = body("p(x, s) = x");
    ASSERT_EQ(b->kind, NodeKind::Eq);
    EXPECT_EQ(b->child(0)->kind, NodeKind::Atom);
    EXPECT_EQ(b->child(1)->kind, NodeKind::Var);

    auto r = parse(std::string(kPrelude) + "stmt t: (x = y) /\\ x;");
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has_code(r, DiagCode::E101));
}

// --- Declarations ---

TEST_F(ParserTest, DeclarationsAreCollected) {
    auto r = parse(kPrelude);
    ASSERT_TRUE(r.ok());
    ASSERT_EQ(r.program->declarations.size(), 6u);
    EXPECT_EQ(r.program->declarations[0].kind, Declaration::Kind::Var);
    EXPECT_EQ(r.program->declarations[3].kind, Declaration::Kind::Rel);
    EXPECT_EQ(r.program->declarations[5].kind, Declaration::Kind::Fun);
    EXPECT_EQ(r.program->declarations[4].types.size(), 2u);
}

TEST_F(ParserTest, VariableCandidatesAreBarSeparated) {
    auto r = parse("var w: Object | Action;");
    ASSERT_TRUE(r.ok());
    ASSERT_EQ(r.program->declarations[0].types.size(), 2u);
}

TEST_F(ParserTest, DuplicateDeclarationIsRejected) {
    auto r = parse("var x: Object;\nvar x: Action;");
    EXPECT_FALSE(r.ok());
    ASSERT_FALSE(r.diagnostics.empty());
    EXPECT_EQ(r.diagnostics[0].message, "'x' is already declared");
}

TEST_F(ParserTest, InitialSituationNameIsReserved) {
    auto r = parse("var s0: Situation;");
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.diagnostics[0].message,
              "'s0' names the initial situation and cannot be redeclared");

    auto q = parse(std::string(kPrelude) + "stmt t: (forall s0: Situation) p(x, s0);");
    EXPECT_FALSE(q.ok());
    EXPECT_EQ(q.diagnostics[0].message,
              "'s0' names the initial situation and cannot be bound");
}

TEST_F(ParserTest, DuplicateStatementNameIsRejected) {
    auto r = parse(std::string(kPrelude) + "stmt t: x;\nstmt t: y;");
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.diagnostics[0].message, "statement 't' is already defined");
}

// --- Recovery ---

TEST_F(ParserTest, BadStatementIsDroppedAndTheRestSurvives) {
    auto r = parse(std::string(kPrelude) + "stmt bad: p(x, ;\nstmt good: x;");
    ASSERT_TRUE(r.program.has_value());
    EXPECT_FALSE(r.diagnostics.empty());
    ASSERT_EQ(r.program->statements.size(), 1u);
    EXPECT_EQ(r.program->statements[0].name, "good");
}

TEST_F(ParserTest, LexErrorStopsTheFile) {
    auto r = parse("var x: Object; @");
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has_code(r, DiagCode::E101));
}

// --- parse_formula ---

TEST_F(ParserTest, ParseFormulaUsesSeededDeclarations) {
    Declaration p;
    p.kind = Declaration::Kind::Rel;
    p.name = "p";
    p.types = {Type::object()};
    auto r = parse_formula("p(x, s)", {p});
    ASSERT_TRUE(r.diagnostics.empty());
    ASSERT_TRUE(r.formula != nullptr);
    EXPECT_EQ(r.formula->child(0)->kind, NodeKind::RelFluent);

    auto bare = parse_formula("p(x, s)");
    ASSERT_TRUE(bare.formula != nullptr);
    EXPECT_EQ(bare.formula->child(0)->kind, NodeKind::FunFluent);
}

TEST_F(ParserTest, ParseFormulaReportsErrors) {
    auto r = parse_formula("p(x,");
    EXPECT_TRUE(r.formula == nullptr);
    EXPECT_FALSE(r.diagnostics.empty());
}
