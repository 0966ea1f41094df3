#include <gtest/gtest.h>

#include "sitcalc/parser.hpp"
#include "sitcalc/report.hpp"
#include "support/subprocess.hpp"

using namespace sitcalc;

class ReportTest : public ::testing::Test {
protected:
    ReportTest() {
        auto parsed = parse_program(test::read_file_text(std::string(SITCALC_CORPUS_DIR) +
                                                         "/worked_examples.sitc"),
                                    "worked_examples.sitc");
        EXPECT_TRUE(parsed.ok());
        program_ = *parsed.program;
        check_ = check_program(program_);
    }

    FixIndex all_fixes() {
        FixIndex index;
        TypingContext ctx = program_.base_context();
        for (std::size_t i = 0; i < check_.diagnostics.size(); ++i) {
            auto fixes = suggest_fixes(program_, ctx, check_.diagnostics[i]);
            if (!fixes.empty()) {
                index[i] = std::move(fixes);
            }
        }
        return index;
    }

    /// The report with one substring swapped out, for shape-mutation tests.
    static std::string mutated(std::string text, const std::string& from,
                               const std::string& to) {
        auto at = text.find(from);
        EXPECT_NE(at, std::string::npos) << from;
        if (at != std::string::npos) {
            text.replace(at, from.size(), to);
        }
        return text;
    }

    SourceProgram program_;
    CheckResult check_;
};

// --- JSON ---

TEST_F(ReportTest, ReportsValidateInEveryVariant) {
    EXPECT_EQ(validate_report_json(render_json(program_, check_)), "");

    ReportOptions full;
    full.explain = true;
    full.suggest_fixes = true;
    full.include_source = true;
    EXPECT_EQ(validate_report_json(render_json(program_, check_, all_fixes(), full)), "");

    auto fixed = parse_program(test::read_file_text(std::string(SITCALC_CORPUS_DIR) +
                                                    "/worked_examples.fixed.sitc"),
                               "worked_examples.fixed.sitc");
    ASSERT_TRUE(fixed.ok());
    EXPECT_EQ(validate_report_json(render_json(*fixed.program, check_program(*fixed.program))),
              "");
}

TEST_F(ReportTest, JsonOutputIsByteStable) {
    std::string once = render_json(program_, check_, all_fixes());
    std::string again = render_json(program_, check_program(program_), all_fixes());
    EXPECT_EQ(once, again);
}

TEST_F(ReportTest, JsonCarriesVerdictsTraceAndFixes) {
    ReportOptions opts;
    opts.explain = true;
    std::string text = render_json(program_, check_, all_fixes(), opts);
    EXPECT_NE(text.find("\"schema\": 1"), std::string::npos);
    EXPECT_NE(text.find("\"file\": \"worked_examples.sitc\""), std::string::npos);
    EXPECT_NE(text.find("\"status\": \"well-typed\""), std::string::npos);
    EXPECT_NE(text.find("\"status\": \"ill-typed\""), std::string::npos);
    EXPECT_NE(text.find("\"type\": \"Situation\""), std::string::npos);
    EXPECT_NE(text.find("\"T-RelFlt\""), std::string::npos);
    EXPECT_NE(text.find("\"derivation\""), std::string::npos);
    EXPECT_NE(text.find("\"code\": \"E006\""), std::string::npos);
    EXPECT_NE(text.find("\"kind\": \"wrap-in-relational-fluent\""), std::string::npos);
    EXPECT_NE(text.find("\"declaration\": \"rel inColor(Object);\""), std::string::npos);
}

TEST_F(ReportTest, ValidatorRejectsEachBrokenShape) {
    std::string good = render_json(program_, check_);

    EXPECT_EQ(validate_report_json("schema one {"), "not valid JSON");
    EXPECT_EQ(validate_report_json("[]"), "report root must be an object");
    EXPECT_EQ(validate_report_json(mutated(good, "\"schema\": 1", "\"schema\": 2")),
              "missing or unsupported \"schema\" (expected 1)");
    EXPECT_EQ(validate_report_json(mutated(good, "\"file\":", "\"path\":")),
              "missing \"file\"");
    EXPECT_EQ(validate_report_json(mutated(good, "\"statements\":", "\"items\":")),
              "missing \"statements\" array");
    EXPECT_EQ(validate_report_json(mutated(good, "\"name\":", "\"nam\":")),
              "statement entries need \"name\" and \"status\"");
    EXPECT_EQ(
        validate_report_json(mutated(good, "\"status\": \"ill-typed\"", "\"status\": \"odd\"")),
        "statement status must be \"well-typed\" or \"ill-typed\"");
    EXPECT_EQ(validate_report_json(mutated(good, "\"type\":", "\"kind\":")),
              "well-typed statements must carry \"type\"");
    EXPECT_EQ(validate_report_json(mutated(good, "\"message\":", "\"text\":")),
              "diagnostic entries need \"code\", \"message\" and \"span\"");
    EXPECT_EQ(validate_report_json(mutated(good, "\"begin\":", "\"start\":")),
              "diagnostic span missing \"begin\"");
    EXPECT_EQ(validate_report_json(mutated(good, "\"column\":", "\"col\":")),
              "diagnostic span missing \"column\"");
}

TEST_F(ReportTest, FileLevelDiagnosticsLandAtTheRoot) {
    CheckResult bare;
    Diagnostic d;
    d.code = DiagCode::E101;
    d.message = "unexpected character '@'";
    d.span = Span{4, 5, 1, 5};
    d.statement = -1;
    bare.diagnostics.push_back(d);

    std::string text = render_json(program_, bare);
    EXPECT_EQ(validate_report_json(text), "");
    EXPECT_NE(text.find("\"diagnostics\": [\n    {\n      \"code\": \"E101\""),
              std::string::npos);
}

// --- Text ---

TEST_F(ReportTest, HumanReportStatesVerdictsDiagnosticsAndFixes) {
    std::string text = render_human(program_, check_, all_fixes());
    EXPECT_NE(text.find("worked_examples.sitc: stmt 's1': well-typed : Situation\n"),
              std::string::npos);
    EXPECT_NE(text.find("worked_examples.sitc: stmt 's2': ill-typed\n"), std::string::npos);
    EXPECT_NE(text.find("error E006: sides of '=' have different types: Situation vs Object\n"),
              std::string::npos);
    EXPECT_NE(text.find("  fix (wrap-in-relational-fluent): "), std::string::npos);
    EXPECT_NE(text.find("    replace 'c' with 'inColor(c, s)'\n"), std::string::npos);
    EXPECT_NE(text.find("    add declaration: rel inColor(Object);\n"), std::string::npos);
    EXPECT_NE(text.find("    replace '~heavy(x)' with '~heavy(x, s)'\n"), std::string::npos);
    EXPECT_NE(text.find("    change declaration to: rel heavy(Object);\n"), std::string::npos);
}

TEST_F(ReportTest, ExplainedReportsEmbedTheDerivation) {
    ReportOptions opts;
    opts.explain = true;
    std::string text = render_human(program_, check_, {}, opts);
    EXPECT_NE(text.find("fragile(x, s) => broken(x, do(drop(r, x), s)) : Situation"
                        "  [M-SupsetBT]\n"),
              std::string::npos);
}

TEST_F(ReportTest, LoneDiagnosticsUseTheCompilerLineFormat) {
    Diagnostic d;
    d.code = DiagCode::E006;
    d.message = "boom";
    d.span = Span{10, 11, 3, 7};
    d.related.push_back(RelatedSpan{Span{0, 1, 1, 2}, "declared here"});
    EXPECT_EQ(render_diagnostic(d, "f.sitc"),
              "f.sitc:3:7: error E006: boom\n"
              "f.sitc:1:2: note: declared here\n");

    Diagnostic placeless;
    placeless.code = DiagCode::E101;
    placeless.message = "cannot open file";
    EXPECT_EQ(render_diagnostic(placeless, "f.sitc"), "f.sitc: error E101: cannot open file\n");
}
