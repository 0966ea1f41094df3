#include "sitcalc/eval.hpp"
#include "sitcalc/fixes.hpp"
#include "sitcalc/parser.hpp"
#include "sitcalc/printer.hpp"
#include "sitcalc/report.hpp"
#include "sitcalc/satisfies.hpp"
#include "sitcalc/typechecker.hpp"
#include "sitcalc/worldfile.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sitcalc;
using nlohmann::json;

// Exit codes: 0 all clean, 1 diagnostics were reported, 2 usage / I/O /
// fix-application failures.
constexpr int kClean = 0;
constexpr int kDiagnostics = 1;
constexpr int kFailure = 2;

struct Options {
    std::vector<std::string> files;
    std::string format = "human";
    std::string quantifier_mode = "standard";
    std::string world_path;
    int fuel = 1000;
    std::size_t max_errors = 0;
    bool explain = false;
    bool suggest_fixes = false;
    bool apply_fixes = false;
};

CheckOptions check_options(const Options& opts) {
    CheckOptions co;
    co.quantifier_mode = opts.quantifier_mode == "paper-faithful" ? QuantifierMode::AsWritten
                                                                  : QuantifierMode::Standard;
    co.max_errors = opts.max_errors;
    return co;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json span_json(const Span& span) {
    return json{{"begin", span.begin}, {"end", span.end}, {"line", span.line},
                {"column", span.column}};
}

json diagnostic_as_json(const Diagnostic& d) {
    return json{{"code", code_name(d.code)}, {"message", d.message}, {"span", span_json(d.span)}};
}

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void print_diagnostics(const std::vector<Diagnostic>& diags, const std::string& file) {
    for (const Diagnostic& d : diags) {
        std::cerr << render_diagnostic(d, file);
    }
}

void print_fix(const Fix& f) {
    std::cerr << "  fix (" << fix_kind_name(f.kind) << "): " << f.rationale << '\n';
    std::cerr << "    replace '" << pretty_print(f.original) << "' with '"
              << pretty_print(f.replacement) << "'\n";
    if (f.add_declaration) {
        std::cerr << "    add declaration: " << pretty_print(*f.add_declaration) << '\n';
    }
    if (f.replace_declaration) {
        std::cerr << "    change declaration to: " << pretty_print(*f.replace_declaration)
                  << '\n';
    }
}

Diagnostic eval_diagnostic(const EvalResult& r, const NodePtr& body, int statement) {
    Diagnostic d;
    d.code = DiagCode::E007;
    d.statement = statement;
    if (r.status == EvalResult::Status::Stuck) {
        d.message = "evaluation got stuck: " + r.stuck_reason;
        d.span = r.stuck_node ? r.stuck_node->span : body->span;
        d.node = r.stuck_node;
    } else {
        d.message = "evaluation ran out of fuel after " + std::to_string(r.trace.size()) +
                    " steps";
        d.span = body->span;
        d.node = r.last;
    }
    return d;
}

std::string fixed_file_path(const std::string& input) {
    std::filesystem::path p(input);
    std::filesystem::path out = p.parent_path() / (p.stem().string() + ".fixed.sitc");
    return out.string();
}

/// Parses one file; parse diagnostics come back as file-level entries
/// (statement -1) merged ahead of any later per-statement ones.
struct ParsedFile {
    std::optional<SourceProgram> program;
    std::vector<Diagnostic> diagnostics;
};

std::optional<ParsedFile> load_program(const std::string& path, int& exit_code) {
    std::optional<std::string> text = read_file(path);
    if (!text) {
        std::cerr << "sitcalc: cannot read '" << path << "'\n";
        exit_code = kFailure;
        return std::nullopt;
    }
    ParseResult parsed = parse_program(*text, path);
    return ParsedFile{std::move(parsed.program), std::move(parsed.diagnostics)};
}

int run_check(const std::string& path, const Options& opts, bool fixing) {
    int code = kClean;
    std::optional<ParsedFile> loaded = load_program(path, code);
    if (!loaded) {
        return code;
    }

    SourceProgram program =
        loaded->program ? *loaded->program : SourceProgram{path, {}, {}};
    CheckResult result = check_program(program, check_options(opts));
    result.diagnostics.insert(result.diagnostics.begin(), loaded->diagnostics.begin(),
                              loaded->diagnostics.end());

    bool want_fixes = fixing || opts.suggest_fixes || opts.apply_fixes;
    FixIndex fixes;
    if (want_fixes) {
        TypingContext w = program.base_context();
        for (std::size_t i = 0; i < result.diagnostics.size(); ++i) {
            std::vector<Fix> fs = suggest_fixes(program, w, result.diagnostics[i]);
            if (!fs.empty()) {
                fixes.emplace(i, std::move(fs));
            }
        }
    }

    ReportOptions ro;
    ro.explain = opts.explain;
    ro.suggest_fixes = want_fixes;
    if (opts.format == "json") {
        std::cout << render_json(program, result, fixes, ro);
    } else {
        for (const StatementVerdict& v : result.statements) {
            std::cout << path << ": stmt '" << v.name << "': ";
            if (v.well_typed && v.judgment) {
                std::cout << "well-typed : " << v.judgment->type.to_string() << '\n';
                if (opts.explain) {
                    std::cout << render_derivation(*v.judgment);
                }
            } else {
                std::cout << "ill-typed\n";
            }
        }
        for (std::size_t i = 0; i < result.diagnostics.size(); ++i) {
            std::cerr << render_diagnostic(result.diagnostics[i], path);
            auto it = fixes.find(i);
            if (it != fixes.end()) {
                for (const Fix& f : it->second) {
                    print_fix(f);
                }
            }
        }
    }
    if (!result.diagnostics.empty()) {
        code = kDiagnostics;
    }

    if (opts.apply_fixes) {
        std::vector<Fix> flat;
        for (const auto& [index, fs] : fixes) {
            flat.insert(flat.end(), fs.begin(), fs.end());
        }
        if (flat.empty()) {
            std::cerr << "sitcalc: no applicable fixes for '" << path << "'\n";
            return code;
        }
        ApplyResult applied = apply_fixes(program, flat);
        if (!applied.program) {
            std::cerr << "sitcalc: could not apply fixes to '" << path << "': " << applied.error
                      << '\n';
            return kFailure;
        }
        std::string out_path = fixed_file_path(path);
        std::ofstream out(out_path, std::ios::binary);
        out << pretty_print(*applied.program);
        if (!out) {
            std::cerr << "sitcalc: cannot write '" << out_path << "'\n";
            return kFailure;
        }
        std::cerr << "sitcalc: wrote '" << out_path << "'\n";
    }
    return code;
}

int run_eval(const std::string& path, const Options& opts) {
    int code = kClean;
    std::optional<ParsedFile> loaded = load_program(path, code);
    if (!loaded) {
        return code;
    }
    if (!loaded->diagnostics.empty()) {
        code = kDiagnostics;
    }
    SourceProgram program =
        loaded->program ? *loaded->program : SourceProgram{path, {}, {}};
    TransitionPolicy policy = TransitionPolicy::default_policy();

    json out{{"schema", 1}, {"file", path}};
    json statements = json::array();
    if (opts.format != "json") {
        print_diagnostics(loaded->diagnostics, path);
    } else if (!loaded->diagnostics.empty()) {
        json fd = json::array();
        for (const Diagnostic& d : loaded->diagnostics) {
            fd.push_back(diagnostic_as_json(d));
        }
        out["diagnostics"] = std::move(fd);
    }

    for (std::size_t i = 0; i < program.statements.size(); ++i) {
        const Statement& stmt = program.statements[i];
        EvalResult r = evaluate(stmt.body, policy, opts.fuel);

        std::string status;
        switch (r.status) {
        case EvalResult::Status::Value: status = "value"; break;
        case EvalResult::Status::Stuck: status = "stuck"; break;
        case EvalResult::Status::OutOfFuel: status = "out-of-fuel"; break;
        }
        std::optional<Diagnostic> diag;
        if (r.status != EvalResult::Status::Value) {
            diag = eval_diagnostic(r, stmt.body, static_cast<int>(i));
            code = std::max(code, kDiagnostics);
        }

        if (opts.format == "json") {
            json s{{"name", stmt.name}, {"status", status},
                   {"steps", static_cast<std::uint64_t>(r.trace.size())}};
            if (r.status == EvalResult::Status::Value) {
                s["value"] = r.value.to_string();
            }
            if (opts.explain) {
                json trace = json::array();
                for (const TraceEntry& e : r.trace) {
                    trace.push_back(json{{"rule", step_rule_name(e.rule)},
                                         {"node", pretty_print(e.node)}});
                }
                s["trace"] = std::move(trace);
            }
            json diags = json::array();
            if (diag) {
                diags.push_back(diagnostic_as_json(*diag));
            }
            s["diagnostics"] = std::move(diags);
            statements.push_back(std::move(s));
        } else {
            std::cout << path << ": stmt '" << stmt.name << "': ";
            if (r.status == EvalResult::Status::Value) {
                std::cout << "value " << r.value.to_string() << '\n';
            } else if (r.status == EvalResult::Status::Stuck) {
                std::cout << "stuck\n";
            } else {
                std::cout << "out of fuel\n";
            }
            if (opts.explain) {
                for (const TraceEntry& e : r.trace) {
                    std::cout << "  [" << step_rule_name(e.rule) << "] " << pretty_print(e.node)
                              << '\n';
                }
            }
            if (diag) {
                std::cerr << render_diagnostic(*diag, path);
            }
        }
    }
    if (opts.format == "json") {
        out["statements"] = std::move(statements);
        emit_json(out);
    }
    return code;
}

int run_sat(const std::string& path, const Options& opts) {
    std::optional<std::string> world_text = read_file(opts.world_path);
    if (!world_text) {
        std::cerr << "sitcalc: cannot read '" << opts.world_path << "'\n";
        return kFailure;
    }
    WorldParseResult world = parse_world(*world_text, opts.world_path);
    if (!world.world) {
        print_diagnostics(world.diagnostics, opts.world_path);
        return kDiagnostics;
    }

    int code = kClean;
    std::optional<ParsedFile> loaded = load_program(path, code);
    if (!loaded) {
        return code;
    }
    if (!loaded->diagnostics.empty()) {
        code = kDiagnostics;
    }
    SourceProgram program =
        loaded->program ? *loaded->program : SourceProgram{path, {}, {}};

    json out{{"schema", 1}, {"file", path}, {"world", world.world->name}};
    json statements = json::array();
    if (opts.format != "json") {
        print_diagnostics(loaded->diagnostics, path);
    } else if (!loaded->diagnostics.empty()) {
        json fd = json::array();
        for (const Diagnostic& d : loaded->diagnostics) {
            fd.push_back(diagnostic_as_json(d));
        }
        out["diagnostics"] = std::move(fd);
    }

    for (std::size_t i = 0; i < program.statements.size(); ++i) {
        const Statement& stmt = program.statements[i];
        std::string status;
        std::optional<Diagnostic> diag;
        try {
            status = satisfies(*world.world, stmt.body) ? "satisfied" : "not-satisfied";
        } catch (const UninterpretedError& e) {
            status = "uninterpreted";
            Diagnostic d;
            d.code = DiagCode::E010;
            d.message = e.what();
            d.span = e.span;
            d.statement = static_cast<int>(i);
            diag = std::move(d);
            code = std::max(code, kDiagnostics);
        }

        if (opts.format == "json") {
            json s{{"name", stmt.name}, {"status", status}};
            json diags = json::array();
            if (diag) {
                diags.push_back(diagnostic_as_json(*diag));
            }
            s["diagnostics"] = std::move(diags);
            statements.push_back(std::move(s));
        } else {
            std::cout << path << ": stmt '" << stmt.name << "': ";
            if (status == "satisfied") {
                std::cout << "SATISFIED\n";
            } else if (status == "not-satisfied") {
                std::cout << "NOT SATISFIED\n";
            } else {
                std::cout << "UNINTERPRETED\n";
            }
            if (diag) {
                std::cerr << render_diagnostic(*diag, path);
            }
        }
    }
    if (opts.format == "json") {
        out["statements"] = std::move(statements);
        emit_json(out);
    }
    return code;
}

void add_common_flags(CLI::App* cmd, Options& opts, bool with_modes) {
    cmd->add_option("files", opts.files, ".sitc input files")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--format", opts.format, "output format (default: human)")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_flag("--explain", opts.explain, "show derivations / step traces");
    if (with_modes) {
        cmd->add_option("--quantifier-mode", opts.quantifier_mode,
                        "connective used when expanding multi-type quantifiers "
                        "(default: standard)")
            ->check(CLI::IsMember({"standard", "paper-faithful"}));
        cmd->add_option("--max-errors", opts.max_errors,
                        "stop reporting after this many diagnostics (0 = unlimited)");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"type checker, small-step evaluator and finite-model checker for a "
                 "situation-calculus modeling language"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sitcalc 1.0.0");

    Options opts;

    CLI::App* check = app.add_subcommand("check", "parse and type-check .sitc files");
    add_common_flags(check, opts, true);
    check->add_flag("--suggest-fixes", opts.suggest_fixes,
                    "attach suggested corrections to repairable diagnostics");
    check->add_flag("--apply-fixes", opts.apply_fixes,
                    "apply suggested corrections, writing <stem>.fixed.sitc");

    CLI::App* eval = app.add_subcommand("eval", "evaluate statements by the transition rules");
    add_common_flags(eval, opts, false);
    eval->add_option("--fuel", opts.fuel, "maximum number of steps per statement (default: 1000)")
        ->check(CLI::Range(1, 1000000));

    CLI::App* sat = app.add_subcommand("sat", "check statements against a finite world");
    add_common_flags(sat, opts, false);
    sat->add_option("--world", opts.world_path, "world description file")
        ->required()
        ->check(CLI::ExistingFile);

    CLI::App* fix =
        app.add_subcommand("fix", "suggest and optionally apply corrections for type errors");
    add_common_flags(fix, opts, true);
    fix->add_flag("--apply-fixes", opts.apply_fixes,
                  "apply suggested corrections, writing <stem>.fixed.sitc");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kClean : kFailure;
    }

    int code = kClean;
    for (const std::string& file : opts.files) {
        int file_code = kClean;
        if (check->parsed()) {
            file_code = run_check(file, opts, false);
        } else if (eval->parsed()) {
            file_code = run_eval(file, opts);
        } else if (sat->parsed()) {
            file_code = run_sat(file, opts);
        } else if (fix->parsed()) {
            file_code = run_check(file, opts, true);
        }
        code = std::max(code, file_code);
    }
    return code;
}
