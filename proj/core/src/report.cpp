#include "sitcalc/report.hpp"

#include "sitcalc/printer.hpp"

#include <json.hpp>

#include <sstream>

namespace sitcalc {

namespace {

using json = nlohmann::json; // std::map-backed: keys come out sorted

json span_json(const Span& span) {
    return json{
        {"begin", span.begin},
        {"end", span.end},
        {"line", span.line},
        {"column", span.column},
    };
}

json fix_json(const Fix& fix) {
    json j{
        {"kind", fix_kind_name(fix.kind)},
        {"rationale", fix.rationale},
        {"replacement", pretty_print(fix.replacement)},
    };
    if (fix.add_declaration) {
        j["declaration"] = pretty_print(*fix.add_declaration);
    }
    if (fix.replace_declaration) {
        j["declaration"] = pretty_print(*fix.replace_declaration);
    }
    return j;
}

json diagnostic_json(const Diagnostic& d, const std::vector<Fix>* fixes) {
    json j{
        {"code", code_name(d.code)},
        {"message", d.message},
        {"span", span_json(d.span)},
    };
    if (fixes != nullptr && !fixes->empty()) {
        json fj = json::array();
        for (const Fix& f : *fixes) {
            fj.push_back(fix_json(f));
        }
        j["fixes"] = std::move(fj);
    }
    return j;
}

} // namespace

std::string render_json(const SourceProgram& program, const CheckResult& result,
                        const FixIndex& fixes, const ReportOptions& options) {
    json root{
        {"schema", 1},
        {"file", program.file},
    };

    json statements = json::array();
    for (const StatementVerdict& v : result.statements) {
        json s{
            {"name", v.name},
            {"status", v.well_typed ? "well-typed" : "ill-typed"},
        };
        if (v.well_typed && v.judgment) {
            s["type"] = v.judgment->type.to_string();
            json trace = json::array();
            for (Rule r : rule_sequence(*v.judgment)) {
                trace.push_back(rule_name(r));
            }
            s["rule-trace"] = std::move(trace);
            if (options.explain) {
                s["derivation"] = render_derivation(*v.judgment);
            }
        }
        if (options.include_source &&
            v.index >= 0 && v.index < static_cast<int>(program.statements.size())) {
            s["source"] = pretty_print(program.statements[static_cast<std::size_t>(v.index)]);
        }

        json diags = json::array();
        for (std::size_t i = 0; i < result.diagnostics.size(); ++i) {
            const Diagnostic& d = result.diagnostics[i];
            if (d.statement != v.index) {
                continue;
            }
            auto it = fixes.find(i);
            diags.push_back(diagnostic_json(d, it == fixes.end() ? nullptr : &it->second));
        }
        s["diagnostics"] = std::move(diags);
        statements.push_back(std::move(s));
    }
    root["statements"] = std::move(statements);

    json file_diags = json::array();
    for (std::size_t i = 0; i < result.diagnostics.size(); ++i) {
        const Diagnostic& d = result.diagnostics[i];
        if (d.statement >= 0) {
            continue;
        }
        auto it = fixes.find(i);
        file_diags.push_back(diagnostic_json(d, it == fixes.end() ? nullptr : &it->second));
    }
    if (!file_diags.empty()) {
        root["diagnostics"] = std::move(file_diags);
    }

    return root.dump(2) + "\n";
}

std::string render_diagnostic(const Diagnostic& d, const std::string& file) {
    std::ostringstream out;
    out << file << ':';
    if (d.span.valid()) {
        out << d.span.line << ':' << d.span.column << ':';
    }
    out << ' ' << (d.severity == Severity::Warning ? "warning" : "error") << ' '
        << code_name(d.code) << ": " << d.message << '\n';
    for (const RelatedSpan& r : d.related) {
        out << file << ':' << r.span.line << ':' << r.span.column << ": note: " << r.note
            << '\n';
    }
    return out.str();
}

std::string render_human(const SourceProgram& program, const CheckResult& result,
                         const FixIndex& fixes, const ReportOptions& options) {
    std::ostringstream out;
    for (const StatementVerdict& v : result.statements) {
        out << program.file << ": stmt '" << v.name << "': ";
        if (v.well_typed && v.judgment) {
            out << "well-typed : " << v.judgment->type.to_string() << '\n';
            if (options.explain) {
                out << render_derivation(*v.judgment);
            }
        } else {
            out << "ill-typed\n";
        }
    }
    for (std::size_t i = 0; i < result.diagnostics.size(); ++i) {
        const Diagnostic& d = result.diagnostics[i];
        out << render_diagnostic(d, program.file);
        auto it = fixes.find(i);
        if (it == fixes.end()) {
            continue;
        }
        for (const Fix& f : it->second) {
            out << "  fix (" << fix_kind_name(f.kind) << "): " << f.rationale << '\n';
            out << "    replace '" << pretty_print(f.original) << "' with '"
                << pretty_print(f.replacement) << "'\n";
            if (f.add_declaration) {
                out << "    add declaration: " << pretty_print(*f.add_declaration) << '\n';
            }
            if (f.replace_declaration) {
                out << "    change declaration to: " << pretty_print(*f.replace_declaration)
                    << '\n';
            }
        }
    }
    return out.str();
}

std::string validate_report_json(const std::string& text) {
    nlohmann::json root = nlohmann::json::parse(text, nullptr, false);
    if (root.is_discarded()) {
        return "not valid JSON";
    }
    if (!root.is_object()) {
        return "report root must be an object";
    }
    if (!root.contains("schema") || root["schema"] != 1) {
        return "missing or unsupported \"schema\" (expected 1)";
    }
    if (!root.contains("file") || !root["file"].is_string()) {
        return "missing \"file\"";
    }
    if (!root.contains("statements") || !root["statements"].is_array()) {
        return "missing \"statements\" array";
    }
    auto check_diags = [](const nlohmann::json& diags) -> std::string {
        if (!diags.is_array()) {
            return "\"diagnostics\" must be an array";
        }
        for (const auto& d : diags) {
            if (!d.is_object() || !d.contains("code") || !d.contains("message") ||
                !d.contains("span")) {
                return "diagnostic entries need \"code\", \"message\" and \"span\"";
            }
            const auto& span = d["span"];
            for (const char* key : {"begin", "end", "line", "column"}) {
                if (!span.contains(key) || !span[key].is_number_unsigned()) {
                    return std::string("diagnostic span missing \"") + key + "\"";
                }
            }
        }
        return {};
    };
    for (const auto& s : root["statements"]) {
        if (!s.is_object() || !s.contains("name") || !s.contains("status")) {
            return "statement entries need \"name\" and \"status\"";
        }
        const auto& status = s["status"];
        if (status != "well-typed" && status != "ill-typed") {
            return "statement status must be \"well-typed\" or \"ill-typed\"";
        }
        if (status == "well-typed" && !s.contains("type")) {
            return "well-typed statements must carry \"type\"";
        }
        if (s.contains("diagnostics")) {
            if (std::string err = check_diags(s["diagnostics"]); !err.empty()) {
                return err;
            }
        }
    }
    if (root.contains("diagnostics")) {
        if (std::string err = check_diags(root["diagnostics"]); !err.empty()) {
            return err;
        }
    }
    return {};
}

} // namespace sitcalc
