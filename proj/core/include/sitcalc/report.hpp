#pragma once

#include "sitcalc/diagnostic.hpp"
#include "sitcalc/fixes.hpp"
#include "sitcalc/judgment.hpp"
#include "sitcalc/typechecker.hpp"

#include <map>
#include <string>
#include <vector>

namespace sitcalc {

// Rendering of check results for the command-line tool: a stable JSON shape
// (schema 1) and a human-readable text form. JSON output is pretty-printed
// with sorted keys so repeated runs are byte-identical.
//
// Per-file object:
//   {
//     "schema": 1,
//     "file": "<path>",
//     "statements": [
//       {
//         "name": "s1",
//         "status": "well-typed" | "ill-typed",
//         "type": "Situation",            // omitted when ill-typed
//         "rule-trace": ["T-Var", ...],   // premise-first rule names
//         "derivation": "...",            // only with explain
//         "diagnostics": [
//           { "code": "E006", "message": "...",
//             "span": {"begin":.., "end":.., "line":.., "column":..},
//             "fixes": [ { "kind": "...", "rationale": "...",
//                          "replacement": "..." } ] }
//         ]
//       }
//     ]
//   }

struct ReportOptions {
    bool explain = false;        // embed rendered derivations
    bool suggest_fixes = false;  // attach fix entries to diagnostics
    bool include_source = false; // echo statement source text
};

/// Fixes grouped by the index of the diagnostic they belong to (position in
/// the sorted diagnostics list of the CheckResult).
using FixIndex = std::map<std::size_t, std::vector<Fix>>;

std::string render_json(const SourceProgram& program, const CheckResult& result,
                        const FixIndex& fixes = {}, const ReportOptions& options = {});

std::string render_human(const SourceProgram& program, const CheckResult& result,
                         const FixIndex& fixes = {}, const ReportOptions& options = {});

/// Renders a lone diagnostic (no program context), used for I/O and syntax
/// failures before a program exists.
std::string render_diagnostic(const Diagnostic& diagnostic, const std::string& file);

/// Validates that a JSON report string parses and carries the schema-1
/// shape described above. Returns an empty string on success, else a
/// description of the first problem found.
std::string validate_report_json(const std::string& text);

} // namespace sitcalc
