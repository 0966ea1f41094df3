#pragma once

#include "sitcalc/diagnostic.hpp"
#include "sitcalc/program.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sitcalc {

// Surface grammar (see docs/grammar.md for the EBNF):
//
//   program   = { declaration } { statement }
//   statement = "stmt" name ":" formula ";"
//   formula   = implication [ "=" implication ]          '=' only at top level
//   implication binds right; "/\" and "\/" bind left; "~" and a quantifier
//   prefix bind tightest of the operators. A quantifier's body is the next
//   unary-level formula: (forall z: Object) ~p(z, s) /\ q(x, s) conjoins the
//   quantified negation with q(x, s).
//
// Applications are resolved against the declarations (which precede all
// statements): names declared `rel` split off their final argument as the
// situation. Undeclared applications parse as functional and are rejected
// later by the checker (E001).

struct ParseResult {
    /// Present whenever anything was parseable; statements or declarations
    /// with errors are dropped but the rest of the file survives.
    std::optional<SourceProgram> program;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return program.has_value() && diagnostics.empty(); }
};

ParseResult parse_program(std::string_view source, std::string file_name = "<input>");

/// Parses a single formula against an existing declaration set. Convenience
/// for tests and the corpus tooling; equivalent to parsing a one-statement
/// program with the given declarations in scope.
struct FormulaParseResult {
    NodePtr formula;
    std::vector<Diagnostic> diagnostics;
};
FormulaParseResult parse_formula(std::string_view source,
                                 const std::vector<Declaration>& declarations = {});

} // namespace sitcalc
