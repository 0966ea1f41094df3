#pragma once

#include "sitcalc/context.hpp"
#include "sitcalc/diagnostic.hpp"
#include "sitcalc/program.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sitcalc {

// Automatic corrections for the two error shapes the checker can repair:
//
//   WrapInRelationalFluent (E006):  an `=` statement that compares a
//     Situation against an Object is replaced by a fresh relational fluent
//     holding the Object term inside the situation the other side mentions.
//     `color(x, do(paint(x, c), s)) = c` becomes
//     `inColor(c, do(paint(x, c), s))` plus a declaration for inColor.
//
//   AddSituationArgument (E005):  a conjunction whose conjuncts disagree
//     because one of them is an Action-typed functional-fluent application
//     gets a situation argument appended to the odd one out, and that
//     fluent's declaration switches from `fun` to `rel`.
//     `~heavy(x)` becomes `~heavy(x, s)` with `rel heavy(Object)`.

enum class FixKind : uint8_t {
    WrapInRelationalFluent,
    AddSituationArgument,
};

const char* fix_kind_name(FixKind kind);

struct Fix {
    FixKind kind;
    int statement = -1;    // index into program.statements
    Span target;           // span of the node being replaced
    NodePtr original;      // node as it appeared when the fix was suggested
    NodePtr replacement;   // node to put in its place
    std::optional<Declaration> add_declaration;     // new fluent to declare
    std::optional<Declaration> replace_declaration; // existing decl to rewrite
    std::string rationale; // one sentence, used by --suggest-fixes output
};

/// Suggests fixes for a single diagnostic. Returns an empty vector when the
/// diagnostic is not one of the repairable shapes.
std::vector<Fix> suggest_fixes(const SourceProgram& program, const TypingContext& w,
                               const Diagnostic& diagnostic);

struct ApplyResult {
    std::optional<SourceProgram> program; // nullopt on failure
    std::string error;                    // empty on success
};

/// Applies one fix to the program, returning the rewritten program. The fix
/// is rejected when the statement no longer contains the original node at
/// the recorded span (a staleness check).
ApplyResult apply_fix(const SourceProgram& program, const Fix& fix);

/// Applies a batch of fixes (sorted internally so earlier edits cannot
/// invalidate later spans), then reprints and reparses once so the result
/// carries canonical spans.
ApplyResult apply_fixes(const SourceProgram& program, const std::vector<Fix>& fixes);

} // namespace sitcalc
