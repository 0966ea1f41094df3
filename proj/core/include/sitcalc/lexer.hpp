#pragma once

#include "sitcalc/diagnostic.hpp"
#include "sitcalc/span.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sitcalc {

enum class TokenKind : std::uint8_t {
    Identifier,
    KwForall,
    KwExists,
    KwDo,
    KwPoss,
    KwTrue,
    KwFalse,
    KwUnit,
    KwVar,
    KwRel,
    KwFun,
    KwStmt,
    Tilde,     // ~
    AndOp,     // the two-character and connective (slash backslash)
    OrOp,      // the two-character or connective (backslash slash)
    Implies,   // =>
    Equals,    // =
    Colon,     // :
    Pipe,      // |
    LParen,
    RParen,
    Comma,
    Semicolon,
    EndOfFile,
};

const char* token_kind_name(TokenKind k);

struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string text;
    Span span{};
};

/// Tokenization is total: either the whole input tokenizes (error is empty
/// and tokens ends with EndOfFile) or exactly one E101 is reported for the
/// first offending byte and tokens holds everything before it.
struct LexResult {
    std::vector<Token> tokens;
    std::optional<Diagnostic> error;
};

/// '#' starts a comment running to end of line. Identifiers are
/// [A-Za-z_][A-Za-z0-9_]*; keywords are carved out of that space.
LexResult tokenize(std::string_view source);

} // namespace sitcalc
