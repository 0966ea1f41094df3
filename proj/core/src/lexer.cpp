#include "sitcalc/lexer.hpp"

#include <cctype>
#include <map>

namespace sitcalc {

const char* token_kind_name(TokenKind k) {
    switch (k) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::KwForall: return "'forall'";
    case TokenKind::KwExists: return "'exists'";
    case TokenKind::KwDo: return "'do'";
    case TokenKind::KwPoss: return "'poss'";
    case TokenKind::KwTrue: return "'true'";
    case TokenKind::KwFalse: return "'false'";
    case TokenKind::KwUnit: return "'unit'";
    case TokenKind::KwVar: return "'var'";
    case TokenKind::KwRel: return "'rel'";
    case TokenKind::KwFun: return "'fun'";
    case TokenKind::KwStmt: return "'stmt'";
    case TokenKind::Tilde: return "'~'";
    case TokenKind::AndOp: return "'/\\'";
    case TokenKind::OrOp: return "'\\/'";
    case TokenKind::Implies: return "'=>'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Colon: return "':'";
    case TokenKind::Pipe: return "'|'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::EndOfFile: return "end of input";
    }
    return "?";
}

namespace {

const std::map<std::string, TokenKind, std::less<>>& keywords() {
    static const std::map<std::string, TokenKind, std::less<>> table = {
        {"forall", TokenKind::KwForall}, {"exists", TokenKind::KwExists},
        {"do", TokenKind::KwDo},         {"poss", TokenKind::KwPoss},
        {"true", TokenKind::KwTrue},     {"false", TokenKind::KwFalse},
        {"unit", TokenKind::KwUnit},     {"var", TokenKind::KwVar},
        {"rel", TokenKind::KwRel},       {"fun", TokenKind::KwFun},
        {"stmt", TokenKind::KwStmt},
    };
    return table;
}

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace

LexResult tokenize(std::string_view source) {
    LexResult result;
    std::uint32_t pos = 0;
    std::uint32_t line = 1;
    std::uint32_t column = 1;
    const auto n = static_cast<std::uint32_t>(source.size());

    auto advance = [&](std::uint32_t count) {
        for (std::uint32_t i = 0; i < count; ++i) {
            if (source[pos] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++pos;
        }
    };

    auto push = [&](TokenKind kind, std::uint32_t length) {
        Token t;
        t.kind = kind;
        t.text = std::string(source.substr(pos, length));
        t.span = Span{pos, pos + length, line, column};
        result.tokens.push_back(std::move(t));
        advance(length);
    };

    while (pos < n) {
        const char c = source[pos];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (pos < n && source[pos] != '\n') {
                advance(1);
            }
            continue;
        }
        if (ident_start(c)) {
            std::uint32_t len = 1;
            while (pos + len < n && ident_char(source[pos + len])) {
                ++len;
            }
            auto word = source.substr(pos, len);
            auto kw = keywords().find(word);
            push(kw == keywords().end() ? TokenKind::Identifier : kw->second, len);
            continue;
        }
        switch (c) {
        case '~': push(TokenKind::Tilde, 1); continue;
        case ':': push(TokenKind::Colon, 1); continue;
        case '|': push(TokenKind::Pipe, 1); continue;
        case '(': push(TokenKind::LParen, 1); continue;
        case ')': push(TokenKind::RParen, 1); continue;
        case ',': push(TokenKind::Comma, 1); continue;
        case ';': push(TokenKind::Semicolon, 1); continue;
        case '/':
            if (pos + 1 < n && source[pos + 1] == '\\') {
                push(TokenKind::AndOp, 2);
                continue;
            }
            break;
        case '\\':
            if (pos + 1 < n && source[pos + 1] == '/') {
                push(TokenKind::OrOp, 2);
                continue;
            }
            break;
        case '=':
            if (pos + 1 < n && source[pos + 1] == '>') {
                push(TokenKind::Implies, 2);
            } else {
                push(TokenKind::Equals, 1);
            }
            continue;
        default:
            break;
        }
        Diagnostic d;
        d.code = DiagCode::E101;
        d.message = std::string("unexpected character '") + c + "'";
        d.span = Span{pos, pos + 1, line, column};
        result.error = std::move(d);
        return result;
    }

    Token eof;
    eof.kind = TokenKind::EndOfFile;
    eof.span = Span{pos, pos, line, column};
    result.tokens.push_back(std::move(eof));
    return result;
}

} // namespace sitcalc
