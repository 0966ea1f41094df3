#include "sitcalc/worldfile.hpp"

#include "sitcalc/ast.hpp"
#include "sitcalc/lexer.hpp"

#include <set>

namespace sitcalc {

namespace {

struct WorldParser {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    std::vector<Diagnostic> diags;
    World world;
    bool failed = false;

    const Token& peek() const { return tokens[pos]; }
    bool at(TokenKind k) const { return peek().kind == k; }
    Token advance() { return tokens[pos < tokens.size() - 1 ? pos++ : pos]; }

    void error(DiagCode code, Span span, std::string message) {
        Diagnostic d;
        d.code = code;
        d.message = std::move(message);
        d.span = span;
        diags.push_back(std::move(d));
    }

    void recover() {
        failed = true;
        while (!at(TokenKind::EndOfFile)) {
            if (advance().kind == TokenKind::Semicolon) {
                return;
            }
        }
    }

    bool expect(TokenKind k, const char* what) {
        if (!at(k)) {
            error(DiagCode::E101, peek().span,
                  std::string("expected ") + what + ", got " + token_kind_name(peek().kind));
            recover();
            return false;
        }
        advance();
        return true;
    }

    std::optional<std::vector<Token>> name_list() {
        std::vector<Token> names;
        if (!at(TokenKind::Identifier)) {
            error(DiagCode::E101, peek().span, "expected a name");
            recover();
            return std::nullopt;
        }
        names.push_back(advance());
        while (at(TokenKind::Comma)) {
            advance();
            if (!at(TokenKind::Identifier)) {
                error(DiagCode::E101, peek().span, "expected a name");
                recover();
                return std::nullopt;
            }
            names.push_back(advance());
        }
        return names;
    }

    void declare_names(std::vector<std::string>& into, std::set<std::string>& seen) {
        auto names = name_list();
        if (!names) {
            return;
        }
        for (const Token& t : *names) {
            if (!seen.insert(t.text).second) {
                error(DiagCode::E101, t.span, "'" + t.text + "' is declared twice");
                continue;
            }
            into.push_back(t.text);
        }
        expect(TokenKind::Semicolon, "';'");
    }

    void table_row(bool relational) {
        advance(); // rel/fun keyword
        if (!at(TokenKind::Identifier)) {
            error(DiagCode::E101, peek().span, "expected a fluent name");
            recover();
            return;
        }
        Token fluent = advance();
        if (!expect(TokenKind::LParen, "'('")) {
            return;
        }
        auto names = name_list();
        if (!names) {
            return;
        }
        if (!expect(TokenKind::RParen, "')'") || !expect(TokenKind::Semicolon, "';'")) {
            return;
        }
        std::vector<std::string> tuple;
        tuple.reserve(names->size());
        bool ok = true;
        for (const Token& t : *names) {
            if (!world.has_instance(t.text) && !world.has_situation(t.text)) {
                error(DiagCode::E010, t.span,
                      "'" + t.text + "' is not a declared instance or situation");
                ok = false;
                continue;
            }
            tuple.push_back(t.text);
        }
        if (!ok) {
            failed = true;
            return;
        }
        auto& tables = relational ? world.rel_tables : world.fun_tables;
        tables[fluent.text].insert(std::move(tuple));
    }

    void run() {
        std::set<std::string> instance_names;
        std::set<std::string> situation_names;
        while (!at(TokenKind::EndOfFile)) {
            const Token& t = peek();
            if (t.kind == TokenKind::Identifier && t.text == "instances") {
                advance();
                declare_names(world.instances, instance_names);
            } else if (t.kind == TokenKind::Identifier && t.text == "situations") {
                advance();
                declare_names(world.situations, situation_names);
            } else if (t.kind == TokenKind::KwRel || t.kind == TokenKind::KwFun) {
                table_row(t.kind == TokenKind::KwRel);
            } else {
                error(DiagCode::E101, t.span,
                      std::string("expected 'instances', 'situations', 'rel' or 'fun', got ") +
                          token_kind_name(t.kind));
                recover();
            }
        }
        if (world.situations.empty() || world.situations.front() != kInitialSituation) {
            Span sp = tokens.empty() ? Span{} : tokens.front().span;
            error(DiagCode::E101, sp, "the situation list must start with 's0'");
            failed = true;
        }
    }
};

} // namespace

WorldParseResult parse_world(std::string_view source, std::string name) {
    WorldParseResult result;
    LexResult lexed = tokenize(source);
    if (lexed.error) {
        result.diagnostics.push_back(*lexed.error);
        return result;
    }
    WorldParser parser;
    parser.tokens = std::move(lexed.tokens);
    parser.world.name = std::move(name);
    parser.run();
    result.diagnostics = std::move(parser.diags);
    if (!parser.failed && result.diagnostics.empty()) {
        result.world = std::move(parser.world);
    }
    return result;
}

} // namespace sitcalc
