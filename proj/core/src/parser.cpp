#include "sitcalc/parser.hpp"

#include "sitcalc/lexer.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace sitcalc {

namespace {

// Thrown for unrecoverable trouble inside one declaration or statement; the
// driver records the diagnostic and resynchronizes at the next ';'.
struct ParseError {
    Diagnostic diagnostic;
};

[[noreturn]] void fail(Span span, std::string message) {
    Diagnostic d;
    d.code = DiagCode::E101;
    d.message = std::move(message);
    d.span = span;
    throw ParseError{std::move(d)};
}

Span join(Span a, Span b) { return Span{a.begin, b.end, a.line, a.column}; }

/// Behavioral terms used at formula positions are wrapped in an atom node;
/// regular terms and formulas pass through.
NodePtr to_formula(NodePtr n) {
    if (is_behavioral_kind(n->kind)) {
        return ast::atom(std::move(n));
    }
    return n;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string file)
        : tokens_(std::move(tokens)), file_(std::move(file)) {}

    ParseResult run() {
        ParseResult result;
        SourceProgram program;
        program.file = file_;

        bool statements_started = false;
        while (!at(TokenKind::EndOfFile)) {
            try {
                switch (peek().kind) {
                case TokenKind::KwVar:
                case TokenKind::KwRel:
                case TokenKind::KwFun:
                    if (statements_started) {
                        fail(peek().span, "declarations must precede statements");
                    }
                    program.declarations.push_back(parse_declaration());
                    break;
                case TokenKind::KwStmt:
                    statements_started = true;
                    program.statements.push_back(parse_statement());
                    break;
                default:
                    fail(peek().span, std::string("expected a declaration or statement, got ") +
                                          token_kind_name(peek().kind));
                }
            } catch (ParseError& e) {
                diags_.push_back(std::move(e.diagnostic));
                recover();
            }
        }

        result.program = std::move(program);
        result.diagnostics = std::move(diags_);
        return result;
    }

    void seed_declarations(const std::vector<Declaration>& decls) {
        for (const Declaration& d : decls) {
            declared_[d.name] = d.kind;
        }
    }

    NodePtr parse_single_formula() {
        NodePtr f = parse_formula();
        if (!at(TokenKind::EndOfFile)) {
            fail(peek().span, std::string("expected end of input, got ") +
                                  token_kind_name(peek().kind));
        }
        return to_formula(std::move(f));
    }

    std::vector<Diagnostic> take_diagnostics() { return std::move(diags_); }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        if (i >= tokens_.size()) {
            i = tokens_.size() - 1; // EndOfFile
        }
        return tokens_[i];
    }

    bool at(TokenKind k) const { return peek().kind == k; }

    Token advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    Token expect(TokenKind k, const char* what) {
        if (!at(k)) {
            fail(peek().span, std::string("expected ") + what + ", got " +
                                  token_kind_name(peek().kind));
        }
        return advance();
    }

    void recover() {
        while (!at(TokenKind::EndOfFile)) {
            if (advance().kind == TokenKind::Semicolon) {
                return;
            }
        }
    }

    // -- declarations -------------------------------------------------------

    Token declared_name() {
        Token name = expect(TokenKind::Identifier, "a name");
        if (name.text == kInitialSituation) {
            fail(name.span, "'s0' names the initial situation and cannot be redeclared");
        }
        if (declared_.count(name.text) > 0) {
            fail(name.span, "'" + name.text + "' is already declared");
        }
        return name;
    }

    Type type_name() {
        Token t = expect(TokenKind::Identifier, "a type name");
        Type out;
        if (!base_type_from_name(t.text, out)) {
            fail(t.span, "unknown type '" + t.text + "'");
        }
        return out;
    }

    Declaration parse_declaration() {
        Declaration d;
        Token intro = advance(); // var/rel/fun
        Token name = declared_name();
        d.name = name.text;
        switch (intro.kind) {
        case TokenKind::KwVar: {
            d.kind = Declaration::Kind::Var;
            expect(TokenKind::Colon, "':'");
            d.types.push_back(type_name());
            while (at(TokenKind::Pipe)) {
                advance();
                d.types.push_back(type_name());
            }
            break;
        }
        case TokenKind::KwRel:
        case TokenKind::KwFun: {
            d.kind = intro.kind == TokenKind::KwRel ? Declaration::Kind::Rel
                                                    : Declaration::Kind::Fun;
            expect(TokenKind::LParen, "'('");
            d.types.push_back(type_name());
            while (at(TokenKind::Comma)) {
                advance();
                d.types.push_back(type_name());
            }
            expect(TokenKind::RParen, "')'");
            break;
        }
        default:
            fail(intro.span, "expected a declaration");
        }
        Token semi = expect(TokenKind::Semicolon, "';'");
        d.span = join(intro.span, semi.span);
        declared_[d.name] = d.kind;
        return d;
    }

    Statement parse_statement() {
        Token intro = advance(); // stmt
        Token name = expect(TokenKind::Identifier, "a statement name");
        if (statement_names_.count(name.text) > 0) {
            fail(name.span, "statement '" + name.text + "' is already defined");
        }
        expect(TokenKind::Colon, "':'");
        NodePtr body = parse_formula();
        Token semi = expect(TokenKind::Semicolon, "';'");
        statement_names_.insert(name.text);
        Statement s;
        s.name = name.text;
        s.body = to_formula(std::move(body));
        s.span = join(intro.span, semi.span);
        return s;
    }

    // -- formulas ------------------------------------------------------------
    //
    // formula := imp [ '=' imp ]        '=' only at statement top level
    // imp     := or [ '=>' imp ]        right-associative
    // or      := and { '\/' and }
    // and     := unary { '/\' unary }
    // unary   := '~' unary | quantifier unary | primary

    NodePtr parse_formula() {
        NodePtr lhs = parse_imp();
        if (at(TokenKind::Equals)) {
            advance();
            NodePtr rhs = parse_imp();
            Span sp = join(lhs->span, rhs->span);
            return ast::eq(to_formula(std::move(lhs)), to_formula(std::move(rhs)), sp);
        }
        return lhs;
    }

    NodePtr parse_imp() {
        NodePtr lhs = parse_or();
        if (at(TokenKind::Implies)) {
            advance();
            NodePtr rhs = parse_imp();
            return combine(NodeKind::Supset, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    NodePtr parse_or() {
        NodePtr lhs = parse_and();
        while (at(TokenKind::OrOp)) {
            advance();
            NodePtr rhs = parse_and();
            lhs = combine(NodeKind::Disj, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    NodePtr parse_and() {
        NodePtr lhs = parse_unary();
        while (at(TokenKind::AndOp)) {
            advance();
            NodePtr rhs = parse_unary();
            lhs = combine(NodeKind::Conj, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    /// Connectives live in the term layer when both sides are regular terms
    /// and in the formula layer otherwise, with bare behavioral sides lifted
    /// to atoms.
    NodePtr combine(NodeKind term_kind, NodePtr lhs, NodePtr rhs) {
        Span sp = join(lhs->span, rhs->span);
        if (is_term_kind(lhs->kind) && is_term_kind(rhs->kind)) {
            switch (term_kind) {
            case NodeKind::Supset: return ast::supset(std::move(lhs), std::move(rhs), sp);
            case NodeKind::Conj: return ast::conj(std::move(lhs), std::move(rhs), sp);
            default: return ast::disj(std::move(lhs), std::move(rhs), sp);
            }
        }
        lhs = to_formula(std::move(lhs));
        rhs = to_formula(std::move(rhs));
        switch (term_kind) {
        case NodeKind::Supset: return ast::supset_f(std::move(lhs), std::move(rhs), sp);
        case NodeKind::Conj: return ast::conj_f(std::move(lhs), std::move(rhs), sp);
        default: return ast::disj_f(std::move(lhs), std::move(rhs), sp);
        }
    }

    NodePtr parse_unary() {
        if (at(TokenKind::Tilde)) {
            Token tilde = advance();
            NodePtr operand = parse_unary();
            Span sp = join(tilde.span, operand->span);
            if (is_formula_kind(operand->kind)) {
                return ast::neg_f(std::move(operand), sp);
            }
            if (is_behavioral_kind(operand->kind)) {
                return ast::neg_b(std::move(operand), sp);
            }
            return ast::neg(std::move(operand), sp);
        }
        if (at(TokenKind::LParen) &&
            (peek(1).kind == TokenKind::KwForall || peek(1).kind == TokenKind::KwExists)) {
            return parse_quantifier();
        }
        return parse_primary();
    }

    NodePtr parse_quantifier() {
        Token open = advance(); // (
        Token kw = advance();   // forall/exists
        Token var = expect(TokenKind::Identifier, "a variable name");
        if (var.text == kInitialSituation) {
            fail(var.span, "'s0' names the initial situation and cannot be bound");
        }
        expect(TokenKind::Colon, "':'");
        std::vector<Type> types;
        types.push_back(type_name());
        while (at(TokenKind::Pipe)) {
            advance();
            types.push_back(type_name());
        }
        expect(TokenKind::RParen, "')'");
        NodePtr body = to_formula(parse_unary());
        Span sp = join(open.span, body->span);
        return ast::quant(kw.kind == TokenKind::KwForall ? QuantKind::Forall : QuantKind::Exists,
                          var.text, std::move(types), std::move(body), sp);
    }

    NodePtr parse_primary() {
        switch (peek().kind) {
        case TokenKind::KwTrue: return ast::lit_true(advance().span);
        case TokenKind::KwFalse: return ast::lit_false(advance().span);
        case TokenKind::KwUnit: return ast::lit_unit(advance().span);
        case TokenKind::KwDo:
        case TokenKind::KwPoss: {
            Token kw = advance();
            expect(TokenKind::LParen, "'('");
            NodePtr operand = parse_imp();
            expect(TokenKind::Comma, "','");
            NodePtr sit = parse_imp();
            Token close = expect(TokenKind::RParen, "')'");
            Span sp = join(kw.span, close.span);
            return kw.kind == TokenKind::KwDo ? ast::do_(std::move(operand), std::move(sit), sp)
                                              : ast::poss(std::move(operand), std::move(sit), sp);
        }
        case TokenKind::Identifier: {
            Token name = advance();
            if (!at(TokenKind::LParen)) {
                return ast::var(name.text, name.span);
            }
            advance(); // (
            std::vector<NodePtr> args;
            args.push_back(parse_imp());
            while (at(TokenKind::Comma)) {
                advance();
                args.push_back(parse_imp());
            }
            Token close = expect(TokenKind::RParen, "')'");
            Span sp = join(name.span, close.span);
            auto decl = declared_.find(name.text);
            if (decl != declared_.end() && decl->second == Declaration::Kind::Rel &&
                args.size() >= 2) {
                NodePtr sit = std::move(args.back());
                args.pop_back();
                return ast::rel_fluent(name.text, std::move(args), std::move(sit), sp);
            }
            // Functional shape also covers undeclared names and relational
            // names applied to too few arguments; the checker sorts those
            // out (E001/E002).
            return ast::fun_fluent(name.text, std::move(args), sp);
        }
        case TokenKind::LParen: {
            Token open = advance();
            std::vector<NodePtr> elems;
            elems.push_back(parse_imp());
            while (at(TokenKind::Comma)) {
                advance();
                elems.push_back(parse_imp());
            }
            Token close = expect(TokenKind::RParen, "')'");
            if (elems.size() == 1) {
                return elems[0]; // grouping
            }
            return ast::seq(std::move(elems), join(open.span, close.span));
        }
        default:
            fail(peek().span,
                 std::string("expected a term, got ") + token_kind_name(peek().kind));
        }
    }

    std::vector<Token> tokens_;
    std::string file_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> diags_;
    std::map<std::string, Declaration::Kind> declared_;
    std::set<std::string> statement_names_;
};

} // namespace

ParseResult parse_program(std::string_view source, std::string file_name) {
    LexResult lexed = tokenize(source);
    if (lexed.error) {
        ParseResult result;
        SourceProgram program;
        program.file = std::move(file_name);
        result.program = std::move(program);
        result.diagnostics.push_back(*lexed.error);
        return result;
    }
    Parser parser(std::move(lexed.tokens), std::move(file_name));
    return parser.run();
}

FormulaParseResult parse_formula(std::string_view source,
                                 const std::vector<Declaration>& declarations) {
    FormulaParseResult result;
    LexResult lexed = tokenize(source);
    if (lexed.error) {
        result.diagnostics.push_back(*lexed.error);
        return result;
    }
    Parser parser(std::move(lexed.tokens), "<formula>");
    parser.seed_declarations(declarations);
    try {
        result.formula = parser.parse_single_formula();
    } catch (ParseError& e) {
        result.diagnostics.push_back(std::move(e.diagnostic));
    }
    for (Diagnostic& d : parser.take_diagnostics()) {
        result.diagnostics.push_back(std::move(d));
    }
    return result;
}

} // namespace sitcalc
