#include "conaweave/parser.hpp"

#include <optional>

namespace conaweave {

namespace {

// What an expression is allowed to contain depends on where it appears.
struct ExprContext {
    bool allow_result = false;   // method ensures, after-advice clauses/bodies
    bool allow_old = false;      // ensures clauses only
    bool allow_call = false;     // statement bodies only
};

struct ParseFailure {};   // unwinds to the nearest recovery point

class Parser {
  public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    ParseResult run() {
        ParseResult out;
        while (!at_eof()) {
            size_t before = pos_;
            try {
                parse_declaration(out.program);
            } catch (const ParseFailure&) {
                recover_to_declaration();
            }
            if (pos_ == before) recover_to_declaration();   // guarantee progress
        }
        out.errors = std::move(errors_);
        return out;
    }

  private:
    const std::vector<Token>& toks_;
    size_t pos_ = 0;
    std::vector<Diagnostic> errors_;

    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& advance() {
        const Token& t = peek();
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool at_eof() const { return peek().kind == TokenKind::EndOfInput; }

    [[noreturn]] void fail(const std::string& message, DiagCode code = DiagCode::ParseError) {
        errors_.push_back({code, message, peek().span});
        throw ParseFailure{};
    }

    void expect_op(const std::string& op, const std::string& what) {
        if (!peek().is_op(op)) fail("expected '" + op + "' " + what);
        advance();
    }
    void expect_keyword(const std::string& kw) {
        if (!peek().is_keyword(kw)) fail("expected '" + kw + "'");
        advance();
    }
    std::string expect_identifier(const std::string& what) {
        if (peek().kind != TokenKind::Identifier) fail("expected " + what);
        return advance().lexeme;
    }

    // Span from a start token through the last consumed token (same-line best effort).
    SourceSpan span_from(const SourceSpan& start) const {
        SourceSpan s = start;
        if (pos_ > 0) {
            const Token& last = toks_[pos_ - 1];
            if (last.span.line == start.line && last.span.column >= start.column)
                s.length = last.span.column + last.span.length - start.column;
        }
        return s;
    }

    void recover_to_declaration() {
        int depth = 0;
        while (!at_eof()) {
            const Token& t = peek();
            if (t.is_op("{")) ++depth;
            if (t.is_op("}")) {
                if (depth > 0) --depth;
                advance();
                continue;
            }
            if (depth == 0 && t.kind == TokenKind::Keyword &&
                (t.lexeme == "class" || t.lexeme == "aspect" || t.lexeme == "agnostic" ||
                 t.lexeme == "obedient" || t.lexeme == "rebellious")) {
                return;
            }
            advance();
        }
    }

    // ---- declarations ------------------------------------------------

    void parse_declaration(RawProgram& program) {
        const Token& t = peek();
        if (t.is_keyword("class")) {
            program.classes.push_back(parse_class());
            return;
        }
        if (t.is_keyword("agnostic") || t.is_keyword("obedient") || t.is_keyword("rebellious")) {
            AspectCategory cat = t.lexeme == "agnostic"   ? AspectCategory::Agnostic
                                 : t.lexeme == "obedient" ? AspectCategory::Obedient
                                                          : AspectCategory::Rebellious;
            advance();
            program.aspects.push_back(parse_aspect(cat));
            return;
        }
        if (t.is_keyword("aspect")) {
            // Report with the dedicated code, then keep parsing the aspect so
            // the rest of the file is still checked.
            errors_.push_back({DiagCode::MissingCategory,
                               "aspect declaration requires a category keyword "
                               "(agnostic, obedient or rebellious)",
                               t.span});
            program.aspects.push_back(parse_aspect(std::nullopt));
            return;
        }
        fail("expected 'class' or an aspect declaration");
    }

    ClassDecl parse_class() {
        ClassDecl cls;
        cls.span = peek().span;
        expect_keyword("class");
        cls.name = expect_identifier("class name");
        if (peek().is_keyword("extends")) {
            advance();
            cls.supertype = expect_identifier("supertype name");
        }
        expect_op("{", "to open class body");
        while (!peek().is_op("}")) {
            if (at_eof()) fail("unterminated class body");
            if (peek().is_keyword("var")) {
                cls.fields.push_back(parse_field());
            } else if (peek().is_keyword("method")) {
                cls.methods.push_back(parse_method());
            } else {
                fail("expected 'var' or 'method' in class body");
            }
        }
        advance();   // '}'
        return cls;
    }

    FieldDecl parse_field() {
        FieldDecl f;
        f.span = peek().span;
        expect_keyword("var");
        f.name = expect_identifier("field name");
        expect_op(":", "after field name");
        f.kind = parse_kind();
        expect_op(";", "after field declaration");
        return f;
    }

    ValueKind parse_kind() {
        if (peek().kind != TokenKind::Identifier) fail("expected a kind (int, bool or string)");
        std::string k = advance().lexeme;
        if (k == "int") return ValueKind::Int;
        if (k == "bool") return ValueKind::Bool;
        if (k == "string") return ValueKind::String;
        fail("unknown kind '" + k + "' (expected int, bool or string)");
    }

    MethodDecl parse_method() {
        MethodDecl m;
        m.span = peek().span;
        expect_keyword("method");
        m.name = expect_identifier("method name");
        expect_op("(", "after method name");
        if (!peek().is_op(")")) {
            while (true) {
                Param p;
                p.span = peek().span;
                p.name = expect_identifier("parameter name");
                expect_op(":", "after parameter name");
                p.kind = parse_kind();
                m.params.push_back(std::move(p));
                if (!peek().is_op(",")) break;
                advance();
            }
        }
        expect_op(")", "after parameter list");
        if (peek().is_keyword("returns")) {
            advance();
            m.return_kind = parse_kind();
        }
        parse_contract_clauses(m.pre, m.pre_span, m.post, m.post_span,
                               /*result_in_pre=*/false, /*result_in_post=*/true, m.span);
        m.body = parse_block({.allow_result = false, .allow_old = false, .allow_call = true},
                             /*allow_return=*/true, /*allow_result_write=*/false);
        return m;
    }

    // Parses any number of requires/ensures clauses; multiple clauses of the
    // same side are conjoined left to right.
    void parse_contract_clauses(Expr& pre, SourceSpan& pre_span, Expr& post, SourceSpan& post_span,
                                bool result_in_pre, bool result_in_post,
                                const SourceSpan& header_span) {
        bool have_pre = false;
        bool have_post = false;
        pre = Expr::literal_true(header_span);
        post = Expr::literal_true(header_span);
        pre_span = header_span;
        post_span = header_span;
        while (peek().is_keyword("requires") || peek().is_keyword("ensures")) {
            bool is_pre = peek().is_keyword("requires");
            advance();
            ExprContext ctx;
            ctx.allow_old = !is_pre;
            ctx.allow_result = is_pre ? result_in_pre : result_in_post;
            ctx.allow_call = false;
            Expr clause = parse_expr(ctx);
            auto conjoin = [](Expr& slot, bool& have, Expr clause_expr) {
                if (!have) {
                    slot = std::move(clause_expr);
                    have = true;
                    return;
                }
                Expr conj;
                conj.kind = Expr::Kind::Binary;
                conj.bin_op = BinaryOp::And;
                conj.span = slot.span;
                conj.children.push_back(std::move(slot));
                conj.children.push_back(std::move(clause_expr));
                slot = std::move(conj);
            };
            if (is_pre) {
                if (!have_pre) pre_span = clause.span;
                conjoin(pre, have_pre, std::move(clause));
            } else {
                if (!have_post) post_span = clause.span;
                conjoin(post, have_post, std::move(clause));
            }
        }
    }

    AspectDecl parse_aspect(std::optional<AspectCategory> category) {
        AspectDecl a;
        a.category = category;
        a.span = peek().span;
        expect_keyword("aspect");
        a.name = expect_identifier("aspect name");
        expect_op("{", "to open aspect body");

        if (!peek().is_keyword("pointcut")) fail("expected 'pointcut' declaration");
        a.pointcut.span = peek().span;
        advance();
        if (peek().is_op("*")) {
            a.pointcut.class_pattern = "*";
            advance();
        } else {
            a.pointcut.class_pattern = expect_identifier("class name or '*' in pointcut");
        }
        expect_op(".", "in pointcut pattern");
        a.pointcut.method_name = expect_identifier("method name in pointcut");
        expect_op(";", "after pointcut");

        while (!peek().is_op("}")) {
            if (at_eof()) fail("unterminated aspect body");
            bool is_before;
            if (peek().is_keyword("before")) {
                is_before = true;
            } else if (peek().is_keyword("after")) {
                is_before = false;
            } else {
                fail("expected 'before' or 'after' advice");
            }
            AdviceDecl adv;
            adv.span = peek().span;
            adv.position = is_before ? AdvicePosition::Before : AdvicePosition::After;
            advance();
            // After-advice runs once the body has produced a value, so both of
            // its clauses may mention `result`; before-advice clauses may not.
            parse_contract_clauses(adv.pre, adv.pre_span, adv.post, adv.post_span,
                                   /*result_in_pre=*/!is_before, /*result_in_post=*/!is_before,
                                   adv.span);
            adv.body = parse_block({.allow_result = !is_before, .allow_old = false, .allow_call = true},
                                   /*allow_return=*/false, /*allow_result_write=*/!is_before);
            auto& slot = is_before ? a.before : a.after;
            if (slot.has_value())
                fail(std::string("duplicate ") + (is_before ? "before" : "after") + " advice");
            slot = std::move(adv);
        }
        advance();   // '}'
        return a;
    }

    // ---- statements --------------------------------------------------

    std::vector<Stmt> parse_block(ExprContext body_ctx, bool allow_return, bool allow_result_write) {
        expect_op("{", "to open a block");
        std::vector<Stmt> stmts;
        while (!peek().is_op("}")) {
            if (at_eof()) fail("unterminated block");
            stmts.push_back(parse_stmt(body_ctx, allow_return, allow_result_write));
        }
        advance();
        return stmts;
    }

    Stmt parse_stmt(ExprContext ctx, bool allow_return, bool allow_result_write) {
        Stmt s;
        s.span = peek().span;

        if (peek().is_keyword("var")) {
            advance();
            s.kind = Stmt::Kind::Local;
            s.name = expect_identifier("local variable name");
            if (peek().is_op(":")) {
                advance();
                s.declared_kind = parse_kind();
            }
            expect_op("=", "in local variable declaration");
            s.expr = parse_expr(ctx);
            expect_op(";", "after statement");
            return s;
        }

        if (peek().is_keyword("if")) {
            advance();
            s.kind = Stmt::Kind::If;
            expect_op("(", "after 'if'");
            s.expr = parse_expr(ctx);
            expect_op(")", "after condition");
            s.then_body = parse_block(ctx, allow_return, allow_result_write);
            if (peek().is_keyword("else")) {
                advance();
                if (peek().is_keyword("if")) {
                    s.else_body.push_back(parse_stmt(ctx, allow_return, allow_result_write));
                } else {
                    s.else_body = parse_block(ctx, allow_return, allow_result_write);
                }
            }
            return s;
        }

        if (peek().is_keyword("return")) {
            if (!allow_return) fail("'return' is not allowed in advice bodies");
            advance();
            s.kind = Stmt::Kind::Return;
            if (!peek().is_op(";")) s.expr = parse_expr(ctx);
            expect_op(";", "after return statement");
            return s;
        }

        if (peek().is_keyword("result") && peek(1).is_op("=") ) {
            if (!allow_result_write) fail("'result' can only be assigned in after-advice");
            advance();
            advance();
            s.kind = Stmt::Kind::Assign;
            s.name = "result";
            s.expr = parse_expr(ctx);
            expect_op(";", "after statement");
            return s;
        }

        if (peek().kind == TokenKind::Identifier && peek(1).is_op("=")) {
            s.kind = Stmt::Kind::Assign;
            s.name = advance().lexeme;
            advance();   // '='
            s.expr = parse_expr(ctx);
            expect_op(";", "after statement");
            return s;
        }

        s.kind = Stmt::Kind::ExprStmt;
        s.expr = parse_expr(ctx);
        expect_op(";", "after statement");
        return s;
    }

    // ---- expressions (precedence climbing) ----------------------------

    Expr parse_expr(const ExprContext& ctx) { return parse_or(ctx); }

    Expr parse_or(const ExprContext& ctx) {
        Expr lhs = parse_and(ctx);
        while (peek().is_op("||")) {
            advance();
            Expr rhs = parse_and(ctx);
            lhs = make_binary(BinaryOp::Or, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr parse_and(const ExprContext& ctx) {
        Expr lhs = parse_comparison(ctx);
        while (peek().is_op("&&")) {
            advance();
            Expr rhs = parse_comparison(ctx);
            lhs = make_binary(BinaryOp::And, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr parse_comparison(const ExprContext& ctx) {
        Expr lhs = parse_additive(ctx);
        static const std::pair<const char*, BinaryOp> cmps[] = {
            {"==", BinaryOp::Eq}, {"!=", BinaryOp::Ne}, {"<=", BinaryOp::Le},
            {">=", BinaryOp::Ge}, {"<", BinaryOp::Lt},  {">", BinaryOp::Gt},
        };
        for (const auto& [spelling, op] : cmps) {
            if (peek().is_op(spelling)) {
                advance();
                Expr rhs = parse_additive(ctx);
                return make_binary(op, std::move(lhs), std::move(rhs));
            }
        }
        return lhs;
    }

    Expr parse_additive(const ExprContext& ctx) {
        Expr lhs = parse_multiplicative(ctx);
        while (peek().is_op("+") || peek().is_op("-")) {
            BinaryOp op = peek().is_op("+") ? BinaryOp::Add : BinaryOp::Sub;
            advance();
            Expr rhs = parse_multiplicative(ctx);
            lhs = make_binary(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr parse_multiplicative(const ExprContext& ctx) {
        Expr lhs = parse_unary(ctx);
        while (peek().is_op("*") || peek().is_op("/") || peek().is_op("%")) {
            BinaryOp op = peek().is_op("*")   ? BinaryOp::Mul
                          : peek().is_op("/") ? BinaryOp::Div
                                              : BinaryOp::Mod;
            advance();
            Expr rhs = parse_unary(ctx);
            lhs = make_binary(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr parse_unary(const ExprContext& ctx) {
        if (peek().is_op("!") || peek().is_op("-")) {
            Expr e;
            e.kind = Expr::Kind::Unary;
            e.span = peek().span;
            e.un_op = peek().is_op("!") ? UnaryOp::Not : UnaryOp::Neg;
            advance();
            e.children.push_back(parse_unary(ctx));
            e.span = span_from(e.span);
            return e;
        }
        return parse_primary(ctx);
    }

    Expr parse_primary(const ExprContext& ctx) {
        const Token& t = peek();
        Expr e;
        e.span = t.span;

        if (t.kind == TokenKind::IntLiteral) {
            advance();
            e.kind = Expr::Kind::IntLit;
            e.int_value = std::stoll(t.lexeme);
            return e;
        }
        if (t.kind == TokenKind::StringLiteral) {
            advance();
            e.kind = Expr::Kind::StringLit;
            e.text = t.lexeme;
            return e;
        }
        if (t.is_keyword("true") || t.is_keyword("false")) {
            advance();
            e.kind = Expr::Kind::BoolLit;
            e.bool_value = t.lexeme == "true";
            return e;
        }
        if (t.is_keyword("result")) {
            if (!ctx.allow_result)
                fail("'result' is only available in ensures clauses and after-advice");
            advance();
            e.kind = Expr::Kind::Result;
            return e;
        }
        if (t.is_keyword("old")) {
            if (!ctx.allow_old) fail("'old(...)' is only available in ensures clauses");
            advance();
            expect_op("(", "after 'old'");
            e.kind = Expr::Kind::Old;
            ExprContext inner = ctx;
            inner.allow_old = false;      // old() does not nest
            inner.allow_result = false;   // snapshots hold fields and args only
            e.children.push_back(parse_expr(inner));
            expect_op(")", "after old-expression");
            e.span = span_from(e.span);
            return e;
        }
        if (t.kind == TokenKind::Identifier) {
            advance();
            if (peek().is_op("(")) {
                if (!ctx.allow_call) fail("calls are not allowed in requires/ensures clauses");
                advance();
                e.kind = Expr::Kind::Call;
                e.text = t.lexeme;
                if (!peek().is_op(")")) {
                    while (true) {
                        e.children.push_back(parse_expr(ctx));
                        if (!peek().is_op(",")) break;
                        advance();
                    }
                }
                expect_op(")", "after call arguments");
                e.span = span_from(e.span);
                return e;
            }
            e.kind = Expr::Kind::Name;
            e.text = t.lexeme;
            return e;
        }
        if (t.is_op("(")) {
            advance();
            Expr inner = parse_expr(ctx);
            expect_op(")", "to close parenthesized expression");
            return inner;
        }
        fail("expected an expression");
    }

    Expr make_binary(BinaryOp op, Expr lhs, Expr rhs) {
        Expr e;
        e.kind = Expr::Kind::Binary;
        e.bin_op = op;
        e.span = lhs.span;
        SourceSpan end = rhs.span;
        if (end.line == e.span.line && end.column >= e.span.column)
            e.span.length = end.column + end.length - e.span.column;
        e.children.push_back(std::move(lhs));
        e.children.push_back(std::move(rhs));
        return e;
    }
};

} // namespace

ParseResult parse(const std::vector<Token>& tokens) {
    return Parser(tokens).run();
}

ParseResult parse_source(const std::string& source, const std::string& file) {
    LexResult lr = lex(source, file);
    if (!lr.ok()) {
        ParseResult out;
        out.errors = lr.errors;
        return out;
    }
    return parse(lr.tokens);
}

} // namespace conaweave
