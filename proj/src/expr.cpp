#include "curvette/expr.hpp"

#include <cctype>

namespace curvette {

namespace {

struct Token {
    enum Kind { Num, Ident, Op, LParen, RParen, End } kind;
    std::string text;
    size_t col; // 1-based
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t col = i_ + 1;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, "", col};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Num, s_.substr(i_, j - i_), col};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::Ident, s_.substr(i_, j - i_), col};
            i_ = j;
            return;
        }
        if (c == '(') { tok_ = {Token::LParen, "(", col}; ++i_; return; }
        if (c == ')') { tok_ = {Token::RParen, ")", col}; ++i_; return; }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
            tok_ = {Token::Op, std::string(1, c), col};
            ++i_;
            return;
        }
        throw math_error(errc::syntax_error,
                         "col " + std::to_string(col) + ": unexpected character '" +
                             std::string(1, c) + "'");
    }

    const std::string& s_;
    size_t i_ = 0;
    Token tok_{Token::End, "", 1};
};

class Parser {
public:
    Parser(const std::string& text, std::vector<std::string> vars)
        : lex_(text), vars_(std::move(vars)) {}

    Poly parse() {
        Poly p = expr();
        if (lex_.peek().kind != Token::End)
            throw math_error(errc::syntax_error,
                             "col " + std::to_string(lex_.peek().col) + ": trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw math_error(errc::syntax_error, "col " + std::to_string(t.col) + ": " + msg);
    }

    Poly expr() {
        Poly acc = term();
        while (lex_.peek().kind == Token::Op &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            Token op = lex_.take();
            Poly rhs = term();
            acc = op.text == "+" ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (lex_.peek().kind == Token::Op &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            Token op = lex_.take();
            Poly rhs = factor();
            if (op.text == "*") {
                acc = acc * rhs;
            } else {
                RatFn d = as_coefficient(rhs, op);
                if (d.is_zero()) fail(op, "division by zero");
                acc = acc.scaled(d.inverse());
            }
        }
        return acc;
    }

    Poly factor() {
        bool neg = false;
        while (lex_.peek().kind == Token::Op &&
               (lex_.peek().text == "-" || lex_.peek().text == "+")) {
            if (lex_.take().text == "-") neg = !neg;
        }
        Poly p = power();
        return neg ? -p : p;
    }

    Poly power() {
        Poly base = primary();
        if (lex_.peek().kind == Token::Op && lex_.peek().text == "^") {
            Token caret = lex_.take();
            if (lex_.peek().kind != Token::Num)
                fail(lex_.peek(), "expected a nonnegative integer exponent");
            Token e = lex_.take();
            unsigned long exp = std::stoul(e.text);
            if (exp > 4096) fail(e, "exponent too large");
            base = base.pow(static_cast<unsigned>(exp));
        }
        return base;
    }

    Poly primary() {
        Token t = lex_.peek();
        if (t.kind == Token::Num) {
            lex_.take();
            return Poly::constant(vars_, RatFn(Rat::from_string(t.text)));
        }
        if (t.kind == Token::Ident) {
            lex_.take();
            if (t.text == "u") return Poly::constant(vars_, RatFn::param());
            for (size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == t.text) return Poly::variable(vars_, i);
            throw math_error(errc::unknown_variable,
                             "col " + std::to_string(t.col) + ": unknown variable '" + t.text + "'");
        }
        if (t.kind == Token::LParen) {
            lex_.take();
            Poly p = expr();
            if (lex_.peek().kind != Token::RParen) fail(lex_.peek(), "expected ')'");
            lex_.take();
            return p;
        }
        fail(t, "expected a number, variable or '('");
    }

    RatFn as_coefficient(const Poly& p, const Token& where) {
        Exps zero(vars_.size(), 0);
        RatFn c;
        for (const auto& [e, coef] : p.terms()) {
            if (e != zero)
                fail(where, "division only by coefficient (parameter-only) expressions");
            c = coef;
        }
        return c;
    }

    Lexer lex_;
    std::vector<std::string> vars_;
};

} // namespace

Poly parse_poly_expr(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).parse();
}

TruncSeries parse_series_expr(const std::string& text, const Rat& trunc) {
    Poly p = parse_poly_expr(text, {"t"});
    TruncSeries s(trunc);
    for (const auto& [e, c] : p.terms()) s.add_term(Rat(e[0]), c);
    return s;
}

} // namespace curvette
