#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "glcq/fock.hpp"

namespace glcq {

/// Any value the expression language can denote.
using ExprValue = std::variant<Scalar, TorusElem, LieElem, Poly>;

namespace detail {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (at_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[at_]))) ++at_;
        const std::size_t start = at_;
        if (at_ >= src_.size()) return {Tok::End, "", start};
        const char c = src_[at_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (at_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at_]))) ++at_;
            return {Tok::Int, src_.substr(start, at_ - start), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (at_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[at_])) || src_[at_] == '_'))
                ++at_;
            return {Tok::Ident, src_.substr(start, at_ - start), start};
        }
        ++at_;
        switch (c) {
        case '+': return {Tok::Plus, "+", start};
        case '-': return {Tok::Minus, "-", start};
        case '*': return {Tok::Star, "*", start};
        case '/': return {Tok::Slash, "/", start};
        case '^': return {Tok::Caret, "^", start};
        case '(': return {Tok::LParen, "(", start};
        case ')': return {Tok::RParen, ")", start};
        case '[': return {Tok::LBracket, "[", start};
        case ']': return {Tok::RBracket, "]", start};
        case ',': return {Tok::Comma, ",", start};
        default: throw SyntaxError("unexpected character '" + std::string(1, c) + "'", start);
        }
    }

private:
    const std::string& src_;
    std::size_t at_ = 0;
};

} // namespace detail

/// Recursive-descent / precedence-climbing parser for the expression
/// language shared by scalars, torus elements, Lie elements, and
/// polynomials: `+ - * /` with usual precedence, `^` with integer exponents
/// binding tightest, parentheses, and the atoms
/// integer, `q`, `s`, `t`, `c_s`, `c_t`, `d_s`, `d_t`, `E[i,j]`, `xi(m,n)`.
class ExprParser {
public:
    ExprParser(const std::string& src, AlgebraConfig cfg) : cfg_(std::move(cfg)) {
        detail::Lexer lex(src);
        for (;;) {
            toks_.push_back(lex.next());
            if (toks_.back().kind == detail::Tok::End) break;
        }
    }

    ExprValue parse() {
        ExprValue v = parse_sum();
        expect(detail::Tok::End, "end of input");
        return v;
    }

private:
    const detail::Token& peek() const { return toks_[at_]; }
    detail::Token take() { return toks_[at_++]; }

    void expect(detail::Tok kind, const std::string& what) {
        if (peek().kind != kind)
            throw SyntaxError("expected " + what + ", found '" + peek().text + "'", peek().pos);
        ++at_;
    }

    ExprValue parse_sum() {
        ExprValue acc = parse_product();
        for (;;) {
            if (peek().kind == detail::Tok::Plus) {
                const std::size_t pos = take().pos;
                acc = add(std::move(acc), parse_product(), pos, /*negate=*/false);
            } else if (peek().kind == detail::Tok::Minus) {
                const std::size_t pos = take().pos;
                acc = add(std::move(acc), parse_product(), pos, /*negate=*/true);
            } else {
                return acc;
            }
        }
    }

    ExprValue parse_product() {
        ExprValue acc = parse_unary();
        for (;;) {
            if (peek().kind == detail::Tok::Star) {
                const std::size_t pos = take().pos;
                acc = mul(std::move(acc), parse_unary(), pos);
            } else if (peek().kind == detail::Tok::Slash) {
                const std::size_t pos = take().pos;
                acc = div(std::move(acc), parse_unary(), pos);
            } else {
                return acc;
            }
        }
    }

    ExprValue parse_unary() {
        if (peek().kind == detail::Tok::Minus) {
            take();
            return negate(parse_unary());
        }
        if (peek().kind == detail::Tok::Plus) {
            take();
            return parse_unary();
        }
        return parse_power();
    }

    ExprValue parse_power() {
        ExprValue base = parse_atom();
        if (peek().kind != detail::Tok::Caret) return base;
        const std::size_t pos = take().pos;
        return power(std::move(base), parse_int_literal(), pos);
    }

    long long parse_int_literal() {
        bool neg = false;
        if (peek().kind == detail::Tok::Minus) {
            take();
            neg = true;
        }
        if (peek().kind != detail::Tok::Int)
            throw SyntaxError("expected integer, found '" + peek().text + "'", peek().pos);
        const long long v = std::stoll(take().text);
        return neg ? -v : v;
    }

    ExprValue parse_atom() {
        const detail::Token t = peek();
        switch (t.kind) {
        case detail::Tok::Int: {
            take();
            return Scalar::rational(cfg_.field, Rational(Integer(t.text)));
        }
        case detail::Tok::LParen: {
            take();
            ExprValue v = parse_sum();
            expect(detail::Tok::RParen, "')'");
            return v;
        }
        case detail::Tok::Ident: return parse_ident_atom();
        default:
            throw SyntaxError("expected a value, found '" + t.text + "'", t.pos);
        }
    }

    ExprValue parse_ident_atom() {
        const detail::Token t = take();
        const std::string& id = t.text;
        if (id == "q") return Scalar::qpow(cfg_.field, 1);
        if (id == "s") return TorusElem::monomial(cfg_.field, 1, 0);
        if (id == "t") return TorusElem::monomial(cfg_.field, 0, 1);
        if (id == "c_s") return LieElem::c_s(cfg_);
        if (id == "c_t") return LieElem::c_t(cfg_);
        if (id == "d_s") return LieElem::d_s(cfg_);
        if (id == "d_t") return LieElem::d_t(cfg_);
        if (id == "E") {
            expect(detail::Tok::LBracket, "'['");
            const long long i = parse_int_literal();
            expect(detail::Tok::Comma, "','");
            const long long j = parse_int_literal();
            expect(detail::Tok::RBracket, "']'");
            return LieElem::E(cfg_, static_cast<int>(i), static_cast<int>(j));
        }
        if (id.size() > 1 && id[0] == 'x' &&
            std::isdigit(static_cast<unsigned char>(id[1]))) {
            const int i = std::stoi(id.substr(1));
            if (i < 2 || i > cfg_.l)
                throw IndexOutOfRange("variable index " + std::to_string(i) +
                                      " outside 2.." + std::to_string(cfg_.l));
            expect(detail::Tok::LParen, "'('");
            const long long m = parse_int_literal();
            expect(detail::Tok::Comma, "','");
            const long long n = parse_int_literal();
            expect(detail::Tok::RParen, "')'");
            return Poly::variable(cfg_.field, VarIndex{i, m, n});
        }
        throw SyntaxError("unknown name '" + id + "'", t.pos);
    }

    // ----- value algebra with scalar promotion -----

    ExprValue negate(ExprValue v) {
        return std::visit([](auto&& x) -> ExprValue { return -x; }, std::move(v));
    }

    TorusElem to_torus(const Scalar& s) { return s * TorusElem::one(cfg_.field); }
    Poly to_poly(const Scalar& s) { return s * Poly::one(cfg_.field); }

    ExprValue add(ExprValue a, ExprValue b, std::size_t pos, bool negate_b) {
        if (negate_b) b = negate(std::move(b));
        // Promote a scalar operand to the other side's kind where a unit exists.
        if (std::holds_alternative<Scalar>(a) && !std::holds_alternative<Scalar>(b))
            return add_same(promote_like(std::get<Scalar>(a), b, pos), std::move(b), pos);
        if (std::holds_alternative<Scalar>(b) && !std::holds_alternative<Scalar>(a)) {
            ExprValue bp = promote_like(std::get<Scalar>(b), a, pos);
            return add_same(std::move(a), std::move(bp), pos);
        }
        return add_same(std::move(a), std::move(b), pos);
    }

    ExprValue promote_like(const Scalar& s, const ExprValue& like, std::size_t pos) {
        if (std::holds_alternative<TorusElem>(like)) return to_torus(s);
        if (std::holds_alternative<Poly>(like)) return to_poly(s);
        if (std::holds_alternative<LieElem>(like)) {
            if (s.is_zero()) return LieElem::zero(cfg_);
            throw SyntaxError("cannot add a scalar to a Lie algebra element", pos);
        }
        return s;
    }

    ExprValue add_same(ExprValue a, ExprValue b, std::size_t pos) {
        if (a.index() != b.index()) throw SyntaxError("mismatched operand kinds in sum", pos);
        if (auto* x = std::get_if<Scalar>(&a)) return *x + std::get<Scalar>(b);
        if (auto* x = std::get_if<TorusElem>(&a)) return *x + std::get<TorusElem>(b);
        if (auto* x = std::get_if<LieElem>(&a)) return *x + std::get<LieElem>(b);
        return std::get<Poly>(a) + std::get<Poly>(b);
    }

    ExprValue mul(ExprValue a, ExprValue b, std::size_t pos) {
        if (auto* sa = std::get_if<Scalar>(&a)) {
            if (auto* sb = std::get_if<Scalar>(&b)) return *sa * *sb;
            if (auto* tb = std::get_if<TorusElem>(&b)) return *sa * *tb;
            if (auto* lb = std::get_if<LieElem>(&b)) return *sa * *lb;
            return *sa * std::get<Poly>(b);
        }
        if (auto* sb = std::get_if<Scalar>(&b)) {
            if (auto* ta = std::get_if<TorusElem>(&a)) return *ta * *sb;
            if (auto* la = std::get_if<LieElem>(&a)) return *la * *sb;
            return std::get<Poly>(a) * *sb;
        }
        if (auto* ta = std::get_if<TorusElem>(&a)) {
            if (auto* tb = std::get_if<TorusElem>(&b)) return torus_mul(*ta, *tb);
            throw SyntaxError("a torus element can multiply only scalars and torus elements",
                              pos);
        }
        if (auto* la = std::get_if<LieElem>(&a)) {
            if (auto* tb = std::get_if<TorusElem>(&b)) return *la * *tb;
            throw SyntaxError("a Lie element can be multiplied only by scalars and torus monomials",
                              pos);
        }
        if (auto* pb = std::get_if<Poly>(&b)) return std::get<Poly>(a) * *pb;
        throw SyntaxError("unsupported product", pos);
    }

    ExprValue div(ExprValue a, ExprValue b, std::size_t pos) {
        const Scalar* sb = std::get_if<Scalar>(&b);
        if (!sb) throw SyntaxError("division is defined only by scalars", pos);
        if (sb->is_zero()) throw DivisionByZero("division by zero in expression");
        return mul(std::move(a), sb->inv(), pos);
    }

    ExprValue power(ExprValue base, long long e, std::size_t pos) {
        if (auto* s = std::get_if<Scalar>(&base)) {
            if (e < 0) {
                if (s->is_zero()) throw DivisionByZero("zero to a negative power");
                return scalar_pow(s->inv(), -e);
            }
            return scalar_pow(*s, e);
        }
        if (auto* t = std::get_if<TorusElem>(&base)) {
            if (e < 0) return torus_pow(t->monomial_inverse(), -e);
            return torus_pow(*t, e);
        }
        if (auto* p = std::get_if<Poly>(&base)) {
            if (e < 0) throw SyntaxError("polynomials admit only nonnegative powers", pos);
            Poly r = Poly::one(cfg_.field);
            for (long long k = 0; k < e; ++k) r = r * *p;
            return r;
        }
        throw SyntaxError("Lie algebra elements cannot be raised to powers", pos);
    }

    Scalar scalar_pow(Scalar base, long long e) {
        Scalar r = Scalar::one(cfg_.field);
        for (long long k = 0; k < e; ++k) r *= base;
        return r;
    }

    TorusElem torus_pow(TorusElem base, long long e) {
        TorusElem r = TorusElem::one(cfg_.field);
        for (long long k = 0; k < e; ++k) r = torus_mul(r, base);
        return r;
    }

    AlgebraConfig cfg_;
    std::vector<detail::Token> toks_;
    std::size_t at_ = 0;
};

inline ExprValue parse_expr(const std::string& src, const AlgebraConfig& cfg) {
    return ExprParser(src, cfg).parse();
}

inline Scalar parse_scalar_expr(const std::string& src, const AlgebraConfig& cfg) {
    ExprValue v = parse_expr(src, cfg);
    if (auto* s = std::get_if<Scalar>(&v)) return *s;
    throw SyntaxError("expression does not denote a scalar", 0);
}

inline TorusElem parse_torus_expr(const std::string& src, const AlgebraConfig& cfg) {
    ExprValue v = parse_expr(src, cfg);
    if (auto* t = std::get_if<TorusElem>(&v)) return *t;
    if (auto* s = std::get_if<Scalar>(&v)) return *s * TorusElem::one(cfg.field);
    throw SyntaxError("expression does not denote a torus element", 0);
}

inline LieElem parse_lie_expr(const std::string& src, const AlgebraConfig& cfg) {
    ExprValue v = parse_expr(src, cfg);
    if (auto* x = std::get_if<LieElem>(&v)) return *x;
    if (auto* s = std::get_if<Scalar>(&v); s && s->is_zero()) return LieElem::zero(cfg);
    throw SyntaxError("expression does not denote a Lie algebra element", 0);
}

inline Poly parse_poly_expr(const std::string& src, const AlgebraConfig& cfg) {
    ExprValue v = parse_expr(src, cfg);
    if (auto* p = std::get_if<Poly>(&v)) return *p;
    if (auto* s = std::get_if<Scalar>(&v)) return *s * Poly::one(cfg.field);
    throw SyntaxError("expression does not denote a polynomial", 0);
}

} // namespace glcq
