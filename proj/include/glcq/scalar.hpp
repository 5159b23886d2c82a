#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "glcq/errors.hpp"
#include "glcq/field.hpp"
#include "glcq/qpoly.hpp"
#include "glcq/rational.hpp"

namespace glcq {

/// Exact element of the coefficient field, in mode-dependent canonical form:
///   GenericQ    q^shift * num/den with num, den in Q[q], nonzero constant
///               terms, gcd(num, den) = 1, den monic; zero is (0, 0, 1).
///   RootOfUnity residue polynomial of degree < deg Phi_L in Q[q]/Phi_L.
///   RationalQ   reduced rational number.
/// Canonical forms are unique, so equality is structural. Values are
/// immutable in spirit: every operation returns a fresh scalar.
class Scalar {
public:
    static Scalar zero(FieldPtr f) { return Scalar(std::move(f)); }

    static Scalar one(FieldPtr f) { return integer(std::move(f), 1); }

    static Scalar integer(FieldPtr f, long long v) { return rational(std::move(f), Rational(v)); }

    static Scalar rational(FieldPtr f, Rational v) {
        Scalar s(std::move(f));
        switch (s.field_->mode()) {
        case QMode::GenericQ: std::get<Generic>(s.rep_).num = QPoly::constant(std::move(v)); break;
        case QMode::RootOfUnity: s.rep_ = QPoly::constant(std::move(v)); break;
        case QMode::RationalQ: s.rep_ = std::move(v); break;
        }
        return s;
    }

    /// q^e; in root-of-unity mode the exponent is reduced mod L.
    static Scalar qpow(FieldPtr f, long long e) {
        Scalar s(std::move(f));
        switch (s.field_->mode()) {
        case QMode::GenericQ: {
            auto& g = std::get<Generic>(s.rep_);
            g.shift = e;
            g.num = QPoly::one();
            break;
        }
        case QMode::RootOfUnity: {
            const long long L = s.field_->root_order();
            const auto em = static_cast<std::size_t>(((e % L) + L) % L);
            s.rep_ = QPoly::divrem(QPoly::monomial(em, Rational(1)), s.field_->modulus()).second;
            break;
        }
        case QMode::RationalQ:
            s.rep_ = rational_pow(s.field_->q_value(), e);
            break;
        }
        return s;
    }

    const FieldPtr& field() const { return field_; }

    bool is_zero() const {
        switch (field_->mode()) {
        case QMode::GenericQ: return std::get<Generic>(rep_).num.is_zero();
        case QMode::RootOfUnity: return std::get<QPoly>(rep_).is_zero();
        case QMode::RationalQ: return std::get<Rational>(rep_) == 0;
        }
        return false;
    }

    bool is_one() const {
        switch (field_->mode()) {
        case QMode::GenericQ: {
            const auto& g = std::get<Generic>(rep_);
            return g.shift == 0 && g.num.is_one() && g.den.is_one();
        }
        case QMode::RootOfUnity: return std::get<QPoly>(rep_).is_one();
        case QMode::RationalQ: return std::get<Rational>(rep_) == 1;
        }
        return false;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        require_same_field(a.field_, b.field_);
        switch (a.field_->mode()) {
        case QMode::GenericQ: {
            const auto& x = std::get<Generic>(a.rep_);
            const auto& y = std::get<Generic>(b.rep_);
            if (x.num.is_zero()) return b;
            if (y.num.is_zero()) return a;
            Generic r;
            r.shift = std::min(x.shift, y.shift);
            const auto dx = static_cast<std::size_t>(x.shift - r.shift);
            const auto dy = static_cast<std::size_t>(y.shift - r.shift);
            if (x.den.is_one() && y.den.is_one()) {
                r.num = x.num.shifted_up(dx) + y.num.shifted_up(dy);
            } else {
                r.num = x.num.shifted_up(dx) * y.den + y.num.shifted_up(dy) * x.den;
                r.den = x.den * y.den;
            }
            return with_rep(a.field_, normalized(std::move(r)));
        }
        case QMode::RootOfUnity:
            return with_rep(a.field_, std::get<QPoly>(a.rep_) + std::get<QPoly>(b.rep_));
        case QMode::RationalQ:
            return with_rep(a.field_, std::get<Rational>(a.rep_) + std::get<Rational>(b.rep_));
        }
        return a;
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    Scalar operator-() const {
        Scalar r = *this;
        switch (field_->mode()) {
        case QMode::GenericQ: {
            auto& g = std::get<Generic>(r.rep_);
            g.num = -g.num;
            break;
        }
        case QMode::RootOfUnity: r.rep_ = -std::get<QPoly>(rep_); break;
        case QMode::RationalQ: r.rep_ = -std::get<Rational>(rep_); break;
        }
        return r;
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        require_same_field(a.field_, b.field_);
        switch (a.field_->mode()) {
        case QMode::GenericQ: {
            const auto& x = std::get<Generic>(a.rep_);
            const auto& y = std::get<Generic>(b.rep_);
            Generic r;
            r.shift = x.shift + y.shift;
            r.num = x.num * y.num;
            if (!(x.den.is_one() && y.den.is_one())) r.den = x.den * y.den;
            return with_rep(a.field_, normalized(std::move(r)));
        }
        case QMode::RootOfUnity:
            return with_rep(a.field_, QPoly::divrem(std::get<QPoly>(a.rep_) * std::get<QPoly>(b.rep_),
                                                    a.field_->modulus())
                                          .second);
        case QMode::RationalQ:
            return with_rep(a.field_, std::get<Rational>(a.rep_) * std::get<Rational>(b.rep_));
        }
        return a;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    Scalar inv() const {
        if (is_zero()) throw DivisionByZero();
        switch (field_->mode()) {
        case QMode::GenericQ: {
            const auto& g = std::get<Generic>(rep_);
            Generic r;
            r.shift = -g.shift;
            r.num = g.den;
            r.den = g.num;
            return with_rep(field_, normalized(std::move(r)));
        }
        case QMode::RootOfUnity:
            return with_rep(field_, invert_mod(std::get<QPoly>(rep_), field_->modulus()));
        case QMode::RationalQ:
            return with_rep(field_, Rational(1) / std::get<Rational>(rep_));
        }
        return *this;
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend Scalar operator*(const Scalar& a, long long v) {
        return a * integer(a.field_, v);
    }
    friend Scalar operator*(long long v, const Scalar& a) { return a * v; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return same_field(a.field_, b.field_) && a.rep_ == b.rep_;
    }

    /// Ring-homomorphic image of a generic-q scalar in a specialized field.
    Scalar specialize(const FieldPtr& target) const {
        if (field_->mode() != QMode::GenericQ)
            throw ConfigMismatch("specialize requires a generic-q scalar");
        const auto& g = std::get<Generic>(rep_);
        switch (target->mode()) {
        case QMode::GenericQ: return *this;
        case QMode::RootOfUnity: {
            const QPoly& phi = target->modulus();
            QPoly den = QPoly::divrem(g.den, phi).second;
            if (!g.num.is_zero() && den.is_zero())
                throw PoleAtSpecialization("denominator vanishes at " + target->describe());
            Scalar r = with_rep(target, QPoly::divrem(g.num, phi).second);
            if (r.is_zero()) return r;
            r *= qpow(target, g.shift);
            if (!den.is_one()) r *= with_rep(target, std::move(den)).inv();
            return r;
        }
        case QMode::RationalQ: {
            const Rational dv = g.den.eval(target->q_value());
            if (!g.num.is_zero() && dv == 0)
                throw PoleAtSpecialization("denominator vanishes at " + target->describe());
            Rational v = g.num.eval(target->q_value());
            if (v == 0) return zero(target);
            v *= rational_pow(target->q_value(), g.shift);
            return with_rep(target, v / dv);
        }
        }
        return *this;
    }

    /// True when the value prints as a single product `r*q^e` (or a bare
    /// rational), so it can prefix a term without parentheses.
    bool is_single_term() const {
        switch (field_->mode()) {
        case QMode::GenericQ: {
            const auto& g = std::get<Generic>(rep_);
            return g.den.is_one() && nonzero_count(g.num) <= 1;
        }
        case QMode::RootOfUnity: return nonzero_count(std::get<QPoly>(rep_)) <= 1;
        case QMode::RationalQ: return true;
        }
        return true;
    }

    /// Single-term value whose rational coefficient is negative.
    bool leading_minus() const {
        if (!is_single_term()) return false;
        switch (field_->mode()) {
        case QMode::GenericQ: {
            const auto& g = std::get<Generic>(rep_);
            return !g.num.is_zero() && g.num.leading() < 0;
        }
        case QMode::RootOfUnity: {
            const auto& p = std::get<QPoly>(rep_);
            return !p.is_zero() && p.leading() < 0;
        }
        case QMode::RationalQ: return std::get<Rational>(rep_) < 0;
        }
        return false;
    }

    std::string to_string() const {
        switch (field_->mode()) {
        case QMode::GenericQ: {
            const auto& g = std::get<Generic>(rep_);
            if (g.num.is_zero()) return "0";
            if (g.den.is_one()) return laurent_string(g.num, g.shift);
            return "(" + laurent_string(g.num, g.shift) + ")/(" + laurent_string(g.den, 0) + ")";
        }
        case QMode::RootOfUnity: {
            const auto& p = std::get<QPoly>(rep_);
            return p.is_zero() ? "0" : laurent_string(p, 0);
        }
        case QMode::RationalQ: return rational_to_string(std::get<Rational>(rep_));
        }
        return {};
    }

private:
    struct Generic {
        Generic() : den(QPoly::one()) {}
        long long shift = 0;
        QPoly num;
        QPoly den;
        bool operator==(const Generic&) const = default;
    };

    using Rep = std::variant<Generic, QPoly, Rational>;

    explicit Scalar(FieldPtr f) : field_(std::move(f)) {
        switch (field_->mode()) {
        case QMode::GenericQ: rep_ = Generic{}; break;
        case QMode::RootOfUnity: rep_ = QPoly{}; break;
        case QMode::RationalQ: rep_ = Rational(0); break;
        }
    }

    template <typename R>
    static Scalar with_rep(const FieldPtr& f, R&& rep) {
        Scalar s(f);
        s.rep_ = std::forward<R>(rep);
        return s;
    }

    static Generic normalized(Generic g) {
        if (g.num.is_zero()) return Generic{};
        const std::size_t a = g.num.low_order();
        const std::size_t b = g.den.low_order();
        if (a > 0) g.num = g.num.shifted_down(a);
        if (b > 0) g.den = g.den.shifted_down(b);
        g.shift += static_cast<long long>(a) - static_cast<long long>(b);
        if (!g.den.is_one()) {
            const QPoly common = QPoly::gcd(g.num, g.den);
            if (common.degree() > 0) {
                g.num = QPoly::div_exact(g.num, common);
                g.den = QPoly::div_exact(g.den, common);
            }
            if (g.den.degree() == 0) {
                g.num = g.num.scaled(Rational(1) / g.den.leading());
                g.den = QPoly::one();
            } else if (g.den.leading() != 1) {
                const Rational lc = g.den.leading();
                g.num = g.num.scaled(Rational(1) / lc);
                g.den = g.den.scaled(Rational(1) / lc);
            }
        }
        return g;
    }

    static std::size_t nonzero_count(const QPoly& p) {
        std::size_t n = 0;
        for (const auto& c : p.coeffs())
            if (c != 0) ++n;
        return n;
    }

    /// `3*q^-2 - 1/2*q^3` style rendering of poly * q^shift, ascending exponents.
    static std::string laurent_string(const QPoly& p, long long shift) {
        std::string out;
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
            const Rational& c = p.coeffs()[k];
            if (c == 0) continue;
            const long long e = shift + static_cast<long long>(k);
            std::string piece;
            if (e == 0) {
                piece = rational_to_string(c);
            } else {
                const std::string qs = e == 1 ? "q" : "q^" + std::to_string(e);
                if (c == 1)
                    piece = qs;
                else if (c == -1)
                    piece = "-" + qs;
                else
                    piece = rational_to_string(c) + "*" + qs;
            }
            if (out.empty())
                out = piece;
            else if (piece.front() == '-')
                out += " - " + piece.substr(1);
            else
                out += " + " + piece;
        }
        return out;
    }

    FieldPtr field_;
    Rep rep_;
};

/// Renders `c * body` for sum printing: returns the sign separately so the
/// caller can join terms with " - ". `body` empty means a bare scalar term.
inline std::pair<bool, std::string> scaled_term(const Scalar& c, const std::string& body) {
    const bool neg = c.leading_minus();
    const Scalar mag = neg ? -c : c;
    if (body.empty()) return {neg, mag.to_string()};
    if (mag.is_one()) return {neg, body};
    if (mag.is_single_term()) return {neg, mag.to_string() + "*" + body};
    return {false, "(" + c.to_string() + ")*" + body};
}

/// Joins rendered terms into a sum; "0" when empty.
inline std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [neg, body] : terms) {
        if (out.empty())
            out = neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

} // namespace glcq
