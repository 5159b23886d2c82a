#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "glcq/errors.hpp"
#include "glcq/rational.hpp"

namespace glcq {

/// Dense univariate polynomial over Q in the formal variable q.
/// Invariant: no trailing zero coefficients; the zero polynomial is empty.
class QPoly {
public:
    QPoly() = default;

    explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly constant(Rational v) {
        QPoly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }

    static QPoly one() { return constant(Rational(1)); }

    static QPoly monomial(std::size_t deg, Rational coeff) {
        QPoly p;
        if (coeff != 0) {
            p.c_.assign(deg + 1, Rational(0));
            p.c_[deg] = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
    std::size_t low_order() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return k;
        return 0;
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    const Rational& leading() const {
        assert(!c_.empty());
        return c_.back();
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[k] += b.c_[k];
        r.trim();
        return r;
    }

    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[k] -= b.c_[k];
        r.trim();
        return r;
    }

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        QPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }

    QPoly scaled(const Rational& s) const {
        if (s == 0) return {};
        QPoly r = *this;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    /// Euclidean division: a = quot * b + rem with deg rem < deg b.
    static std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        QPoly rem = a;
        QPoly quot;
        const int db = b.degree();
        if (rem.degree() >= db) quot.c_.assign(rem.c_.size() - b.c_.size() + 1, Rational(0));
        while (!rem.is_zero() && rem.degree() >= db) {
            const std::size_t shift = static_cast<std::size_t>(rem.degree() - db);
            const Rational f = rem.leading() / b.leading();
            quot.c_[shift] += f;
            for (std::size_t k = 0; k < b.c_.size(); ++k) rem.c_[shift + k] -= f * b.c_[k];
            rem.trim();
        }
        quot.trim();
        return {std::move(quot), std::move(rem)};
    }

    /// Exact division; the remainder must vanish.
    static QPoly div_exact(const QPoly& a, const QPoly& b) {
        auto [quot, rem] = divrem(a, b);
        assert(rem.is_zero());
        return quot;
    }

    /// Monic gcd (Euclid over Q); gcd(0, 0) = 0.
    static QPoly gcd(QPoly a, QPoly b) {
        while (!b.is_zero()) {
            QPoly r = divrem(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    QPoly monic() const {
        if (is_zero() || leading() == 1) return *this;
        return scaled(Rational(1) / leading());
    }

    /// Divide by q^k; requires every coefficient below k to vanish.
    QPoly shifted_down(std::size_t k) const {
        if (k == 0 || is_zero()) return *this;
        assert(low_order() >= k);
        QPoly r;
        r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
        return r;
    }

    /// Multiply by q^k.
    QPoly shifted_up(std::size_t k) const {
        if (k == 0 || is_zero()) return *this;
        QPoly r;
        r.c_.assign(k, Rational(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    bool operator==(const QPoly& other) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Inverse of `a` modulo `mod` via extended Euclid; requires gcd(a, mod) = 1
/// (always true for nonzero residues when mod is irreducible).
inline QPoly invert_mod(const QPoly& a, const QPoly& mod) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero residue");
    // Invariants: r0 = s0 * a (mod `mod`), r1 = s1 * a (mod `mod`).
    QPoly r0 = mod, r1 = QPoly::divrem(a, mod).second;
    QPoly s0, s1 = QPoly::one();
    while (!r1.is_zero()) {
        auto [quot, rem] = QPoly::divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        QPoly s2 = s0 - quot * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    assert(r0.degree() == 0); // coprimality
    return QPoly::divrem(s0.scaled(Rational(1) / r0.leading()), mod).second;
}

namespace detail {

inline void cyclotomic_into(unsigned L, std::vector<QPoly>& cache) {
    if (cache.size() > L && !cache[L].is_zero()) return;
    if (cache.size() <= L) cache.resize(L + 1);
    // Phi_L = (q^L - 1) / prod_{d | L, d < L} Phi_d
    QPoly f = QPoly::monomial(L, Rational(1)) - QPoly::one();
    for (unsigned d = 1; d < L; ++d) {
        if (L % d != 0) continue;
        cyclotomic_into(d, cache);
        f = QPoly::div_exact(f, cache[d]);
    }
    cache[L] = f;
}

} // namespace detail

/// The L-th cyclotomic polynomial Phi_L, irreducible over Q.
inline QPoly cyclotomic(unsigned L) {
    assert(L >= 1);
    std::vector<QPoly> cache;
    detail::cyclotomic_into(L, cache);
    return cache[L];
}

/// Euler phi(L) = deg Phi_L.
inline unsigned euler_phi(unsigned L) {
    unsigned result = L;
    for (unsigned p = 2; p * p <= L; ++p) {
        if (L % p != 0) continue;
        while (L % p == 0) L /= p;
        result -= result / p;
    }
    if (L > 1) result -= result / L;
    return result;
}

} // namespace glcq
