#pragma once

#include <map>
#include <string>
#include <utility>

#include "glcq/scalar.hpp"

namespace glcq {

/// The two degree derivations d_s and d_t.
enum class Derivation { ds, dt };

/// Element of the quantum torus C_q[s^±1, t^±1], stored in the s-before-t
/// monomial basis {s^m t^n}. Sparse-canonical: no zero coefficients kept.
class TorusElem {
public:
    using Key = std::pair<long long, long long>; // (m, n)

    explicit TorusElem(FieldPtr field) : field_(std::move(field)) {}

    static TorusElem zero(FieldPtr field) { return TorusElem(std::move(field)); }

    static TorusElem one(FieldPtr field) { return monomial(std::move(field), 0, 0); }

    static TorusElem monomial(FieldPtr field, long long m, long long n) {
        TorusElem t(field);
        t.terms_.emplace(Key{m, n}, Scalar::one(field));
        return t;
    }

    const FieldPtr& field() const { return field_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long long m, long long n, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(Key{m, n}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend TorusElem operator+(const TorusElem& a, const TorusElem& b) {
        require_same_field(a.field_, b.field_);
        TorusElem r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }

    friend TorusElem operator-(const TorusElem& a, const TorusElem& b) { return a + (-b); }

    TorusElem operator-() const {
        TorusElem r(field_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend TorusElem operator*(const Scalar& s, const TorusElem& a) {
        require_same_field(s.field(), a.field_);
        TorusElem r(a.field_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : a.terms_) r.add_term(k.first, k.second, s * c);
        return r;
    }

    friend TorusElem operator*(const TorusElem& a, const Scalar& s) { return s * a; }

    bool operator==(const TorusElem& b) const {
        return same_field(field_, b.field_) && terms_ == b.terms_;
    }

    /// Inverse of a single invertible monomial c * s^m t^n:
    /// (s^m t^n)^-1 = q^{mn} s^-m t^-n.
    TorusElem monomial_inverse() const {
        if (terms_.size() != 1)
            throw DivisionByZero("only torus monomials are invertible");
        const auto& [k, c] = *terms_.begin();
        TorusElem r(field_);
        r.add_term(-k.first, -k.second, Scalar::qpow(field_, k.first * k.second) * c.inv());
        return r;
    }

    std::string to_string() const {
        std::vector<std::pair<bool, std::string>> parts;
        for (const auto& [k, c] : terms_) parts.push_back(scaled_term(c, monomial_body(k)));
        return join_terms(parts);
    }

    static std::string monomial_body(const Key& k) {
        std::string body;
        if (k.first != 0) body = k.first == 1 ? "s" : "s^" + std::to_string(k.first);
        if (k.second != 0) {
            if (!body.empty()) body += "*";
            body += k.second == 1 ? "t" : "t^" + std::to_string(k.second);
        }
        return body; // empty means the unit monomial
    }

private:
    FieldPtr field_;
    std::map<Key, Scalar> terms_;
};

/// Bilinear product with the defining relation ts = q st, i.e.
/// (s^m1 t^n1)(s^m2 t^n2) = q^{n1 m2} s^{m1+m2} t^{n1+n2}.
inline TorusElem torus_mul(const TorusElem& a, const TorusElem& b) {
    require_same_field(a.field(), b.field());
    TorusElem r(a.field());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const Scalar twist = Scalar::qpow(a.field(), ka.second * kb.first);
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb * twist);
        }
    return r;
}

inline TorusElem operator*(const TorusElem& a, const TorusElem& b) { return torus_mul(a, b); }

/// d_s(s^m t^n) = m s^m t^n and d_t(s^m t^n) = n s^m t^n, extended termwise.
inline TorusElem torus_degree(const TorusElem& a, Derivation which) {
    TorusElem r(a.field());
    for (const auto& [k, c] : a.terms()) {
        const long long eigen = which == Derivation::ds ? k.first : k.second;
        r.add_term(k.first, k.second, c * eigen);
    }
    return r;
}

} // namespace glcq
