#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "glcq/eala.hpp"

namespace glcq {

/// Label of the polynomial variable x_i(m,n), i in 2..l.
struct VarIndex {
    int i;
    long long m, n;
    auto operator<=>(const VarIndex&) const = default;

    std::string to_string() const {
        return "x" + std::to_string(i) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    }
};

/// Commutative monomial in the x_i(m,n): sorted factor list with positive
/// multiplicities. The empty list is the monomial 1.
class Monomial {
public:
    using Factor = std::pair<VarIndex, int>;

    Monomial() = default;

    static Monomial variable(const VarIndex& v) {
        Monomial m;
        m.factors_.emplace_back(v, 1);
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [v, k] : factors_) d += k;
        return d;
    }

    int multiplicity(const VarIndex& v) const {
        auto it = find(v);
        return it == factors_.end() ? 0 : it->second;
    }

    /// This monomial times v^count.
    Monomial with_variable(const VarIndex& v, int count = 1) const {
        assert(count > 0);
        Monomial r = *this;
        auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), v,
                                   [](const Factor& f, const VarIndex& w) { return f.first < w; });
        if (it != r.factors_.end() && it->first == v)
            it->second += count;
        else
            r.factors_.insert(it, Factor{v, count});
        return r;
    }

    /// This monomial with one occurrence of v removed; v must divide it.
    Monomial without_one(const VarIndex& v) const {
        Monomial r = *this;
        auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), v,
                                   [](const Factor& f, const VarIndex& w) { return f.first < w; });
        assert(it != r.factors_.end() && it->first == v);
        if (it->second == 1)
            r.factors_.erase(it);
        else
            --it->second;
        return r;
    }

    Monomial times(const Monomial& other) const {
        Monomial r = *this;
        for (const auto& [v, k] : other.factors_) r = r.with_variable(v, k);
        return r;
    }

    auto operator<=>(const Monomial&) const = default;

    std::string to_string() const {
        if (factors_.empty()) return "1";
        std::string out;
        for (const auto& [v, k] : factors_) {
            if (!out.empty()) out += "*";
            out += v.to_string();
            if (k != 1) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    std::vector<Factor>::const_iterator find(const VarIndex& v) const {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                                   [](const Factor& f, const VarIndex& w) { return f.first < w; });
        return (it != factors_.end() && it->first == v) ? it : factors_.end();
    }

    std::vector<Factor> factors_;
};

/// Element of V = C[x_i(m,n)]: sparse scalar combination of monomials.
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}

    static Poly zero(FieldPtr field) { return Poly(std::move(field)); }

    static Poly one(FieldPtr field) {
        Poly p(field);
        p.terms_.emplace(Monomial{}, Scalar::one(field));
        return p;
    }

    static Poly variable(FieldPtr field, const VarIndex& v) {
        Poly p(field);
        p.terms_.emplace(Monomial::variable(v), Scalar::one(field));
        return p;
    }

    static Poly from_monomial(FieldPtr field, const Monomial& m, const Scalar& c) {
        Poly p(std::move(field));
        p.add_term(m, c);
        return p;
    }

    const FieldPtr& field() const { return field_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        require_same_field(a.field_, b.field_);
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        Poly r(field_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Poly operator*(const Scalar& s, const Poly& a) {
        require_same_field(s.field(), a.field_);
        Poly r(a.field_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Scalar& s) { return s * a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same_field(a.field_, b.field_);
        Poly r(a.field_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    bool operator==(const Poly& b) const {
        return same_field(field_, b.field_) && terms_ == b.terms_;
    }

    /// Coefficient-wise image under Scalar::specialize.
    Poly specialized(const FieldPtr& target) const {
        Poly r(target);
        for (const auto& [m, c] : terms_) r.add_term(m, c.specialize(target));
        return r;
    }

    std::string to_string() const {
        std::vector<std::pair<bool, std::string>> parts;
        for (const auto& [m, c] : terms_)
            parts.push_back(scaled_term(c, m.is_unit() ? std::string{} : m.to_string()));
        return join_terms(parts);
    }

private:
    FieldPtr field_;
    std::map<Monomial, Scalar> terms_;
};

struct RepParams {
    AlgebraConfig cfg;
    Scalar mu;
};

inline RepParams make_rep_params(AlgebraConfig cfg, Scalar mu) {
    require_same_field(cfg.field, mu.field());
    return RepParams{std::move(cfg), std::move(mu)};
}

/// e_{i1}(m1,n1) = multiplication by x_i(m1,n1), for i in 2..l.
inline Poly act_ei1(int i, long long m1, long long n1, const Poly& p) {
    assert(i >= 2);
    const VarIndex v{i, m1, n1};
    Poly r(p.field());
    for (const auto& [mono, c] : p.terms()) r.add_term(mono.with_variable(v), c);
    return r;
}

/// e_{ij}(m1,n1) = sum_{(m,n)} q^{m n1} x_i(m1+m, n1+n) d/dx_j(m,n),
/// for i,j in 2..l. Only the (m,n) occurring in each monomial survive.
inline Poly act_eij(int i, int j, long long m1, long long n1, const Poly& p) {
    assert(i >= 2 && j >= 2);
    const FieldPtr& F = p.field();
    Poly r(F);
    for (const auto& [mono, c] : p.terms())
        for (const auto& [v, k] : mono.factors()) {
            if (v.i != j) continue;
            const Monomial out =
                mono.without_one(v).with_variable(VarIndex{i, m1 + v.m, n1 + v.n});
            r.add_term(out, c * Scalar::qpow(F, v.m * n1) * k);
        }
    return r;
}

/// e_{11}(m1,n1) = mu d_{(m1,n1),(0,0)}
///   - sum_{k=2..l} sum_{(m,n)} q^{n m1} x_k(m1+m, n1+n) d/dx_k(m,n).
inline Poly act_e11(long long m1, long long n1, const Poly& p, const RepParams& params) {
    const FieldPtr& F = p.field();
    Poly r(F);
    if (m1 == 0 && n1 == 0) r = params.mu * p;
    for (const auto& [mono, c] : p.terms())
        for (const auto& [v, k] : mono.factors()) {
            const Monomial out =
                mono.without_one(v).with_variable(VarIndex{v.i, m1 + v.m, n1 + v.n});
            r.add_term(out, -(c * Scalar::qpow(F, v.n * m1) * k));
        }
    return r;
}

/// e_{1i}(m1,n1) = q^{-m1 n1} mu d/dx_i(-m1,-n1)
///   - sum_{j=2..l} sum_{(m,n),(m',n')} q^{n1 m' + n m1 + n m'}
///       x_j(m1+m+m', n1+n+n') d/dx_j(m,n) d/dx_i(m',n'),
/// normal-ordered: the x_i derivative acts first, then the x_j derivative,
/// then the multiplication. Diagonal pairs pick up falling-factorial
/// multiplicities k(k-1).
inline Poly act_e1i(int i, long long m1, long long n1, const Poly& p, const RepParams& params) {
    assert(i >= 2);
    const FieldPtr& F = p.field();
    Poly r(F);
    const bool mu_zero = params.mu.is_zero();
    for (const auto& [mono, c] : p.terms()) {
        if (!mu_zero) {
            const VarIndex u{i, -m1, -n1};
            const int k = mono.multiplicity(u);
            if (k > 0)
                r.add_term(mono.without_one(u),
                           c * params.mu * Scalar::qpow(F, -(m1 * n1)) * k);
        }
        for (const auto& [u, ku] : mono.factors()) {
            if (u.i != i) continue; // (m',n') indexes the x_i derivative
            const Monomial after_first = mono.without_one(u);
            for (const auto& [v, kv] : after_first.factors()) {
                // v = x_j(m,n) with j = v.i ranging over all of 2..l.
                const long long e = n1 * u.m + v.n * m1 + v.n * u.m;
                const Monomial out = after_first.without_one(v).with_variable(
                    VarIndex{v.i, m1 + v.m + u.m, n1 + v.n + u.n});
                r.add_term(out, -(c * Scalar::qpow(F, e) * (static_cast<long long>(ku) * kv)));
            }
        }
    }
    return r;
}

enum class DegreeOp { D1, D2 };

/// D1 scales each monomial by its total s-degree (sum of multiplicities
/// times m); D2 by the total t-degree.
inline Poly act_D(DegreeOp which, const Poly& p) {
    Poly r(p.field());
    for (const auto& [mono, c] : p.terms()) {
        long long eigen = 0;
        for (const auto& [v, k] : mono.factors())
            eigen += static_cast<long long>(k) * (which == DegreeOp::D1 ? v.m : v.n);
        r.add_term(mono, c * eigen);
    }
    return r;
}

/// The representation map: matrix terms dispatch on the index pattern,
/// d_s -> D1, d_t -> D2, and c_s, c_t -> 0.
inline Poly act(const LieElem& x, const Poly& p, const RepParams& params) {
    require_same_config(x.config(), params.cfg);
    require_same_field(p.field(), params.cfg.field);
    Poly r(p.field());
    for (const auto& [k, c] : x.matrix_part()) {
        Poly part(p.field());
        if (k.i == 1 && k.j == 1)
            part = act_e11(k.m, k.n, p, params);
        else if (k.j == 1)
            part = act_ei1(k.i, k.m, k.n, p);
        else if (k.i == 1)
            part = act_e1i(k.j, k.m, k.n, p, params);
        else
            part = act_eij(k.i, k.j, k.m, k.n, p);
        r = r + c * part;
    }
    if (!x.ds().is_zero()) r = r + x.ds() * act_D(DegreeOp::D1, p);
    if (!x.dt().is_zero()) r = r + x.dt() * act_D(DegreeOp::D2, p);
    return r; // c_s, c_t act as zero
}

struct CommutatorCheck {
    Poly lhs, rhs;
    bool equal;
};

/// Compares phi(x)phi(y)p - phi(y)phi(x)p with phi([x,y])p.
inline CommutatorCheck check_commutator(const LieElem& x, const LieElem& y, const Poly& p,
                                        const RepParams& params) {
    Poly lhs = act(x, act(y, p, params), params) - act(y, act(x, p, params), params);
    Poly rhs = act(bracket(x, y), p, params);
    const bool equal = lhs == rhs;
    return CommutatorCheck{std::move(lhs), std::move(rhs), equal};
}

/// All variables x_i(m,n) with i in 2..l and (m,n) in the window, ascending.
inline std::vector<VarIndex> window_variables(const AlgebraConfig& cfg,
                                              const ExponentWindow& window) {
    std::vector<VarIndex> vars;
    for (int i = 2; i <= cfg.l; ++i)
        for (const auto& [m, n] : window.points()) vars.push_back(VarIndex{i, m, n});
    return vars;
}

/// All monomials of degree <= max_degree over the windowed variables, in a
/// deterministic order (by degree, then lexicographic choice order).
inline std::vector<Monomial> enumerate_monomials(const AlgebraConfig& cfg,
                                                 const ExponentWindow& window, int max_degree) {
    const std::vector<VarIndex> vars = window_variables(cfg, window);
    std::vector<Monomial> out{Monomial{}};
    std::vector<Monomial> frontier{Monomial{}};
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Monomial> next;
        for (const auto& mono : frontier) {
            // Extend by variables >= the largest factor to avoid duplicates.
            const VarIndex floor_var =
                mono.is_unit() ? VarIndex{0, 0, 0} : mono.factors().back().first;
            for (const auto& v : vars) {
                if (!mono.is_unit() && v < floor_var) continue;
                next.push_back(mono.with_variable(v));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

} // namespace glcq
