#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "glcq/torus.hpp"
#include "glcq/window.hpp"

namespace glcq {

struct AlgebraConfig {
    int l;
    FieldPtr field;
};

inline AlgebraConfig make_config(int l, FieldPtr field) {
    if (l < 2) throw IndexOutOfRange("gl_l size must satisfy l >= 2, got " + std::to_string(l));
    return AlgebraConfig{l, std::move(field)};
}

inline bool same_config(const AlgebraConfig& a, const AlgebraConfig& b) {
    return a.l == b.l && same_field(a.field, b.field);
}

inline void require_same_config(const AlgebraConfig& a, const AlgebraConfig& b) {
    if (!same_config(a, b)) throw ConfigMismatch("operands built over different algebra configs");
}

/// Basis label E_{ij} tensor s^m t^n.
struct LieKey {
    int i, j;
    long long m, n;
    auto operator<=>(const LieKey&) const = default;
};

/// Element of gl_l(C_q) extended by the two central elements and the two
/// degree derivations.
class LieElem {
public:
    explicit LieElem(AlgebraConfig cfg)
        : cfg_(std::move(cfg)),
          cs_(Scalar::zero(cfg_.field)),
          ct_(Scalar::zero(cfg_.field)),
          ds_(Scalar::zero(cfg_.field)),
          dt_(Scalar::zero(cfg_.field)) {}

    static LieElem zero(const AlgebraConfig& cfg) { return LieElem(cfg); }

    static LieElem E(const AlgebraConfig& cfg, int i, int j, long long m = 0, long long n = 0) {
        check_index(cfg, i);
        check_index(cfg, j);
        LieElem x(cfg);
        x.matrix_.emplace(LieKey{i, j, m, n}, Scalar::one(cfg.field));
        return x;
    }

    static LieElem c_s(const AlgebraConfig& cfg) {
        LieElem x(cfg);
        x.cs_ = Scalar::one(cfg.field);
        return x;
    }
    static LieElem c_t(const AlgebraConfig& cfg) {
        LieElem x(cfg);
        x.ct_ = Scalar::one(cfg.field);
        return x;
    }
    static LieElem d_s(const AlgebraConfig& cfg) {
        LieElem x(cfg);
        x.ds_ = Scalar::one(cfg.field);
        return x;
    }
    static LieElem d_t(const AlgebraConfig& cfg) {
        LieElem x(cfg);
        x.dt_ = Scalar::one(cfg.field);
        return x;
    }

    const AlgebraConfig& config() const { return cfg_; }
    const std::map<LieKey, Scalar>& matrix_part() const { return matrix_; }
    const Scalar& cs() const { return cs_; }
    const Scalar& ct() const { return ct_; }
    const Scalar& ds() const { return ds_; }
    const Scalar& dt() const { return dt_; }

    bool is_zero() const {
        return matrix_.empty() && cs_.is_zero() && ct_.is_zero() && ds_.is_zero() && dt_.is_zero();
    }

    void add_matrix_term(const LieKey& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = matrix_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) matrix_.erase(it);
        }
    }

    friend LieElem operator+(const LieElem& a, const LieElem& b) {
        require_same_config(a.cfg_, b.cfg_);
        LieElem r = a;
        for (const auto& [k, c] : b.matrix_) r.add_matrix_term(k, c);
        r.cs_ += b.cs_;
        r.ct_ += b.ct_;
        r.ds_ += b.ds_;
        r.dt_ += b.dt_;
        return r;
    }

    friend LieElem operator-(const LieElem& a, const LieElem& b) { return a + (-b); }

    LieElem operator-() const {
        LieElem r(cfg_);
        for (const auto& [k, c] : matrix_) r.matrix_.emplace(k, -c);
        r.cs_ = -cs_;
        r.ct_ = -ct_;
        r.ds_ = -ds_;
        r.dt_ = -dt_;
        return r;
    }

    friend LieElem operator*(const Scalar& s, const LieElem& a) {
        require_same_field(s.field(), a.cfg_.field);
        LieElem r(a.cfg_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : a.matrix_) r.add_matrix_term(k, s * c);
        r.cs_ = s * a.cs_;
        r.ct_ = s * a.ct_;
        r.ds_ = s * a.ds_;
        r.dt_ = s * a.dt_;
        return r;
    }

    friend LieElem operator*(const LieElem& a, const Scalar& s) { return s * a; }

    /// Right action of the torus on the tensor coordinate:
    /// (E_{ij} (x) u) * v = E_{ij} (x) torus_mul(u, v). Only matrix terms may
    /// carry a torus factor.
    friend LieElem operator*(const LieElem& a, const TorusElem& u) {
        require_same_field(a.cfg_.field, u.field());
        if (!a.cs_.is_zero() || !a.ct_.is_zero() || !a.ds_.is_zero() || !a.dt_.is_zero())
            throw ConfigMismatch("central/derivation elements have no torus coordinate to multiply");
        LieElem r(a.cfg_);
        for (const auto& [k, c] : a.matrix_)
            for (const auto& [uv, d] : u.terms()) {
                const Scalar twist = Scalar::qpow(a.cfg_.field, k.n * uv.first);
                r.add_matrix_term(LieKey{k.i, k.j, k.m + uv.first, k.n + uv.second},
                                  c * d * twist);
            }
        return r;
    }

    bool operator==(const LieElem& b) const {
        return same_config(cfg_, b.cfg_) && matrix_ == b.matrix_ && cs_ == b.cs_ &&
               ct_ == b.ct_ && ds_ == b.ds_ && dt_ == b.dt_;
    }

    std::string to_string() const {
        std::vector<std::pair<bool, std::string>> parts;
        for (const auto& [k, c] : matrix_) {
            std::string body =
                "E[" + std::to_string(k.i) + "," + std::to_string(k.j) + "]";
            const std::string torus = TorusElem::monomial_body({k.m, k.n});
            if (!torus.empty()) body += "*" + torus;
            parts.push_back(scaled_term(c, body));
        }
        if (!cs_.is_zero()) parts.push_back(scaled_term(cs_, "c_s"));
        if (!ct_.is_zero()) parts.push_back(scaled_term(ct_, "c_t"));
        if (!ds_.is_zero()) parts.push_back(scaled_term(ds_, "d_s"));
        if (!dt_.is_zero()) parts.push_back(scaled_term(dt_, "d_t"));
        return join_terms(parts);
    }

private:
    static void check_index(const AlgebraConfig& cfg, int i) {
        if (i < 1 || i > cfg.l)
            throw IndexOutOfRange("matrix index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(cfg.l));
    }

    AlgebraConfig cfg_;
    std::map<LieKey, Scalar> matrix_;
    Scalar cs_, ct_, ds_, dt_;
};

/// The Lie bracket. On basis tensors:
///   [E_ij (x) s^m1 t^n1, E_kn (x) s^m2 t^n2]
///     = d_jk q^{n1 m2} E_in (x) s^{m1+m2} t^{n1+n2}
///     - d_in q^{n2 m1} E_kj (x) s^{m1+m2} t^{n1+n2}
///     + (m1 c_s + n1 c_t) q^{n1 m2} d_jk d_in d_{m1+m2,0} d_{n1+n2,0}.
/// d_s and d_t act as the degree derivations ([d_s, E (x) s^m t^n] = m ...);
/// c_s, c_t are central; [d_s, d_t] = 0.
inline LieElem bracket(const LieElem& x, const LieElem& y) {
    require_same_config(x.config(), y.config());
    const AlgebraConfig& cfg = x.config();
    const FieldPtr& F = cfg.field;
    LieElem r(cfg);
    Scalar cs_acc = Scalar::zero(F);
    Scalar ct_acc = Scalar::zero(F);

    for (const auto& [a, ca] : x.matrix_part())
        for (const auto& [b, cb] : y.matrix_part()) {
            const Scalar cab = ca * cb;
            const long long m = a.m + b.m, n = a.n + b.n;
            if (a.j == b.i) {
                const Scalar w = cab * Scalar::qpow(F, a.n * b.m);
                r.add_matrix_term(LieKey{a.i, b.j, m, n}, w);
                if (a.i == b.j && m == 0 && n == 0) {
                    cs_acc += w * a.m;
                    ct_acc += w * a.n;
                }
            }
            if (a.i == b.j) {
                const Scalar w = cab * Scalar::qpow(F, b.n * a.m);
                r.add_matrix_term(LieKey{b.i, a.j, m, n}, -w);
            }
        }

    // Derivation parts: [x.ds * d_s + x.dt * d_t, y] - [y.ds * d_s + y.dt * d_t, x].
    for (const auto& [b, cb] : y.matrix_part()) {
        const Scalar w = x.ds() * cb * b.m + x.dt() * cb * b.n;
        r.add_matrix_term(b, w);
    }
    for (const auto& [a, ca] : x.matrix_part()) {
        const Scalar w = y.ds() * ca * a.m + y.dt() * ca * a.n;
        r.add_matrix_term(a, -w);
    }

    LieElem central = LieElem::c_s(cfg) * cs_acc + LieElem::c_t(cfg) * ct_acc;
    return r + central;
}

/// All E_{ij} (x) s^m t^n with j > i and (m,n) in the window, in
/// lexicographic (i, j, m, n) order. These span the truncated n_+.
inline std::vector<LieElem> nilpotent_generators(const AlgebraConfig& cfg,
                                                 const ExponentWindow& window) {
    std::vector<LieElem> out;
    for (int i = 1; i <= cfg.l; ++i)
        for (int j = i + 1; j <= cfg.l; ++j)
            for (const auto& [m, n] : window.points())
                out.push_back(LieElem::E(cfg, i, j, m, n));
    return out;
}

} // namespace glcq
