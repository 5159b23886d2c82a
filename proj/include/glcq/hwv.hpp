#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "glcq/fock.hpp"
#include "glcq/matrix.hpp"

namespace glcq {

/// Simultaneous eigenvalue data of a monomial under the Cartan action:
/// e_11(0,0), the e_ii(0,0) counts, and the D1/D2 degrees.
struct Weight {
    Scalar e11_val;        // mu - (k_2 + ... + k_l)
    std::vector<int> kvec; // (k_2, ..., k_l)
    long long ds_deg, dt_deg;

    bool operator==(const Weight&) const = default;
};

inline Weight weight_of(const Monomial& p, const RepParams& params) {
    Weight w{params.mu, std::vector<int>(static_cast<std::size_t>(params.cfg.l - 1), 0), 0, 0};
    for (const auto& [v, k] : p.factors()) {
        w.kvec.at(static_cast<std::size_t>(v.i - 2)) += k;
        w.ds_deg += static_cast<long long>(k) * v.m;
        w.dt_deg += static_cast<long long>(k) * v.n;
        w.e11_val -= Scalar::integer(params.cfg.field, k);
    }
    return w;
}

/// Ordered basis of the truncated weight space of one type.
struct WeightSpaceBasis {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;

    std::size_t dim() const { return monomials.size(); }
};

namespace detail {

/// Fills line i = line+1 with `remaining` more factors chosen nondecreasingly
/// from the window points, then recurses into the next line; a monomial is
/// kept when every line is full and the degree totals land on zero.
inline void weight_space_rec(const AlgebraConfig& cfg, const std::vector<int>& kvec,
                             const std::vector<std::pair<long long, long long>>& points,
                             std::size_t line, std::size_t point_floor, int remaining,
                             long long ds_left, long long dt_left, const Monomial& base,
                             std::vector<Monomial>& out) {
    if (remaining == 0) {
        if (line + 1 < static_cast<std::size_t>(cfg.l)) {
            weight_space_rec(cfg, kvec, points, line + 1, 0, kvec[line], ds_left, dt_left, base,
                             out);
        } else if (ds_left == 0 && dt_left == 0) {
            out.push_back(base);
        }
        return;
    }
    for (std::size_t t = point_floor; t < points.size(); ++t) {
        const auto [m, n] = points[t];
        weight_space_rec(cfg, kvec, points, line, t, remaining - 1, ds_left - m, dt_left - n,
                         base.with_variable(VarIndex{static_cast<int>(line) + 1, m, n}), out);
    }
}

} // namespace detail

/// All monomials with exactly kvec = (k_2..k_l) factors per line, total
/// degrees (ds_deg, dt_deg), and every exponent pair inside the window.
inline WeightSpaceBasis enumerate_weight_space(const std::vector<int>& kvec, long long ds_deg,
                                               long long dt_deg, const ExponentWindow& window,
                                               const AlgebraConfig& cfg) {
    if (kvec.size() != static_cast<std::size_t>(cfg.l - 1))
        throw ConfigMismatch("kvec length must be l-1");
    WeightSpaceBasis basis;
    if (!window.is_empty()) {
        const auto points = window.points();
        detail::weight_space_rec(cfg, kvec, points, /*line=*/1, 0, kvec[0], ds_deg, dt_deg,
                                 Monomial{}, basis.monomials);
    } else if (ds_deg == 0 && dt_deg == 0) {
        bool all_zero = true;
        for (int k : kvec) all_zero = all_zero && k == 0;
        if (all_zero) basis.monomials.push_back(Monomial{});
    }
    for (std::size_t t = 0; t < basis.monomials.size(); ++t)
        basis.index.emplace(basis.monomials[t], t);
    return basis;
}

/// Outcome of the truncated highest-weight-vector search in one cell.
struct HwvResult {
    WeightSpaceBasis support;
    std::vector<Poly> basis;  // exact nullspace of the stacked constraints
    bool certified_empty;     // true: no HWV with this support exists at all
    ExponentWindow support_window, test_window;
};

/// Solves (act(g, v) = 0 for g in the truncated n_+) on the span of the
/// truncated weight space. The tested constraints are a finite subset of the
/// full family, so a nonzero answer is a candidate; an empty answer is a
/// certificate that no vector with this support is annihilated.
inline HwvResult hwv_solve(const std::vector<int>& kvec, long long ds_deg, long long dt_deg,
                           const ExponentWindow& support_window,
                           const ExponentWindow& test_window, const RepParams& params) {
    const AlgebraConfig& cfg = params.cfg;
    WeightSpaceBasis support = enumerate_weight_space(kvec, ds_deg, dt_deg, support_window, cfg);
    HwvResult result{std::move(support), {}, true, support_window, test_window};
    if (result.support.dim() == 0) return result;

    const std::vector<LieElem> gens = nilpotent_generators(cfg, test_window);

    // Images of the basis monomials, grouped per generator; rows are the
    // distinct target monomials each generator produces.
    std::vector<std::vector<Poly>> images(gens.size(),
                                          std::vector<Poly>());
    std::size_t rows = 0;
    std::vector<std::map<Monomial, std::size_t>> row_of(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        images[g].reserve(result.support.dim());
        for (const auto& mono : result.support.monomials) {
            Poly img = act(gens[g], Poly::from_monomial(cfg.field, mono, Scalar::one(cfg.field)),
                           params);
            for (const auto& [target, c] : img.terms())
                if (row_of[g].emplace(target, 0).second) ++rows;
            images[g].push_back(std::move(img));
        }
    }
    std::size_t next_row = 0;
    for (auto& rm : row_of)
        for (auto& [target, idx] : rm) idx = next_row++;

    ScalarMatrix M(cfg.field, rows, result.support.dim());
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t col = 0; col < images[g].size(); ++col)
            for (const auto& [target, c] : images[g][col].terms())
                M.set(row_of[g].at(target), col, c);

    for (const auto& vec : nullspace(M)) {
        Poly v(cfg.field);
        for (std::size_t col = 0; col < vec.size(); ++col)
            v.add_term(result.support.monomials[col], vec[col]);
        result.basis.push_back(std::move(v));
    }
    result.certified_empty = result.basis.empty();
    return result;
}

/// Independent post-hoc check: every solver output is annihilated by every
/// tested generator. Returns the number of (vector, generator) failures.
inline std::size_t recheck_hwv_basis(const HwvResult& r, const RepParams& params) {
    std::size_t failures = 0;
    const auto gens = nilpotent_generators(params.cfg, r.test_window);
    for (const auto& v : r.basis)
        for (const auto& g : gens)
            if (!act(g, v, params).is_zero()) ++failures;
    return failures;
}

struct ConstantTermViolation {
    std::string generator;
    std::string input;
    std::string output;
};

struct ConstantTermReport {
    std::size_t checks = 0;
    std::vector<ConstantTermViolation> violations;
};

/// For mu = 0 the polynomials without constant term should form a
/// submodule: no generator applied to a degree >= 1 monomial may produce a
/// nonzero constant term. Runs the windowed sweep and records witnesses.
/// (With mu != 0 this doubles as a control run that must find witnesses.)
inline ConstantTermReport constant_term_probe(const RepParams& params,
                                              const ExponentWindow& window, int degree_cap) {
    ConstantTermReport report;
    const AlgebraConfig& cfg = params.cfg;
    std::vector<LieElem> gens;
    for (int i = 1; i <= cfg.l; ++i)
        for (int j = 1; j <= cfg.l; ++j)
            for (const auto& [m, n] : window.points()) gens.push_back(LieElem::E(cfg, i, j, m, n));
    gens.push_back(LieElem::d_s(cfg));
    gens.push_back(LieElem::d_t(cfg));
    gens.push_back(LieElem::c_s(cfg));
    gens.push_back(LieElem::c_t(cfg));

    for (const auto& mono : enumerate_monomials(cfg, window, degree_cap)) {
        if (mono.is_unit()) continue; // degree 1..degree_cap only
        const Poly p = Poly::from_monomial(cfg.field, mono, Scalar::one(cfg.field));
        for (const auto& g : gens) {
            const Poly out = act(g, p, params);
            ++report.checks;
            auto it = out.terms().find(Monomial{});
            if (it != out.terms().end() && !it->second.is_zero())
                report.violations.push_back(
                    ConstantTermViolation{g.to_string(), mono.to_string(), out.to_string()});
        }
    }
    return report;
}

struct ReportCell {
    std::vector<int> kvec;
    long long ds, dt;
    std::size_t dim_support, dim_nullspace;
    std::vector<std::string> basis;
    bool certified; // empty cells are certificates; nonzero cells are candidates
};

struct IrreducibilityReport {
    int l;
    std::string q_mode;
    std::string mu;
    ExponentWindow support_window, test_window;
    int max_k;
    int degree_cap; // probe depth when mu = 0
    std::vector<ReportCell> cells;
    ConstantTermReport probe; // populated only when mu = 0
    bool probe_ran = false;
    std::string verdict;
    std::vector<std::string> caveats;
};

namespace detail {

inline void kvec_rec(int lines, int budget, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == lines) {
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= budget; ++k) {
        cur.push_back(k);
        kvec_rec(lines, budget - k, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// All kvecs of length l-1 with sum <= max_k, lexicographic.
inline std::vector<std::vector<int>> weight_types_up_to(int l, int max_k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    detail::kvec_rec(l - 1, max_k, cur, out);
    return out;
}

/// Runs hwv_solve on every weight-space cell with total degree <= max_k and
/// realizable (ds, dt) totals; for mu = 0 additionally runs the
/// constant-term probe. Aggregates everything into one report.
inline IrreducibilityReport irreducibility_report(const RepParams& params,
                                                  const ExponentWindow& support_window,
                                                  const ExponentWindow& test_window, int max_k,
                                                  int degree_cap = 3) {
    const AlgebraConfig& cfg = params.cfg;
    IrreducibilityReport rep{cfg.l,
                             cfg.field->describe(),
                             params.mu.to_string(),
                             support_window,
                             test_window,
                             max_k,
                             degree_cap,
                             {},
                             {},
                             false,
                             "",
                             {}};

    bool k0_is_unit = false;
    bool higher_nonzero = false;
    bool higher_all_full = true;
    for (const auto& kvec : weight_types_up_to(cfg.l, max_k)) {
        int total = 0;
        for (int k : kvec) total += k;
        const long long ds_lo = total * support_window.m_lo, ds_hi = total * support_window.m_hi;
        const long long dt_lo = total * support_window.n_lo, dt_hi = total * support_window.n_hi;
        for (long long ds = ds_lo; ds <= ds_hi; ++ds)
            for (long long dt = dt_lo; dt <= dt_hi; ++dt) {
                HwvResult r = hwv_solve(kvec, ds, dt, support_window, test_window, params);
                if (r.support.dim() == 0) continue;
                ReportCell cell{kvec,
                                ds,
                                dt,
                                r.support.dim(),
                                r.basis.size(),
                                {},
                                r.certified_empty};
                for (const auto& v : r.basis) cell.basis.push_back(v.to_string());
                if (total == 0) {
                    k0_is_unit = cell.dim_nullspace == 1 && cell.dim_support == 1 &&
                                 cell.basis.size() == 1 && cell.basis[0] == "1";
                } else {
                    if (cell.dim_nullspace > 0) higher_nonzero = true;
                    if (cell.dim_nullspace != cell.dim_support) higher_all_full = false;
                }
                rep.cells.push_back(std::move(cell));
            }
    }

    if (params.mu.is_zero()) {
        rep.probe = constant_term_probe(params, support_window, degree_cap);
        rep.probe_ran = true;
        const bool probe_clean = rep.probe.violations.empty();
        rep.verdict = (higher_nonzero && probe_clean) ? "consistent-with-reducible"
                                                      : "inconclusive";
        (void)higher_all_full;
    } else {
        rep.verdict = (k0_is_unit && !higher_nonzero) ? "consistent-with-irreducible"
                                                      : "unexpected-hwv-candidates";
    }
    rep.caveats.push_back("n_+ invariance tested only for generator exponents in " +
                          test_window.to_string());
    rep.caveats.push_back("weight-space supports truncated to variable exponents in " +
                          support_window.to_string());
    rep.caveats.push_back("nonzero bases are candidates; only empty cells are certificates");
    return rep;
}

} // namespace glcq
