#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glcq/fock.hpp"
#include "glcq/rng.hpp"

namespace glcq {

/// One basis generator of the full algebra: every E_{ij} (x) s^m t^n with
/// (m,n) in the window, then d_s, d_t, c_s, c_t.
inline std::vector<LieElem> all_generators(const AlgebraConfig& cfg,
                                           const ExponentWindow& window) {
    std::vector<LieElem> gens;
    for (int i = 1; i <= cfg.l; ++i)
        for (int j = 1; j <= cfg.l; ++j)
            for (const auto& [m, n] : window.points()) gens.push_back(LieElem::E(cfg, i, j, m, n));
    gens.push_back(LieElem::d_s(cfg));
    gens.push_back(LieElem::d_t(cfg));
    gens.push_back(LieElem::c_s(cfg));
    gens.push_back(LieElem::c_t(cfg));
    return gens;
}

struct SweepResult {
    std::size_t checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// [x,y] + [y,x] = 0 over all ordered pairs from gens.
inline SweepResult antisymmetry_sweep(const std::vector<LieElem>& gens) {
    SweepResult r;
    for (const auto& x : gens)
        for (const auto& y : gens) {
            ++r.checks;
            if (!(bracket(x, y) + bracket(y, x)).is_zero())
                r.failures.push_back("antisymmetry: x = " + x.to_string() +
                                     ", y = " + y.to_string());
        }
    return r;
}

inline bool jacobi_holds(const LieElem& x, const LieElem& y, const LieElem& z) {
    return (bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y))
        .is_zero();
}

/// [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 over all ordered triples from gens.
inline SweepResult jacobi_exhaustive(const std::vector<LieElem>& gens) {
    SweepResult r;
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& z : gens) {
                ++r.checks;
                if (!jacobi_holds(x, y, z))
                    r.failures.push_back("jacobi: x = " + x.to_string() + ", y = " +
                                         y.to_string() + ", z = " + z.to_string());
            }
    return r;
}

/// Jacobi on `trials` seeded random triples drawn from gens.
inline SweepResult jacobi_sampled(const std::vector<LieElem>& gens, std::size_t trials,
                                  std::uint64_t seed) {
    SweepResult r;
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const LieElem& x = rng.pick(gens);
        const LieElem& y = rng.pick(gens);
        const LieElem& z = rng.pick(gens);
        ++r.checks;
        if (!jacobi_holds(x, y, z))
            r.failures.push_back("jacobi: x = " + x.to_string() + ", y = " + y.to_string() +
                                 ", z = " + z.to_string());
    }
    return r;
}

inline std::string commutator_witness(const LieElem& x, const LieElem& y, const Poly& p,
                                      const CommutatorCheck& chk) {
    return "commutator: x = " + x.to_string() + ", y = " + y.to_string() +
           ", p = " + p.to_string() + ", lhs = " + chk.lhs.to_string() +
           ", rhs = " + chk.rhs.to_string();
}

/// The full homomorphism test matrix: every ordered generator pair against
/// every sample monomial. The bracket and the inner actions act(x,p),
/// act(y,p) are hoisted out of the innermost comparisons where possible.
inline SweepResult commutator_exhaustive(const RepParams& params,
                                         const std::vector<LieElem>& gens,
                                         const std::vector<Monomial>& samples) {
    SweepResult r;
    const FieldPtr& F = params.cfg.field;
    std::vector<Poly> polys;
    polys.reserve(samples.size());
    for (const auto& mono : samples)
        polys.push_back(Poly::from_monomial(F, mono, Scalar::one(F)));

    // act(g, p) for every generator and sample, computed once.
    std::vector<std::vector<Poly>> acted(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        acted[g].reserve(polys.size());
        for (const auto& p : polys) acted[g].push_back(act(gens[g], p, params));
    }

    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = 0; b < gens.size(); ++b) {
            const LieElem br = bracket(gens[a], gens[b]);
            for (std::size_t s = 0; s < polys.size(); ++s) {
                ++r.checks;
                const Poly lhs =
                    act(gens[a], acted[b][s], params) - act(gens[b], acted[a][s], params);
                const Poly rhs = act(br, polys[s], params);
                if (!(lhs == rhs))
                    r.failures.push_back(commutator_witness(
                        gens[a], gens[b], polys[s], CommutatorCheck{lhs, rhs, false}));
            }
        }
    return r;
}

/// A seeded random monomial of degree <= max_degree over the windowed
/// variables.
inline Monomial random_monomial(Rng& rng, const AlgebraConfig& cfg, const ExponentWindow& window,
                                int max_degree) {
    const std::vector<VarIndex> vars = window_variables(cfg, window);
    const int degree = static_cast<int>(rng.uniform(0, max_degree));
    Monomial m;
    for (int d = 0; d < degree; ++d) m = m.with_variable(rng.pick(vars));
    return m;
}

/// `trials` seeded (pair, monomial) commutator checks.
inline SweepResult commutator_sampled(const RepParams& params, const ExponentWindow& gen_window,
                                      const ExponentWindow& var_window, int max_degree,
                                      std::size_t trials, std::uint64_t seed) {
    SweepResult r;
    Rng rng(seed);
    const std::vector<LieElem> gens = all_generators(params.cfg, gen_window);
    const FieldPtr& F = params.cfg.field;
    for (std::size_t t = 0; t < trials; ++t) {
        const LieElem& x = rng.pick(gens);
        const LieElem& y = rng.pick(gens);
        const Poly p = Poly::from_monomial(
            F, random_monomial(rng, params.cfg, var_window, max_degree), Scalar::one(F));
        ++r.checks;
        const CommutatorCheck chk = check_commutator(x, y, p, params);
        if (!chk.equal) r.failures.push_back(commutator_witness(x, y, p, chk));
    }
    return r;
}

} // namespace glcq
