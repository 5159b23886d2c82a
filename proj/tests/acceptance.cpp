// Acceptance gate: one pass/fail line per criterion, exit 1 if any fail.
//
//   1. exhaustive homomorphism sweep        (l=2, generic q, mu=1)
//   2. sampled homomorphism sweeps          (l=3,4 in three field modes)
//   3. bracket axioms                       (antisymmetry, Jacobi)
//   4. mu=1 highest-weight scan             (only the unit cell survives)
//   5. mu=0 highest-weight scan             (degree-1 cells full, probe clean)
//   6. pointwise operator identities        (closed-form coefficients)
//   7. specialization commutes with action  (generic -> root:4, rational:3)
//   8. determinism and round-trips          (parser, CLI report bytes)

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "glcq/glcq.hpp"

using namespace glcq;

namespace {

int g_failures = 0;

void line(int idx, const std::string& name, bool ok, const std::string& detail) {
    std::cout << "criterion " << idx << ": " << name << " ... " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string sweep_detail(const SweepResult& r, double secs) {
    std::ostringstream ss;
    ss << r.checks << " checks, " << r.failures.size() << " failures, " << static_cast<int>(secs)
       << "s";
    return ss.str();
}

void print_failures(const SweepResult& r) {
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i)
        std::cout << "    " << r.failures[i] << std::endl;
}

// ---------------------------------------------------------------- criterion 1

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    auto cfg = make_config(2, Field::generic_q());
    const RepParams params = make_rep_params(cfg, Scalar::one(cfg.field));
    const auto gens = all_generators(cfg, ExponentWindow::box(-2, 2));
    const auto samples = enumerate_monomials(cfg, ExponentWindow::box(-1, 1), 2);
    const SweepResult r = commutator_exhaustive(params, gens, samples);
    line(1, "exhaustive homomorphism sweep (l=2, generic q, mu=1)", r.ok(),
         sweep_detail(r, seconds_since(t0)));
    print_failures(r);
}

// ---------------------------------------------------------------- criterion 2

void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t checks = 0, failures = 0;
    std::uint64_t seed = 2000;
    for (const int l : {3, 4})
        for (const auto& F :
             {Field::generic_q(), Field::root_of_unity(5), Field::rational_q(Rational(2, 3))}) {
            auto cfg = make_config(l, F);
            const RepParams params =
                make_rep_params(cfg, Scalar::rational(F, Rational(3, 2)));
            const SweepResult r =
                commutator_sampled(params, ExponentWindow::box(-3, 3), ExponentWindow::box(-3, 3),
                                   3, 1000, ++seed);
            checks += r.checks;
            failures += r.failures.size();
            print_failures(r);
        }
    std::ostringstream ss;
    ss << checks << " checks, " << failures << " failures, "
       << static_cast<int>(seconds_since(t0)) << "s";
    line(2, "sampled homomorphism sweeps (l=3,4; generic, root:5, rational:2/3)", failures == 0,
         ss.str());
}

// ---------------------------------------------------------------- criterion 3

void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    auto cfg2 = make_config(2, Field::generic_q());
    auto cfg3 = make_config(3, Field::generic_q());

    const SweepResult anti = antisymmetry_sweep(all_generators(cfg2, ExponentWindow::box(-2, 2)));
    const SweepResult jac_ex = jacobi_exhaustive(all_generators(cfg2, ExponentWindow::box(-1, 1)));
    const SweepResult jac_rand =
        jacobi_sampled(all_generators(cfg3, ExponentWindow::box(-2, 2)), 200, 303);

    const bool ok = anti.ok() && jac_ex.ok() && jac_rand.ok();
    std::ostringstream ss;
    ss << "antisymmetry " << anti.checks << ", jacobi exhaustive " << jac_ex.checks
       << ", jacobi sampled " << jac_rand.checks << ", "
       << anti.failures.size() + jac_ex.failures.size() + jac_rand.failures.size()
       << " failures, " << static_cast<int>(seconds_since(t0)) << "s";
    line(3, "bracket axioms (antisymmetry exhaustive, Jacobi exhaustive + sampled)", ok, ss.str());
    print_failures(anti);
    print_failures(jac_ex);
    print_failures(jac_rand);
}

// ------------------------------------------------------------ criteria 4 and 5

int total_of(const std::vector<int>& kvec) {
    int t = 0;
    for (int k : kvec) t += k;
    return t;
}

void criterion_4() {
    auto cfg = make_config(2, Field::generic_q());
    const RepParams params = make_rep_params(cfg, Scalar::one(cfg.field));
    const IrreducibilityReport rep = irreducibility_report(
        params, ExponentWindow::box(-1, 1), ExponentWindow::box(-2, 2), 2);

    bool unit_ok = false;
    bool higher_ok = true;
    std::size_t higher_cells = 0;
    for (const auto& c : rep.cells) {
        if (total_of(c.kvec) == 0) {
            unit_ok = c.basis.size() == 1 && c.basis[0] == "1";
        } else {
            ++higher_cells;
            if (c.dim_nullspace != 0 || !c.certified) higher_ok = false;
        }
    }
    const bool ok = unit_ok && higher_ok && higher_cells > 0 &&
                    rep.verdict == "consistent-with-irreducible";
    std::ostringstream ss;
    ss << higher_cells << " cells with k>=1 all empty, unit cell basis {1}, verdict "
       << rep.verdict;
    line(4, "mu=1 highest-weight scan over support [-1,1]^2, test [-2,2]^2, k<=2", ok, ss.str());
}

void criterion_5() {
    auto cfg = make_config(2, Field::generic_q());
    const RepParams params = make_rep_params(cfg, Scalar::zero(cfg.field));
    const IrreducibilityReport rep = irreducibility_report(
        params, ExponentWindow::box(-1, 1), ExponentWindow::box(-2, 2), 2, 3);

    std::size_t k1_cells = 0;
    bool k1_full = true;
    for (const auto& c : rep.cells)
        if (total_of(c.kvec) == 1) {
            ++k1_cells;
            if (c.dim_nullspace != c.dim_support) k1_full = false;
        }
    const bool probe_ok = rep.probe_ran && rep.probe.violations.empty();
    const bool ok = k1_cells == 9 && k1_full && probe_ok &&
                    rep.verdict == "consistent-with-reducible";
    std::ostringstream ss;
    ss << k1_cells << " degree-1 cells full, probe " << rep.probe.checks << " checks / "
       << rep.probe.violations.size() << " violations, verdict " << rep.verdict;
    line(5, "mu=0 highest-weight scan and constant-term submodule probe (cap 3)", ok, ss.str());
}

// ---------------------------------------------------------------- criterion 6

Poly monomial_poly(const FieldPtr& F, const Monomial& m) {
    return Poly::from_monomial(F, m, Scalar::one(F));
}

void criterion_6() {
    auto cfg = make_config(2, Field::generic_q());
    const FieldPtr& F = cfg.field;
    const Scalar mu = Scalar::rational(F, Rational(7, 3));
    const RepParams params = make_rep_params(cfg, mu);
    bool ok = true;
    std::string first_bad;
    const auto expect = [&](bool cond, const std::string& what) {
        if (!cond && ok) first_bad = what;
        ok = ok && cond;
    };

    // lowering a matched variable: e_12(-1,-1) x2(1,1) = mu q^{-1} 1
    {
        const Poly got = act(LieElem::E(cfg, 1, 2, -1, -1),
                             Poly::variable(F, VarIndex{2, 1, 1}), params);
        expect(got == mu * Scalar::qpow(F, -1) * Poly::one(F), "lowering identity");
    }

    // e_11(0,0) eigenvalue mu - deg on monomials of degree 0..3
    {
        auto cfg3 = make_config(3, F);
        const RepParams params3 = make_rep_params(cfg3, mu);
        const Monomial monos[] = {
            Monomial{},
            Monomial::variable(VarIndex{2, 1, -1}),
            Monomial::variable(VarIndex{2, 1, -1}).with_variable(VarIndex{3, 0, 2}),
            Monomial::variable(VarIndex{2, 1, -1}).with_variable(VarIndex{2, 1, -1}, 2),
        };
        for (const auto& m : monos) {
            const Poly p = monomial_poly(F, m);
            const Scalar eig = mu - Scalar::integer(F, m.degree());
            expect(act(LieElem::E(cfg3, 1, 1), p, params3) == eig * p, "e_11 eigenvalue");
        }
    }

    // degree derivations: eigenvalues (sum of m, sum of n) with multiplicity
    {
        const Monomial m = Monomial::variable(VarIndex{2, 2, -1})
                               .with_variable(VarIndex{2, -1, 3}, 2);
        const Poly p = monomial_poly(F, m);
        expect(act(LieElem::d_s(cfg), p, params) == Scalar::integer(F, 2 - 1 - 1) * p,
               "d_s eigenvalue");
        expect(act(LieElem::d_t(cfg), p, params) == Scalar::integer(F, -1 + 3 + 3) * p,
               "d_t eigenvalue");
    }

    // degree-2 coefficient identity: e_12(a,b) on x2(m1,n1) x2(m-m1,n-n1)
    // equals [ mu q^{-ab} (d1 + d2) - q^{b(m-m1)+a n1+n1(m-m1)}
    //                              - q^{b m1+a(n-n1)+m1(n-n1)} ] x2(m+a, n+b)
    // where d1 = [(m1,n1) = (-a,-b)], d2 = [(m-m1,n-n1) = (-a,-b)].
    {
        Rng rng(606);
        for (int trial = 0; trial < 20; ++trial) {
            const long long a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
            const long long m1 = rng.uniform(-2, 2), n1 = rng.uniform(-2, 2);
            const long long m = rng.uniform(-2, 2), n = rng.uniform(-2, 2);
            const long long m2 = m - m1, n2 = n - n1;
            const Monomial mono =
                Monomial::variable(VarIndex{2, m1, n1}).with_variable(VarIndex{2, m2, n2});
            const Poly got = act(LieElem::E(cfg, 1, 2, a, b), monomial_poly(F, mono), params);

            Scalar coeff = Scalar::zero(F);
            const Scalar mu_q = mu * Scalar::qpow(F, -a * b);
            if (m1 == -a && n1 == -b) coeff += mu_q;
            if (m2 == -a && n2 == -b) coeff += mu_q;
            coeff -= Scalar::qpow(F, b * m2 + a * n1 + n1 * m2);
            coeff -= Scalar::qpow(F, b * m1 + a * n2 + m1 * n2);
            const Poly want =
                coeff * Poly::variable(F, VarIndex{2, m + a, n + b});
            expect(got == want, "degree-2 coefficient formula");
        }
    }

    line(6, "pointwise operator identities (lowering, eigenvalues, degree-2 formula)", ok,
         ok ? "27 identities" : first_bad);
}

// ---------------------------------------------------------------- criterion 7

struct LieRecipe {
    // matrix terms (i, j, m, n) with integer coefficient c * q^e
    struct Term {
        int i, j;
        long long m, n, c, e;
    };
    std::vector<Term> terms;
    int extra = -1; // 0..3 -> d_s, d_t, c_s, c_t

    LieElem materialize(const AlgebraConfig& cfg) const {
        LieElem x = LieElem::zero(cfg);
        for (const auto& t : terms)
            x = x + Scalar::integer(cfg.field, t.c) * Scalar::qpow(cfg.field, t.e) *
                        LieElem::E(cfg, t.i, t.j, t.m, t.n);
        switch (extra) {
        case 0: x = x + LieElem::d_s(cfg); break;
        case 1: x = x + LieElem::d_t(cfg); break;
        case 2: x = x + LieElem::c_s(cfg); break;
        case 3: x = x + LieElem::c_t(cfg); break;
        default: break;
        }
        return x;
    }
};

void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    const int l = 3;
    auto generic_cfg = make_config(l, Field::generic_q());
    const RepParams generic_params =
        make_rep_params(generic_cfg, Scalar::rational(generic_cfg.field, Rational(5, 7)));

    std::vector<std::pair<FieldPtr, std::string>> targets = {
        {Field::root_of_unity(4), "root:4"}, {Field::rational_q(Rational(3)), "rational:3"}};

    Rng rng(707);
    std::size_t checks = 0, failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        LieRecipe recipe;
        const int nterms = static_cast<int>(rng.uniform(1, 2));
        for (int t = 0; t < nterms; ++t)
            recipe.terms.push_back({static_cast<int>(rng.uniform(1, l)),
                                    static_cast<int>(rng.uniform(1, l)), rng.uniform(-2, 2),
                                    rng.uniform(-2, 2), rng.uniform(-3, 3), rng.uniform(-2, 2)});
        recipe.extra = static_cast<int>(rng.uniform(-1, 3));
        const Monomial mono =
            random_monomial(rng, generic_cfg, ExponentWindow::box(-2, 2), 3);

        const Poly generic_result =
            act(recipe.materialize(generic_cfg),
                monomial_poly(generic_cfg.field, mono), generic_params);

        for (const auto& [F, name] : targets) {
            auto cfg = make_config(l, F);
            const RepParams params = make_rep_params(cfg, Scalar::rational(F, Rational(5, 7)));
            const Poly native =
                act(recipe.materialize(cfg), monomial_poly(F, mono), params);
            ++checks;
            if (!(generic_result.specialized(F) == native)) {
                ++failures;
                if (failures == 1)
                    std::cout << "    specialization mismatch at " << name << ", trial " << trial
                              << std::endl;
            }
        }
    }
    std::ostringstream ss;
    ss << checks << " checks, " << failures << " failures, "
       << static_cast<int>(seconds_since(t0)) << "s";
    line(7, "specialization of the action to root:4 and rational:3", failures == 0, ss.str());
}

// ---------------------------------------------------------------- criterion 8

Scalar random_scalar(Rng& rng, const FieldPtr& F) {
    Scalar acc = Scalar::zero(F);
    const int terms = static_cast<int>(rng.uniform(0, 3));
    for (int t = 0; t < terms; ++t)
        acc += Scalar::rational(F, Rational(rng.uniform(-9, 9), rng.uniform(1, 5))) *
               Scalar::qpow(F, rng.uniform(-5, 5));
    return acc;
}

LieElem random_lie(Rng& rng, const AlgebraConfig& cfg) {
    LieElem acc = LieElem::zero(cfg);
    const int terms = static_cast<int>(rng.uniform(1, 3));
    for (int t = 0; t < terms; ++t)
        acc = acc + Scalar::integer(cfg.field, rng.uniform(-4, 4)) *
                        Scalar::qpow(cfg.field, rng.uniform(-3, 3)) *
                        LieElem::E(cfg, static_cast<int>(rng.uniform(1, cfg.l)),
                                   static_cast<int>(rng.uniform(1, cfg.l)), rng.uniform(-3, 3),
                                   rng.uniform(-3, 3));
    if (rng.uniform(0, 1) == 0) acc = acc + LieElem::d_s(cfg) - LieElem::c_t(cfg);
    return acc;
}

Poly random_poly(Rng& rng, const AlgebraConfig& cfg) {
    Poly acc = Poly::zero(cfg.field);
    const int terms = static_cast<int>(rng.uniform(1, 3));
    for (int t = 0; t < terms; ++t) {
        Scalar c = Scalar::rational(cfg.field, Rational(rng.uniform(-5, 5), rng.uniform(1, 3))) *
                   Scalar::qpow(cfg.field, rng.uniform(-2, 2));
        if (c.is_zero()) c = Scalar::one(cfg.field);
        acc.add_term(random_monomial(rng, cfg, ExponentWindow::box(-2, 2), 3), c);
    }
    return acc;
}

bool run_cli_to_file(const std::string& bin, const std::string& args,
                     const std::filesystem::path& out) {
    const std::string cmd = bin + " " + args + " --out '" + out.string() + "' 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_8() {
    auto cfg = make_config(3, Field::generic_q());
    Rng rng(808);
    std::size_t round_trips = 0, rt_failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        ++round_trips;
        switch (trial % 3) {
        case 0: {
            const Scalar v = random_scalar(rng, cfg.field);
            if (!(parse_scalar_expr(v.to_string(), cfg) == v)) ++rt_failures;
            break;
        }
        case 1: {
            const LieElem v = random_lie(rng, cfg);
            if (!(parse_lie_expr(v.to_string(), cfg) == v)) ++rt_failures;
            break;
        }
        default: {
            const Poly v = random_poly(rng, cfg);
            if (!(parse_poly_expr(v.to_string(), cfg) == v)) ++rt_failures;
            break;
        }
        }
    }

    bool cli_ok = false;
    std::string cli_detail;
    const char* bin = std::getenv("GLCQ_CLI");
    if (!bin) {
        cli_detail = "GLCQ_CLI not set";
    } else {
        const auto dir = std::filesystem::temp_directory_path();
        const auto p1 = dir / "glcq_acceptance_report_1.json";
        const auto p2 = dir / "glcq_acceptance_report_2.json";
        const std::string args =
            "report --l 2 --q generic --mu 1 --window -1:1 --test-window -2:2 "
            "--max-k 2 --seed 7 --format json";
        const bool ran = run_cli_to_file(bin, args, p1) && run_cli_to_file(bin, args, p2);
        const std::string b1 = slurp(p1);
        cli_ok = ran && !b1.empty() && b1 == slurp(p2);
        cli_detail = cli_ok ? "report runs byte-identical" : "report runs differ";
        std::filesystem::remove(p1);
        std::filesystem::remove(p2);
    }

    std::ostringstream ss;
    ss << round_trips << " round-trips, " << rt_failures << " failures; " << cli_detail;
    line(8, "determinism: parse/print round-trips and repeated CLI report", rt_failures == 0 && cli_ok,
         ss.str());
}

} // namespace

int main() {
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
    } catch (const std::exception& e) {
        std::cout << "acceptance aborted: " << e.what() << std::endl;
        return 1;
    }
    std::cout << (g_failures == 0 ? "acceptance: all criteria pass"
                                  : "acceptance: " + std::to_string(g_failures) +
                                        " criteria failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
