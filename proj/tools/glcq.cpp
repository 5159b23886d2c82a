#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glcq/glcq.hpp"
#include "glcq/report_json.hpp"

namespace {

using namespace glcq;

struct CommonOpts {
    int l = 2;
    std::string q_mode = "generic";
    std::string mu = "1";
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 1;
};

FieldPtr make_field(const std::string& q_mode) {
    if (q_mode == "generic") return Field::generic_q();
    if (q_mode.rfind("root:", 0) == 0) {
        const unsigned L = static_cast<unsigned>(std::stoul(q_mode.substr(5)));
        return Field::root_of_unity(L);
    }
    if (q_mode.rfind("rational:", 0) == 0) {
        const std::string lit = q_mode.substr(9);
        return Field::rational_q(Rational(lit));
    }
    throw CLI::ValidationError("--q", "expected generic, root:L, or rational:P/Q");
}

ExponentWindow parse_window(const std::string& text) {
    const auto comma = text.find(',');
    const auto parse_range = [](const std::string& part) {
        const auto colon = part.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("window", "expected LO:HI or LO:HI,LO:HI, got " + part);
        return std::pair<long long, long long>{std::stoll(part.substr(0, colon)),
                                               std::stoll(part.substr(colon + 1))};
    };
    ExponentWindow w;
    const auto [m_lo, m_hi] = parse_range(text.substr(0, comma));
    w.m_lo = m_lo;
    w.m_hi = m_hi;
    if (comma == std::string::npos) {
        w.n_lo = m_lo;
        w.n_hi = m_hi;
    } else {
        const auto [n_lo, n_hi] = parse_range(text.substr(comma + 1));
        w.n_lo = n_lo;
        w.n_hi = n_hi;
    }
    return w;
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--l", o.l, "size of gl_l (>= 2)")->capture_default_str();
    cmd->add_option("--q", o.q_mode, "coefficient field: generic | root:L | rational:P/Q")
        ->capture_default_str();
    cmd->add_option("--mu", o.mu, "highest-weight parameter (scalar expression)")
        ->capture_default_str();
    cmd->add_option("--format", o.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "write the report to FILE instead of stdout");
    cmd->add_option("--seed", o.seed, "seed for sampled sweeps")->capture_default_str();
}

RepParams build_params(const CommonOpts& o) {
    FieldPtr F = make_field(o.q_mode);
    AlgebraConfig cfg = make_config(o.l, F);
    Scalar mu = parse_scalar_expr(o.mu, cfg);
    return make_rep_params(std::move(cfg), std::move(mu));
}

void emit(const CommonOpts& o, const std::string& body) {
    if (o.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + o.out_path);
    out << body;
}

Json sweep_to_json(const std::string& name, const SweepResult& r) {
    Json j;
    j["suite"] = name;
    j["checks"] = r.checks;
    j["failures"] = r.failures;
    return j;
}

std::string sweep_to_text(const std::string& name, const SweepResult& r) {
    std::string s = name + ": " + std::to_string(r.checks) + " checks, " +
                    std::to_string(r.failures.size()) + " failures\n";
    for (const auto& f : r.failures) s += "  FAIL " + f + "\n";
    return s;
}

int run_verify(const CommonOpts& o, const std::string& window_text,
               const std::string& sample_window_text, int degree_cap, std::size_t trials,
               std::size_t jacobi_trials) {
    const RepParams params = build_params(o);
    const AlgebraConfig& cfg = params.cfg;
    const ExponentWindow gen_window = parse_window(window_text);
    const ExponentWindow var_window = parse_window(sample_window_text);

    const std::vector<LieElem> gens = all_generators(cfg, gen_window);
    std::vector<std::pair<std::string, SweepResult>> suites;

    suites.emplace_back("antisymmetry", antisymmetry_sweep(gens));
    if (cfg.l == 2) {
        const auto small = all_generators(cfg, ExponentWindow::box(-1, 1));
        suites.emplace_back("jacobi-exhaustive", jacobi_exhaustive(small));
    }
    suites.emplace_back("jacobi-sampled", jacobi_sampled(gens, jacobi_trials, o.seed));

    if (trials == 0) {
        const auto samples = enumerate_monomials(cfg, var_window, degree_cap);
        suites.emplace_back("commutator-exhaustive",
                            commutator_exhaustive(params, gens, samples));
    } else {
        suites.emplace_back("commutator-sampled",
                            commutator_sampled(params, gen_window, var_window, degree_cap,
                                               trials, o.seed));
    }

    bool ok = true;
    for (const auto& [name, r] : suites) ok = ok && r.ok();

    if (o.format == "json") {
        Json j;
        j["params"] = Json{{"l", cfg.l},
                           {"q", cfg.field->describe()},
                           {"mu", params.mu.to_string()},
                           {"window", gen_window.to_string()},
                           {"sample_window", var_window.to_string()},
                           {"degree_cap", degree_cap},
                           {"trials", trials},
                           {"seed", o.seed}};
        Json arr = Json::array();
        for (const auto& [name, r] : suites) arr.push_back(sweep_to_json(name, r));
        j["suites"] = std::move(arr);
        j["ok"] = ok;
        emit(o, j.dump(2) + "\n");
    } else {
        std::string body;
        for (const auto& [name, r] : suites) body += sweep_to_text(name, r);
        body += ok ? "verify: OK\n" : "verify: FAILED\n";
        emit(o, body);
    }
    return ok ? 0 : 1;
}

int run_act(const CommonOpts& o, const std::string& lie_text, const std::string& poly_text) {
    const RepParams params = build_params(o);
    const LieElem x = parse_lie_expr(lie_text, params.cfg);
    const Poly p = parse_poly_expr(poly_text, params.cfg);
    const Poly result = act(x, p, params);
    if (o.format == "json") {
        Json j;
        j["x"] = x.to_string();
        j["p"] = p.to_string();
        j["result"] = result.to_string();
        emit(o, j.dump(2) + "\n");
    } else {
        emit(o, result.to_string() + "\n");
    }
    return 0;
}

int run_hwv(const CommonOpts& o, const std::string& kvec_text, long long ds, long long dt,
            const std::string& window_text, std::optional<std::string> test_window_text) {
    const RepParams params = build_params(o);
    std::vector<int> kvec;
    std::size_t at = 0;
    while (at < kvec_text.size()) {
        auto comma = kvec_text.find(',', at);
        if (comma == std::string::npos) comma = kvec_text.size();
        kvec.push_back(std::stoi(kvec_text.substr(at, comma - at)));
        at = comma + 1;
    }
    const ExponentWindow support = parse_window(window_text);
    const ExponentWindow test =
        test_window_text ? parse_window(*test_window_text) : support.dilated(1);
    const HwvResult r = hwv_solve(kvec, ds, dt, support, test, params);
    const std::size_t recheck_failures = recheck_hwv_basis(r, params);

    if (o.format == "json") {
        Json j;
        j["params"] = Json{{"l", params.cfg.l},
                           {"q", params.cfg.field->describe()},
                           {"mu", params.mu.to_string()}};
        j["kvec"] = kvec;
        j["ds"] = ds;
        j["dt"] = dt;
        j["windows"] = Json{{"support", window_to_json(support)}, {"test", window_to_json(test)}};
        j["dim_support"] = r.support.dim();
        j["dim_nullspace"] = r.basis.size();
        Json basis = Json::array();
        for (const auto& v : r.basis) basis.push_back(v.to_string());
        j["basis"] = std::move(basis);
        j["certified"] = r.certified_empty;
        j["recheck_failures"] = recheck_failures;
        emit(o, j.dump(2) + "\n");
    } else {
        std::string body = "support dimension: " + std::to_string(r.support.dim()) + "\n" +
                           "nullspace dimension: " + std::to_string(r.basis.size()) + "\n";
        for (const auto& v : r.basis) body += "  " + v.to_string() + "\n";
        body += r.certified_empty
                    ? "certified: no highest-weight vector with this support\n"
                    : "candidates only: constraints were tested on a finite window\n";
        if (recheck_failures > 0)
            body += "RECHECK FAILED on " + std::to_string(recheck_failures) + " pairs\n";
        emit(o, body);
    }
    return recheck_failures == 0 ? 0 : 1;
}

int run_report(const CommonOpts& o, const std::string& window_text,
               std::optional<std::string> test_window_text, int max_k, int degree_cap) {
    const RepParams params = build_params(o);
    const ExponentWindow support = parse_window(window_text);
    const ExponentWindow test =
        test_window_text ? parse_window(*test_window_text) : support.dilated(1);
    const IrreducibilityReport rep =
        irreducibility_report(params, support, test, max_k, degree_cap);

    if (o.format == "json") {
        emit(o, report_to_json(rep).dump(2) + "\n");
    } else {
        std::string body = "l=" + std::to_string(rep.l) + " q=" + rep.q_mode + " mu=" + rep.mu +
                           " support=" + support.to_string() + " test=" + test.to_string() +
                           " max_k=" + std::to_string(rep.max_k) + "\n";
        for (const auto& c : rep.cells) {
            body += "  kvec=(";
            for (std::size_t i = 0; i < c.kvec.size(); ++i)
                body += (i ? "," : "") + std::to_string(c.kvec[i]);
            body += ") ds=" + std::to_string(c.ds) + " dt=" + std::to_string(c.dt) +
                    " dim=" + std::to_string(c.dim_support) +
                    " nullspace=" + std::to_string(c.dim_nullspace) +
                    (c.certified ? " [certified empty]" : " [candidates]") + "\n";
            for (const auto& b : c.basis) body += "      " + b + "\n";
        }
        if (rep.probe_ran)
            body += "constant-term probe: " + std::to_string(rep.probe.checks) + " checks, " +
                    std::to_string(rep.probe.violations.size()) + " violations\n";
        body += "verdict: " + rep.verdict + "\n";
        for (const auto& c : rep.caveats) body += "caveat: " + c + "\n";
        emit(o, body);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact free-field realization of gl_l over the quantum torus"};
    app.require_subcommand(1);

    CommonOpts vopt;
    std::string v_window = "-2:2", v_sample_window = "-1:1";
    int v_degree_cap = 2;
    std::size_t v_trials = 0, v_jacobi_trials = 200;
    CLI::App* verify = app.add_subcommand(
        "verify", "check bracket axioms and the homomorphism property");
    add_common(verify, vopt);
    verify->add_option("--window", v_window, "generator exponent window LO:HI[,LO:HI]")
        ->capture_default_str();
    verify->add_option("--sample-window", v_sample_window, "sample variable exponent window")
        ->capture_default_str();
    verify->add_option("--degree-cap", v_degree_cap, "max degree of sample monomials")
        ->capture_default_str();
    verify->add_option("--trials", v_trials,
                       "number of sampled commutator trials (0 = exhaustive)")
        ->capture_default_str();
    verify->add_option("--jacobi-trials", v_jacobi_trials, "number of sampled Jacobi triples")
        ->capture_default_str();

    CommonOpts aopt;
    std::string a_lie, a_poly;
    CLI::App* act_cmd = app.add_subcommand("act", "apply a Lie algebra element to a polynomial");
    add_common(act_cmd, aopt);
    act_cmd->add_option("lie", a_lie, "Lie algebra element expression")->required();
    act_cmd->add_option("poly", a_poly, "polynomial expression")->required();

    CommonOpts hopt;
    std::string h_kvec = "0", h_window = "-1:1";
    std::optional<std::string> h_test_window;
    long long h_ds = 0, h_dt = 0;
    CLI::App* hwv_cmd =
        app.add_subcommand("hwv", "solve for highest-weight vectors in one weight cell");
    add_common(hwv_cmd, hopt);
    hwv_cmd->add_option("--kvec", h_kvec, "comma-separated counts k_2,...,k_l")
        ->capture_default_str();
    hwv_cmd->add_option("--ds", h_ds, "total s-degree")->capture_default_str();
    hwv_cmd->add_option("--dt", h_dt, "total t-degree")->capture_default_str();
    hwv_cmd->add_option("--window", h_window, "support exponent window")->capture_default_str();
    hwv_cmd->add_option("--test-window", h_test_window,
                        "generator window (default: support dilated by 1)");

    CommonOpts ropt;
    std::string r_window = "-1:1";
    std::optional<std::string> r_test_window;
    int r_max_k = 2, r_degree_cap = 3;
    CLI::App* report_cmd =
        app.add_subcommand("report", "scan weight cells and probe the irreducibility dichotomy");
    add_common(report_cmd, ropt);
    report_cmd->add_option("--window", r_window, "support exponent window")
        ->capture_default_str();
    report_cmd->add_option("--test-window", r_test_window,
                           "generator window (default: support dilated by 1)");
    report_cmd->add_option("--max-k", r_max_k, "largest total weight depth")
        ->capture_default_str();
    report_cmd->add_option("--degree-cap", r_degree_cap,
                           "probe depth for the mu=0 constant-term sweep")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (verify->parsed())
            return run_verify(vopt, v_window, v_sample_window, v_degree_cap, v_trials,
                              v_jacobi_trials);
        if (act_cmd->parsed()) return run_act(aopt, a_lie, a_poly);
        if (hwv_cmd->parsed())
            return run_hwv(hopt, h_kvec, h_ds, h_dt, h_window, h_test_window);
        if (report_cmd->parsed())
            return run_report(ropt, r_window, r_test_window, r_max_k, r_degree_cap);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const glcq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
