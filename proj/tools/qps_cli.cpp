// qps — verification suites and phase-space data for the discrete
// operator-algebra toolkit.
//
// Subcommands:
//   verify       run a named suite (or "all") and emit a JSON report
//   wigner       action-angle Wigner table as CSV (J,theta,W)
//   marginals    P(J) and P(theta) blocks as CSV
//   evolve       time series of P(theta) under a polynomial spectrum
//   metaplectic  Gauss-sum generator for a seeded SL(2,Z_D) element, as JSON
//   symbol       WWM symbol table of the configured Hamiltonian
//
// All floating-point output is printed with 17 significant digits and no
// locale; identical configuration and seed give byte-identical files.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qps/aawigner.hpp"
#include "qps/metaplectic.hpp"
#include "qps/specparse.hpp"
#include "qps/suites.hpp"

namespace {

using qps::linalg::cd;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Output {
    std::string path;  // empty = stdout
    std::ostringstream body;
    int flush() {
        if (path.empty()) {
            std::cout << body.str();
            return 0;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open output file '" << path << "'\n";
            return 2;
        }
        f << body.str();
        return 0;
    }
};

std::string json_suite(const qps::suites::SuiteReport& rep, int indent) {
    const std::string pad(indent, ' ');
    std::ostringstream os;
    os << pad << "{\n";
    os << pad << "  \"suite\": \"" << rep.suite << "\",\n";
    os << pad << "  \"dim\": " << rep.dim << ",\n";
    if (rep.skipped) {
        os << pad << "  \"skipped\": true,\n";
        os << pad << "  \"reason\": \"" << rep.skip_reason << "\",\n";
        os << pad << "  \"checks\": []\n";
        os << pad << "}";
        return os.str();
    }
    os << pad << "  \"pass\": " << (rep.pass() ? "true" : "false") << ",\n";
    os << pad << "  \"checks\": [\n";
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        const auto& ck = rep.checks[i];
        os << pad << "    {\"name\": \"" << ck.name << "\", \"max_residual\": "
           << fmt17(ck.max_residual) << ", \"tol\": " << fmt17(ck.tol)
           << ", \"pass\": " << (ck.pass ? "true" : "false") << "}"
           << (i + 1 < rep.checks.size() ? "," : "") << "\n";
    }
    os << pad << "  ]\n" << pad << "}";
    return os.str();
}

struct CommonOpts {
    int dim = 8;
    uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
    std::string state = "fock:0";
    std::string hamiltonian = "1.0*n";
    int thetas = 0;
    int kappa = 1;
    double tol = 1.0;
    double t0 = 0.0, t1 = 6.283185307179586;
    int steps = 16;
    std::string suite = "all";
    std::string config;
};

void apply_config_file(CommonOpts& o) {
    if (o.config.empty()) return;
    std::ifstream in(o.config);
    if (!in) throw std::runtime_error("cannot open config file '" + o.config + "'");
    nlohmann::json j;
    in >> j;
    // flags win: only fill fields the command line left at defaults is hard to
    // track with CLI11, so the config is applied first by the caller contract:
    // values present here overwrite defaults, then CLI11 reparses flags on top.
    if (j.contains("dim")) o.dim = j["dim"].get<int>();
    if (j.contains("seed")) o.seed = j["seed"].get<uint64_t>();
    if (j.contains("out")) o.out = j["out"].get<std::string>();
    if (j.contains("format")) o.format = j["format"].get<std::string>();
    if (j.contains("state")) o.state = j["state"].get<std::string>();
    if (j.contains("hamiltonian")) o.hamiltonian = j["hamiltonian"].get<std::string>();
    if (j.contains("thetas")) o.thetas = j["thetas"].get<int>();
    if (j.contains("kappa")) o.kappa = j["kappa"].get<int>();
    if (j.contains("tol")) o.tol = j["tol"].get<double>();
    if (j.contains("t0")) o.t0 = j["t0"].get<double>();
    if (j.contains("t1")) o.t1 = j["t1"].get<double>();
    if (j.contains("steps")) o.steps = j["steps"].get<int>();
    if (j.contains("suite")) o.suite = j["suite"].get<std::string>();
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--dim", o.dim, "Hilbert space dimension");
    cmd->add_option("--seed", o.seed, "RNG seed for randomized sweeps");
    cmd->add_option("--out", o.out, "output file (default stdout)");
    cmd->add_option("--format", o.format, "csv|json for table outputs");
    cmd->add_option("--config", o.config, "JSON config mirroring the flags");
}

int run_verify(CommonOpts& o) {
    Output out{o.out, {}};
    std::vector<qps::suites::SuiteReport> reports;
    if (o.suite == "all") {
        reports = qps::suites::run_all(o.dim, o.seed, o.tol, o.kappa);
    } else {
        reports.push_back(qps::suites::run_suite(o.suite, o.dim, o.seed, o.tol, o.kappa));
    }
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass();
    if (reports.size() == 1) {
        out.body << json_suite(reports[0], 0) << "\n";
    } else {
        out.body << "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i)
            out.body << json_suite(reports[i], 2)
                     << (i + 1 < reports.size() ? "," : "") << "\n";
        out.body << "]\n";
    }
    const int rc = out.flush();
    if (rc) return rc;
    return all_pass ? 0 : 1;
}

int run_wigner(CommonOpts& o) {
    const auto psi = qps::parse::parse_state_spec(o.state, o.dim);
    const auto grid = qps::aa::aa_wigner_grid(psi, o.thetas);
    Output out{o.out, {}};
    if (o.format == "json") {
        out.body << "{\"dim\": " << o.dim << ", \"rows\": [\n";
        bool first = true;
        for (std::size_t j = 0; j < grid.j_values.size(); ++j)
            for (std::size_t t = 0; t < grid.theta_values.size(); ++t) {
                if (!first) out.body << ",\n";
                first = false;
                out.body << "  [" << fmt17(grid.j_values[j]) << ", "
                         << fmt17(grid.theta_values[t]) << ", "
                         << fmt17(grid.at(int(j), int(t))) << "]";
            }
        out.body << "\n]}\n";
    } else {
        out.body << "J,theta,W\n";
        for (std::size_t j = 0; j < grid.j_values.size(); ++j)
            for (std::size_t t = 0; t < grid.theta_values.size(); ++t)
                out.body << fmt17(grid.j_values[j]) << ","
                         << fmt17(grid.theta_values[t]) << ","
                         << fmt17(grid.at(int(j), int(t))) << "\n";
    }
    return out.flush();
}

int run_marginals(CommonOpts& o) {
    const auto psi = qps::parse::parse_state_spec(o.state, o.dim);
    const auto grid = qps::aa::aa_wigner_grid(psi, o.thetas);
    const auto m = qps::aa::aa_marginals(psi, grid);
    Output out{o.out, {}};
    out.body << "# P_J\nJ,P\n";
    for (std::size_t j = 0; j < m.p_j.size(); ++j)
        out.body << fmt17(grid.j_values[j]) << "," << fmt17(m.p_j[j]) << "\n";
    out.body << "# P_theta\ntheta,P\n";
    for (std::size_t t = 0; t < m.p_theta.size(); ++t)
        out.body << fmt17(grid.theta_values[t]) << "," << fmt17(m.p_theta[t]) << "\n";
    return out.flush();
}

int run_evolve(CommonOpts& o) {
    const auto psi0 = qps::parse::parse_state_spec(o.state, o.dim);
    const auto h = qps::parse::parse_hamiltonian(o.hamiltonian);
    if (o.steps < 1) throw std::runtime_error("steps must be >= 1");
    Output out{o.out, {}};
    out.body << "t,theta,P_theta\n";
    for (int s = 0; s <= o.steps; ++s) {
        const double t = o.t0 + (o.t1 - o.t0) * s / o.steps;
        const auto psi = qps::aa::evolve(psi0, h, t);
        const auto grid = qps::aa::aa_wigner_grid(psi, o.thetas);
        const auto m = qps::aa::aa_marginals(psi, grid);
        for (std::size_t tt = 0; tt < m.p_theta.size(); ++tt)
            out.body << fmt17(t) << "," << fmt17(grid.theta_values[tt]) << ","
                     << fmt17(m.p_theta[tt]) << "\n";
    }
    return out.flush();
}

int run_metaplectic(CommonOpts& o) {
    qps::suites::SplitMix64 rng(o.seed ^ 0xa02bdbf7bb3c0a7ull);
    // seeded random SL(2,Z_D) element
    qps::modring::SL2Elem r = qps::modring::sl2_identity(o.dim);
    while (true) {
        const int64_t s1 = rng.below(o.dim), t1 = rng.below(o.dim),
                      s2 = rng.below(o.dim);
        try {
            const int64_t t2 = qps::modring::mod_reduce(
                qps::modring::mod_inverse(s1, o.dim) * (1 + t1 * s2), o.dim);
            r = qps::modring::SL2Elem(o.dim, s1, t1, s2, t2);
            break;
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    const auto g = qps::meta::metaplectic_g(r);
    const auto fit = qps::meta::projective_multiplier(r, qps::modring::sl2_inv(r));
    Output out{o.out, {}};
    out.body << "{\n";
    out.body << "  \"dim\": " << o.dim << ",\n";
    out.body << "  \"seed\": " << o.seed << ",\n";
    out.body << "  \"r\": {\"s1\": " << r.s1 << ", \"t1\": " << r.t1
             << ", \"s2\": " << r.s2 << ", \"t2\": " << r.t2 << "},\n";
    out.body << "  \"case\": \"" << qps::meta::case_name(g.case_tag) << "\",\n";
    out.body << "  \"unitarity_error\": " << fmt17(qps::linalg::unitarity_error(g.mat))
             << ",\n";
    out.body << "  \"covariance_error\": " << fmt17(qps::meta::covariance_error(g))
             << ",\n";
    out.body << "  \"wk_covariance_error\": "
             << fmt17(qps::meta::wk_covariance_error(g)) << ",\n";
    out.body << "  \"inverse_pair_residual\": " << fmt17(fit.residual) << ",\n";
    out.body << "  \"matrix\": [\n";
    for (int i = 0; i < g.d; ++i) {
        out.body << "    [";
        for (int j = 0; j < g.d; ++j) {
            const cd z = g.mat.at(i, j);
            out.body << "[" << fmt17(z.real()) << ", " << fmt17(z.imag()) << "]"
                     << (j + 1 < g.d ? ", " : "");
        }
        out.body << "]" << (i + 1 < g.d ? "," : "") << "\n";
    }
    out.body << "  ]\n}\n";
    return out.flush();
}

int run_symbol(CommonOpts& o) {
    const auto h = qps::parse::parse_hamiltonian(o.hamiltonian);
    qps::linalg::CMat hop(o.dim);
    for (int n = 0; n < o.dim; ++n) hop.at(n, n) = cd{h.eval(n), 0.0};
    const int T = o.thetas > 0 ? o.thetas : 8;
    const double two_pi = 6.283185307179586476925287;
    Output out{o.out, {}};
    out.body << "J,theta,re,im\n";
    for (int j2 = 0; j2 < 2 * o.dim; ++j2)
        for (int t = 0; t < T; ++t) {
            const double j = 0.5 * j2;
            const double th = two_pi * t / T;
            const cd v = qps::aa::wwm_symbol_at(hop, j, th);
            out.body << fmt17(j) << "," << fmt17(th) << "," << fmt17(v.real()) << ","
                     << fmt17(v.imag()) << "\n";
        }
    return out.flush();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete quantum phase-space operator toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, o);
    verify->add_option("--suite", o.suite, "suite name or 'all'");
    verify->add_option("--tol", o.tol, "tolerance scale factor (default 1.0)");
    verify->add_option("--kappa", o.kappa, "deformation label for the qosc checks");

    auto* wigner = app.add_subcommand("wigner", "action-angle Wigner table");
    add_common(wigner, o);
    wigner->add_option("--state", o.state, "fock:<n> | split:<n> | phase:<r> | amps:<path>");
    wigner->add_option("--thetas", o.thetas, "theta samples (default 4*dim)");

    auto* marg = app.add_subcommand("marginals", "P(J) and P(theta)");
    add_common(marg, o);
    marg->add_option("--state", o.state, "state specification");
    marg->add_option("--thetas", o.thetas, "theta samples");

    auto* evolve = app.add_subcommand("evolve", "P(theta,t) under H(N)");
    add_common(evolve, o);
    evolve->add_option("--state", o.state, "state specification");
    evolve->add_option("--hamiltonian", o.hamiltonian, "polynomial in n");
    evolve->add_option("--thetas", o.thetas, "theta samples");
    evolve->add_option("--t0", o.t0, "start time");
    evolve->add_option("--t1", o.t1, "end time");
    evolve->add_option("--steps", o.steps, "number of steps");

    auto* metap = app.add_subcommand("metaplectic", "seeded G(R) and residuals");
    add_common(metap, o);

    auto* symbol = app.add_subcommand("symbol", "WWM symbol table of H(N)");
    add_common(symbol, o);
    symbol->add_option("--hamiltonian", o.hamiltonian, "polynomial in n");
    symbol->add_option("--thetas", o.thetas, "theta samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        // config file first, then re-parse so explicit flags win
        if (!o.config.empty()) {
            CommonOpts fresh;
            fresh.config = o.config;
            apply_config_file(fresh);
            const std::string config_path = o.config;
            o = fresh;
            o.config = config_path;
            app.clear();
            app.parse(argc, argv);
        }
        if (o.dim < 2) {
            std::cerr << "error: dimension must be >= 2\n";
            return 2;
        }
        if (verify->parsed()) return run_verify(o);
        if (wigner->parsed()) return run_wigner(o);
        if (marg->parsed()) return run_marginals(o);
        if (evolve->parsed()) return run_evolve(o);
        if (metap->parsed()) {
            if (o.dim % 2 == 0 || !qps::modring::is_prime(o.dim)) {
                std::cerr << "error: dimension must be an odd prime\n";
                return 2;
            }
            return run_metaplectic(o);
        }
        if (symbol->parsed()) return run_symbol(o);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qps::parse::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
