// radl1 command line: solve | minimize | verify | scan.
// Exit codes: 0 success, 1 computational failure, 2 usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "radl1/analysis.hpp"
#include "radl1/closed_form.hpp"
#include "radl1/direct_method.hpp"
#include "radl1/grid.hpp"
#include "radl1/profile_io.hpp"
#include "radl1/reports.hpp"
#include "radl1/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonArgs {
    std::string out = ".";
    std::string config;
};

json load_config(const std::string& path) {
    if (path.empty())
        return json::object();
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file " + path);
    json j;
    in >> j;
    if (!j.is_object())
        throw std::invalid_argument("config file must hold a JSON object");
    return j;
}

// command-line flags win; config supplies defaults for flags left unset
template <class T>
void merge(const json& cfg, const CLI::Option* opt, const char* key, T& value) {
    if (opt != nullptr && opt->count() > 0)
        return;
    if (cfg.contains(key))
        value = cfg.at(key).get<T>();
}

fs::path ensure_out_dir(const std::string& out) {
    fs::path dir(out);
    fs::create_directories(dir);
    return dir;
}

std::vector<double> logspace(double lo, double hi, int num) {
    std::vector<double> b(static_cast<std::size_t>(num));
    for (int i = 0; i < num; ++i)
        b[static_cast<std::size_t>(i)] =
            lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(num - 1));
    b.front() = lo;
    b.back() = hi;
    return b;
}

int run_solve(double beta, int n, double r_max, double tol, const std::string& out) {
    if (!(beta > 0.0))
        throw std::invalid_argument("solve: --beta must be positive");
    if (n < 3)
        throw std::invalid_argument("solve: --n must be at least 3");
    const auto params = radl1::solve_parameters(beta, tol);
    const double rmax = r_max > 0.0 ? r_max : 1.5 * params.R;
    if (rmax < params.R)
        std::cerr << "warning: r_max " << rmax << " < support radius " << params.R
                  << "; the profile is truncated\n";
    const auto grid = radl1::RadialGrid::uniform(n, rmax);
    const auto prof = radl1::sample(params, grid);
    const fs::path dir = ensure_out_dir(out);
    radl1::write_json((dir / "report.json").string(), radl1::solve_report_json(params, prof));
    radl1::write_profile_csv((dir / "profile.csv").string(), prof);
    std::cout << "beta=" << beta << " mu=" << params.mu << " R=" << params.R
              << " F=" << radl1::evaluate_functional(prof, beta).total << '\n';
    return 0;
}

int run_minimize(double beta, int n, double r_max, const radl1::SolverOptions& opts,
                 const std::string& out) {
    if (!(beta > 0.0))
        throw std::invalid_argument("minimize: --beta must be positive");
    if (opts.max_iters < 1)
        throw std::invalid_argument("minimize: --max-iters must be at least 1");
    if (n < 4)
        throw std::invalid_argument("minimize: --n must be at least 4");
    double rmax = r_max;
    if (!(rmax > 0.0))
        rmax = 2.0 * radl1::solve_parameters(beta).R;
    const auto grid = radl1::RadialGrid::uniform(n, rmax);
    const auto res = radl1::minimize(beta, grid, opts);
    const fs::path dir = ensure_out_dir(out);
    radl1::write_profile_csv((dir / "profile.csv").string(), res.profile);
    radl1::write_trace_csv((dir / "trace.csv").string(), res.trace);
    radl1::write_json((dir / "energy.json").string(), radl1::energy_json(beta, res.energy, res.trace));
    std::cout << "beta=" << beta << " F=" << res.energy.total << " iters=" << res.trace.iterations
              << (res.trace.converged ? " (converged)" : " (max iterations)") << '\n';
    return 0;
}

int run_verify(double beta, const radl1::VerifyOptions& vopts, const std::string& profile_path,
               const std::string& out) {
    if (!(beta > 0.0))
        throw std::invalid_argument("verify: --beta must be positive");
    radl1::VerifyReport rep;
    if (!profile_path.empty()) {
        const auto prof = radl1::read_profile_csv(profile_path);
        rep = radl1::verify_minimizer(beta, vopts, &prof);
    } else {
        rep = radl1::verify_minimizer(beta, vopts);
    }
    const fs::path dir = ensure_out_dir(out);
    radl1::write_json((dir / "verify.json").string(), radl1::verify_report_json(rep));
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "pass  " : "FAIL  ") << c.name << "  value=" << c.value << '\n';
    return rep.all_pass ? 0 : 1;
}

int run_scan(double beta_min, double beta_max, int num, const std::string& source, int n,
             const radl1::SolverOptions& solver, const std::string& out) {
    if (!(beta_min > 0.0) || !(beta_max > beta_min))
        throw std::invalid_argument("scan: need 0 < --beta-min < --beta-max");
    if (num < 3)
        throw std::invalid_argument("scan: --num must be at least 3");
    radl1::ScanSource src;
    if (source == "closed")
        src = radl1::ScanSource::closed_form;
    else if (source == "direct")
        src = radl1::ScanSource::direct_method;
    else
        throw std::invalid_argument("scan: --source must be `closed` or `direct`");
    radl1::ScanOptions opts;
    opts.n = n > 0 ? n : (src == radl1::ScanSource::closed_form ? 4096 : 1024);
    opts.solver = solver;
    const auto betas = logspace(beta_min, beta_max, num);
    const auto rep = radl1::scaling_scan(betas, src, opts);
    const auto nash = radl1::nash_family(1.0);
    const fs::path dir = ensure_out_dir(out);
    radl1::write_json((dir / "scan.json").string(), radl1::scaling_report_json(rep, &nash));
    std::cout << "exponents: a " << rep.e_a << "  mu " << rep.e_mu << "  R " << rep.e_R << "  F "
              << rep.e_F << "\nmuR spread " << rep.muR_spread << '\n';
    for (const auto& r : rep.records)
        if (!r.ok)
            std::cerr << "beta=" << r.beta << " failed: " << r.error << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained minimization of (1/2)||grad phi||_2^2 + beta ||phi||_1 on the unit "
                 "L2 sphere: closed-form solver, iterative direct method, and identity checks"};
    app.require_subcommand(1);

    CommonArgs common;
    app.add_option("--config", common.config, "JSON file with default values for unset flags");

    // solve
    auto* solve = app.add_subcommand("solve", "closed-form minimizer for one beta");
    double s_beta = 0.0;
    int s_n = 4096;
    double s_rmax = 0.0, s_tol = 1e-12;
    std::string s_out = ".";
    auto* s_beta_opt = solve->add_option("--beta", s_beta, "regularization weight (> 0)");
    auto* s_n_opt = solve->add_option("--n", s_n, "grid nodes");
    auto* s_rmax_opt = solve->add_option("--r-max", s_rmax, "grid extent (default 1.5 R)");
    auto* s_tol_opt = solve->add_option("--tol", s_tol, "parameter tolerance");
    auto* s_out_opt = solve->add_option("--out", s_out, "output directory");

    // minimize
    auto* mini = app.add_subcommand("minimize", "iterative direct method for one beta");
    double m_beta = 0.0, m_rmax = 0.0;
    int m_n = 2048;
    radl1::SolverOptions m_opts;
    std::string m_out = ".";
    auto* m_beta_opt = mini->add_option("--beta", m_beta, "regularization weight (> 0)");
    auto* m_n_opt = mini->add_option("--n", m_n, "grid nodes");
    auto* m_rmax_opt = mini->add_option("--r-max", m_rmax, "grid extent (default 2 R)");
    auto* m_step_opt = mini->add_option("--step", m_opts.step, "gradient step (default 0.4 h^2)");
    auto* m_iters_opt = mini->add_option("--max-iters", m_opts.max_iters, "iteration cap");
    auto* m_tol_opt = mini->add_option("--energy-tol", m_opts.energy_tol, "relative stopping tolerance");
    auto* m_re_opt = mini->add_option("--rearrange-every", m_opts.rearrange_every,
                                      "apply rearrangement every k iterations (0 off)");
    auto* m_seed_opt = mini->add_option("--seed", m_opts.seed, "perturbation seed (0 = plain start)");
    auto* m_rec_opt = mini->add_option("--record-every", m_opts.record_every, "trace cadence (0 auto)");
    auto* m_out_opt = mini->add_option("--out", m_out, "output directory");

    // verify
    auto* verify = app.add_subcommand("verify", "check every identity for one beta");
    double v_beta = 0.0;
    radl1::VerifyOptions v_opts;
    std::string v_profile, v_out = ".";
    auto* v_beta_opt = verify->add_option("--beta", v_beta, "regularization weight (> 0)");
    auto* v_n_opt = verify->add_option("--n", v_opts.n, "grid nodes");
    auto* v_profile_opt = verify->add_option("--profile", v_profile, "profile CSV to check instead of the sampled minimizer");
    auto* v_tl2 = verify->add_option("--tol-l2", v_opts.tol_l2, "unit-norm tolerance");
    auto* v_tphi = verify->add_option("--tol-phi-r", v_opts.tol_phi_R, "Dirichlet boundary tolerance");
    auto* v_tdphi = verify->add_option("--tol-dphi-r", v_opts.tol_dphi_R, "Neumann boundary tolerance");
    auto* v_tvir = verify->add_option("--tol-virial", v_opts.tol_virial, "virial tolerance");
    auto* v_tres = verify->add_option("--tol-residual", v_opts.tol_residual, "scaled residual tolerance");
    auto* v_tlem = verify->add_option("--tol-lemma1", v_opts.tol_lemma1, "rearrangement tolerance");
    auto* v_out_opt = verify->add_option("--out", v_out, "output directory");

    // scan
    auto* scan = app.add_subcommand("scan", "beta sweep with scaling-exponent fits");
    double sc_min = 0.0, sc_max = 0.0;
    int sc_num = 15, sc_n = 0;
    std::string sc_source = "closed", sc_out = ".";
    radl1::SolverOptions sc_solver;
    auto* sc_min_opt = scan->add_option("--beta-min", sc_min, "smallest beta (> 0)");
    auto* sc_max_opt = scan->add_option("--beta-max", sc_max, "largest beta");
    auto* sc_num_opt = scan->add_option("--num", sc_num, "number of betas (>= 3)");
    auto* sc_source_opt = scan->add_option("--source", sc_source, "closed | direct");
    auto* sc_n_opt = scan->add_option("--n", sc_n, "grid nodes (default 4096 closed, 1024 direct)");
    auto* sc_iters_opt = scan->add_option("--max-iters", sc_solver.max_iters, "direct-source iteration cap");
    auto* sc_out_opt = scan->add_option("--out", sc_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const json cfg = load_config(common.config);
        if (solve->parsed()) {
            merge(cfg, s_beta_opt, "beta", s_beta);
            merge(cfg, s_n_opt, "n", s_n);
            merge(cfg, s_rmax_opt, "r_max", s_rmax);
            merge(cfg, s_tol_opt, "tol", s_tol);
            merge(cfg, s_out_opt, "out", s_out);
            return run_solve(s_beta, s_n, s_rmax, s_tol, s_out);
        }
        if (mini->parsed()) {
            merge(cfg, m_beta_opt, "beta", m_beta);
            merge(cfg, m_n_opt, "n", m_n);
            merge(cfg, m_rmax_opt, "r_max", m_rmax);
            merge(cfg, m_step_opt, "step", m_opts.step);
            merge(cfg, m_iters_opt, "max_iters", m_opts.max_iters);
            merge(cfg, m_tol_opt, "energy_tol", m_opts.energy_tol);
            merge(cfg, m_re_opt, "rearrange_every", m_opts.rearrange_every);
            merge(cfg, m_seed_opt, "seed", m_opts.seed);
            merge(cfg, m_rec_opt, "record_every", m_opts.record_every);
            merge(cfg, m_out_opt, "out", m_out);
            return run_minimize(m_beta, m_n, m_rmax, m_opts, m_out);
        }
        if (verify->parsed()) {
            merge(cfg, v_beta_opt, "beta", v_beta);
            merge(cfg, v_n_opt, "n", v_opts.n);
            merge(cfg, v_profile_opt, "profile", v_profile);
            merge(cfg, v_tl2, "tol_l2", v_opts.tol_l2);
            merge(cfg, v_tphi, "tol_phi_r", v_opts.tol_phi_R);
            merge(cfg, v_tdphi, "tol_dphi_r", v_opts.tol_dphi_R);
            merge(cfg, v_tvir, "tol_virial", v_opts.tol_virial);
            merge(cfg, v_tres, "tol_residual", v_opts.tol_residual);
            merge(cfg, v_tlem, "tol_lemma1", v_opts.tol_lemma1);
            merge(cfg, v_out_opt, "out", v_out);
            return run_verify(v_beta, v_opts, v_profile, v_out);
        }
        if (scan->parsed()) {
            merge(cfg, sc_min_opt, "beta_min", sc_min);
            merge(cfg, sc_max_opt, "beta_max", sc_max);
            merge(cfg, sc_num_opt, "num", sc_num);
            merge(cfg, sc_source_opt, "source", sc_source);
            merge(cfg, sc_n_opt, "n", sc_n);
            merge(cfg, sc_iters_opt, "max_iters", sc_solver.max_iters);
            merge(cfg, sc_out_opt, "out", sc_out);
            return run_scan(sc_min, sc_max, sc_num, sc_source, sc_n, sc_solver, sc_out);
        }
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 2;
}
