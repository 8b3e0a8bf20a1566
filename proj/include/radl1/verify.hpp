#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "radl1/analysis.hpp"
#include "radl1/closed_form.hpp"
#include "radl1/norms.hpp"
#include "radl1/rearrange.hpp"

namespace radl1 {

struct VerifyOptions {
    int n = 4096;
    double r_max_factor = 1.5;
    double tol_l2 = 1e-6;
    double tol_phi_R = 1e-10;
    double tol_dphi_R = 1e-8;
    double tol_virial = 1e-6;
    double tol_residual = 1e-5;  // residual relative to beta * sqrt(vol(B_R))
    double tol_lemma1 = 1e-6;
};

struct VerifyCheck {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct VerifyReport {
    double beta = 0.0;
    int n = 0;
    std::vector<VerifyCheck> checks;
    bool all_pass = false;
};

/// Runs every quantitative identity for one beta against the given profile
/// (the sampled closed-form minimizer when none is supplied): unit L2 norm,
/// Dirichlet and Neumann boundary values, negative multiplier, virial identity,
/// Helmholtz residual, rearrangement inequality, and Nash-quotient dominance
/// over a Gaussian of comparable width.
inline VerifyReport verify_minimizer(double beta, const VerifyOptions& opts = {},
                                     const RadialProfile* profile = nullptr) {
    const MinimizerParams params = solve_parameters(beta);
    RadialProfile prof = profile
                             ? *profile
                             : sample(params, RadialGrid::uniform(opts.n, opts.r_max_factor * params.R));

    VerifyReport rep;
    rep.beta = beta;
    rep.n = prof.grid.n;

    auto add = [&rep](const std::string& name, double value, double threshold, bool pass) {
        rep.checks.push_back({name, value, threshold, pass});
    };

    const double l2 = l2_norm(prof);
    add("l2_constraint", std::abs(l2 - 1.0), opts.tol_l2, std::abs(l2 - 1.0) <= opts.tol_l2);

    const BoundaryReport b = boundary_report(params);
    add("dirichlet_boundary", std::abs(b.phi_R), opts.tol_phi_R, std::abs(b.phi_R) <= opts.tol_phi_R);
    add("neumann_boundary", std::abs(b.dphi_R), opts.tol_dphi_R, std::abs(b.dphi_R) <= opts.tol_dphi_R);
    add("lambda_negative", params.lambda, 0.0, params.lambda < 0.0);

    const VirialReport vir = virial_check(prof, beta);
    add("virial", vir.relerr, opts.tol_virial, vir.relerr <= opts.tol_virial);

    // scale-free residual: a zero profile would score exactly 1
    const double res = helmholtz_residual(prof, params);
    const double Reff = std::max(params.R - prof.grid.h, 0.5 * params.R);
    const double scale = beta * std::sqrt(four_pi / 3.0 * Reff * Reff * Reff);
    add("helmholtz_residual", res / scale, opts.tol_residual, res / scale <= opts.tol_residual);

    const Lemma1Report lem = check_lemma1(prof, beta);
    double lem_err = (lem.F_after - lem.F_before) / lem.F_before;
    lem_err = std::max(lem_err, std::abs(lem.l1_after / lem.l1_before - 1.0));
    lem_err = std::max(lem_err, std::abs(lem.l2_after / lem.l2_before - 1.0));
    add("rearrangement", lem_err, opts.tol_lemma1, lem_err <= opts.tol_lemma1);

    const auto gauss = RadialProfile::from_function(prof.grid, [&](double r) {
        const double w = 0.5 * params.R;
        return std::exp(-(r / w) * (r / w));
    });
    const double margin = nash_ratio(prof) - nash_ratio(gauss);
    add("nash_dominance", margin, 0.0, margin > 0.0);

    rep.all_pass = true;
    for (const auto& c : rep.checks)
        rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

inline nlohmann::json verify_report_json(const VerifyReport& rep) {
    nlohmann::json j;
    j["beta"] = rep.beta;
    j["n"] = rep.n;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass}});
    j["checks"] = checks;
    j["all_pass"] = rep.all_pass;
    return j;
}

} // namespace radl1
