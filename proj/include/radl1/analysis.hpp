#pragma once

#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "radl1/closed_form.hpp"
#include "radl1/direct_method.hpp"
#include "radl1/grid.hpp"
#include "radl1/norms.hpp"
#include "radl1/rearrange.hpp"

namespace radl1 {

struct VirialReport {
    double lhs = 0.0;    // ||grad phi||_2^2 = 2 * kinetic
    double rhs = 0.0;    // (3/2) beta ||phi||_1
    double relerr = 0.0;
};

/// The dilation identity ||grad phi||_2^2 = (3/2) beta ||phi||_1; it holds at
/// minimizers only.
inline VirialReport virial_check(const RadialProfile& p, double beta) {
    if (!(beta > 0.0))
        throw std::invalid_argument("virial_check: beta must be positive");
    VirialReport v;
    v.lhs = 2.0 * kinetic_energy(p);
    v.rhs = 1.5 * beta * l1_norm(p);
    v.relerr = std::abs(v.lhs - v.rhs) / std::max(v.lhs, v.rhs);
    return v;
}

/// L2-unitary dilation phi_nu(x) = nu^{-3/2} phi(x / nu), realized exactly on
/// the dilated grid (r_max * nu, same node count) so no interpolation occurs.
inline RadialProfile rescale_unitary(const RadialProfile& p, double nu) {
    if (!(nu > 0.0) || !std::isfinite(nu))
        throw std::invalid_argument("rescale_unitary: nu must be positive");
    RadialGrid g = RadialGrid::uniform(p.grid.n, p.grid.r_max * nu);
    const double amp = std::pow(nu, -1.5);
    std::vector<double> v(p.values.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = amp * p.values[i];
    return RadialProfile(std::move(g), std::move(v));
}

/// Nash quotient ||phi||_2^{10/3} / (||grad phi||_2^2 ||phi||_1^{4/3}); the
/// sharp constant C_3 is its supremum, attained by the minimizer.
inline double nash_ratio(const RadialProfile& p) {
    const double l2 = l2_norm(p);
    if (!(l2 > 0.0))
        throw std::invalid_argument("nash_ratio: zero profile");
    const double kin = kinetic_energy(p);
    if (!(kin > 0.0))
        throw std::invalid_argument("nash_ratio: degenerate profile with zero gradient");
    const double l1 = l1_norm(p);
    return std::pow(l2, 10.0 / 3.0) / ((2.0 * kin) * std::pow(l1, 4.0 / 3.0));
}

enum class ScanSource { closed_form, direct_method };

struct ScanOptions {
    int n = 4096;
    double r_max_factor = 1.5;      // grid extent as a multiple of the support radius
    double support_threshold = 1e-6; // relative cutoff locating the support edge
    SolverOptions solver;            // direct_method source only
};

struct ScalingRecord {
    double beta = 0.0;
    double a = 0.0;
    double mu = 0.0;
    double R = 0.0;
    double F = 0.0;
    bool ok = false;
    std::string error;
};

struct ScalingReport {
    std::vector<double> betas;
    std::vector<ScalingRecord> records;
    double e_a = 0.0, e_mu = 0.0, e_R = 0.0, e_F = 0.0;       // log-log slopes
    double a1 = 0.0, mu1 = 0.0, R1 = 0.0, F1 = 0.0;           // fitted values at beta = 1
    double res_a = 0.0, res_mu = 0.0, res_R = 0.0, res_F = 0.0; // rms fit residuals
    double muR_mean = 0.0;
    double muR_spread = 0.0; // max - min of mu_beta * R_beta over the scan
};

namespace detail {

struct LogFit {
    double slope = 0.0, value_at_one = 0.0, rms = 0.0;
};

inline LogFit fit_loglog(const std::vector<double>& beta, const std::vector<double>& y) {
    const std::size_t m = beta.size();
    double sx = 0.0, sy = 0.0;
    std::vector<double> lx(m), ly(m);
    for (std::size_t i = 0; i < m; ++i) {
        lx[i] = std::log(beta[i]);
        ly[i] = std::log(y[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / static_cast<double>(m);
    const double my = sy / static_cast<double>(m);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    LogFit f;
    f.slope = num / den;
    const double intercept = my - f.slope * mx;
    f.value_at_one = std::exp(intercept);
    double ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double e = ly[i] - (intercept + f.slope * lx[i]);
        ss += e * e;
    }
    f.rms = std::sqrt(ss / static_cast<double>(m));
    return f;
}

inline double support_radius(const RadialProfile& p, double rel_threshold) {
    double mx = 0.0;
    for (double v : p.values)
        mx = std::max(mx, std::abs(v));
    double R = 0.0;
    for (int i = 0; i < p.grid.n; ++i)
        if (std::abs(p.values[static_cast<std::size_t>(i)]) > rel_threshold * mx)
            R = p.grid.nodes[static_cast<std::size_t>(i)];
    return R;
}

inline ScalingRecord scan_one(double beta, ScanSource source, const ScanOptions& opts) {
    ScalingRecord rec;
    rec.beta = beta;
    try {
        const MinimizerParams params = solve_parameters(beta);
        const RadialGrid grid = RadialGrid::uniform(opts.n, opts.r_max_factor * params.R);
        if (source == ScanSource::closed_form) {
            const RadialProfile prof = sample(params, grid);
            rec.a = params.a;
            rec.mu = params.mu;
            rec.R = params.R;
            rec.F = evaluate_functional(prof, beta).total;
        } else {
            const MinimizeResult res = minimize(beta, grid, opts.solver);
            rec.F = res.energy.total;
            rec.R = support_radius(res.profile, opts.support_threshold);
            rec.mu = geometry_constant() / rec.R;
            rec.a = res.profile.values.front() - beta / (rec.mu * rec.mu);
        }
        rec.ok = true;
    } catch (const std::exception& ex) {
        rec.ok = false;
        rec.error = ex.what();
    }
    return rec;
}

} // namespace detail

/// Per-beta minimizer parameters and energies plus least-squares exponents on
/// log-log data. Requires at least 3 betas, strictly increasing, spanning a
/// decade. Individual solver failures are flagged in their records and left
/// out of the fits.
inline ScalingReport scaling_scan(const std::vector<double>& betas, ScanSource source,
                                  const ScanOptions& opts = {}) {
    if (betas.size() < 3)
        throw std::invalid_argument("scaling_scan: need at least 3 betas");
    for (std::size_t i = 0; i < betas.size(); ++i) {
        if (!(betas[i] > 0.0))
            throw std::invalid_argument("scaling_scan: betas must be positive");
        if (i > 0 && !(betas[i] > betas[i - 1]))
            throw std::invalid_argument("scaling_scan: betas must be strictly increasing");
    }
    if (!(betas.back() >= 10.0 * betas.front()))
        throw std::invalid_argument("scaling_scan: betas must span at least one decade");

    ScalingReport rep;
    rep.betas = betas;
    rep.records.resize(betas.size());

    std::vector<std::future<ScalingRecord>> jobs;
    jobs.reserve(betas.size());
    for (double b : betas)
        jobs.push_back(std::async(std::launch::async, detail::scan_one, b, source, opts));
    for (std::size_t i = 0; i < jobs.size(); ++i)
        rep.records[i] = jobs[i].get();

    std::vector<double> bs, as, mus, Rs, Fs;
    for (const auto& r : rep.records) {
        if (!r.ok)
            continue;
        bs.push_back(r.beta);
        as.push_back(r.a);
        mus.push_back(r.mu);
        Rs.push_back(r.R);
        Fs.push_back(r.F);
    }
    if (bs.size() < 3)
        throw std::runtime_error("scaling_scan: fewer than 3 betas succeeded");

    const auto fa = detail::fit_loglog(bs, as);
    const auto fm = detail::fit_loglog(bs, mus);
    const auto fR = detail::fit_loglog(bs, Rs);
    const auto fF = detail::fit_loglog(bs, Fs);
    rep.e_a = fa.slope;
    rep.a1 = fa.value_at_one;
    rep.res_a = fa.rms;
    rep.e_mu = fm.slope;
    rep.mu1 = fm.value_at_one;
    rep.res_mu = fm.rms;
    rep.e_R = fR.slope;
    rep.R1 = fR.value_at_one;
    rep.res_R = fR.rms;
    rep.e_F = fF.slope;
    rep.F1 = fF.value_at_one;
    rep.res_F = fF.rms;

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0.0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        const double mr = mus[i] * Rs[i];
        lo = std::min(lo, mr);
        hi = std::max(hi, mr);
        sum += mr;
    }
    rep.muR_mean = sum / static_cast<double>(bs.size());
    rep.muR_spread = hi - lo;
    return rep;
}

struct NashFamilyEntry {
    std::string name;
    double ratio = 0.0;
};

struct NashFamilyReport {
    double C3_estimate = 0.0; // the minimizer's quotient
    std::vector<NashFamilyEntry> family;
};

namespace detail {

inline RadialProfile random_bumps(const RadialGrid& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const int nb = 2 + static_cast<int>(uni(rng) * 3.0);
    std::vector<double> cs(static_cast<std::size_t>(nb)), ws(static_cast<std::size_t>(nb)),
        amps(static_cast<std::size_t>(nb));
    for (int b = 0; b < nb; ++b) {
        cs[static_cast<std::size_t>(b)] = 0.7 * uni(rng) * g.r_max;
        ws[static_cast<std::size_t>(b)] = (0.08 + 0.22 * uni(rng)) * g.r_max;
        amps[static_cast<std::size_t>(b)] = 2.0 * uni(rng) - 1.0;
    }
    const double cut = 0.85 * g.r_max;
    return RadialProfile::from_function(g, [&](double r) {
        double v = 0.0;
        for (int b = 0; b < nb; ++b) {
            const double z = (r - cs[static_cast<std::size_t>(b)]) / ws[static_cast<std::size_t>(b)];
            v += amps[static_cast<std::size_t>(b)] * std::exp(-z * z);
        }
        const double w = r < cut ? (1.0 - (r / cut) * (r / cut)) : 0.0;
        return v * w * w;
    });
}

} // namespace detail

/// Nash quotients over the documented test family: the closed-form minimizer,
/// Gaussians of two widths, truncated quadratic bumps, and seeded random
/// profiles after rearrangement.
inline NashFamilyReport nash_family(double beta, int n = 4096) {
    const MinimizerParams params = solve_parameters(beta);
    const RadialGrid grid = RadialGrid::uniform(n, 2.5 * params.R);
    NashFamilyReport rep;

    const RadialProfile minimizer = sample(params, grid);
    rep.C3_estimate = nash_ratio(minimizer);
    rep.family.push_back({"minimizer", rep.C3_estimate});

    for (double w : {0.5 * params.R, params.R}) {
        const auto g = RadialProfile::from_function(grid, [&](double r) {
            return std::exp(-(r / w) * (r / w));
        });
        rep.family.push_back({"gaussian_w" + std::to_string(w), nash_ratio(g)});
    }
    for (double s : {0.6 * params.R, 1.2 * params.R}) {
        const auto q = RadialProfile::from_function(grid, [&](double r) {
            const double y = 1.0 - (r / s) * (r / s);
            return y > 0.0 ? y : 0.0;
        });
        rep.family.push_back({"quadratic_s" + std::to_string(s), nash_ratio(q)});
    }
    for (std::uint64_t seed : {11u, 23u, 101u}) {
        const RadialProfile rnd = rearrange(detail::random_bumps(grid, seed));
        rep.family.push_back({"rearranged_seed" + std::to_string(seed), nash_ratio(rnd)});
    }
    return rep;
}

} // namespace radl1
