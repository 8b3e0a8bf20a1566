#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "radl1/grid.hpp"
#include "radl1/norms.hpp"
#include "radl1/rearrange.hpp"

namespace radl1 {

/// Discrete negative radial Laplacian -(p'' + (2/r) p'), the L2(r^2 dr)
/// gradient of kinetic_energy. The r = 0 limit is -3 p''(0); one-sided
/// second-order stencils at both ends.
inline RadialProfile smooth_gradient(const RadialProfile& p) {
    const int n = p.grid.n;
    if (n < 4)
        throw std::invalid_argument("smooth_gradient: need at least 4 nodes");
    const double h = p.grid.h;
    const double h2 = h * h;
    const auto& r = p.grid.nodes;
    const auto& v = p.values;
    std::vector<double> g(static_cast<std::size_t>(n));
    g[0] = -3.0 * (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / h2;
    for (int i = 1; i < n - 1; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double d2 = (v[k + 1] - 2.0 * v[k] + v[k - 1]) / h2;
        const double d1 = (v[k + 1] - v[k - 1]) / (2.0 * h);
        g[k] = -(d2 + 2.0 / r[k] * d1);
    }
    {
        const auto k = static_cast<std::size_t>(n - 1);
        const double d2 = (2.0 * v[k] - 5.0 * v[k - 1] + 4.0 * v[k - 2] - v[k - 3]) / h2;
        const double d1 = (3.0 * v[k] - 4.0 * v[k - 1] + v[k - 2]) / (2.0 * h);
        g[k] = -(d2 + 2.0 / r[k] * d1);
    }
    return RadialProfile(p.grid, std::move(g));
}

/// Value-wise shrinkage max(p - threshold, 0); the proximal map of
/// threshold * ||.||_1 restricted to the nonnegative cone.
inline RadialProfile prox_l1(const RadialProfile& p, double threshold) {
    if (threshold < 0.0 || !std::isfinite(threshold))
        throw std::invalid_argument("prox_l1: threshold must be finite and >= 0");
    RadialProfile out = p;
    for (auto& x : out.values)
        x = x > threshold ? x - threshold : 0.0;
    return out;
}

inline RadialProfile project_sphere(const RadialProfile& p) {
    const double nrm = l2_norm(p);
    if (!(nrm > 0.0))
        throw std::invalid_argument("project_sphere: degenerate input with zero L2 norm");
    RadialProfile out = p;
    for (auto& x : out.values)
        x /= nrm;
    return out;
}

struct SolverOptions {
    double step = 0.0;          // gradient step tau; 0 selects 0.4 h^2
    long max_iters = 2'000'000;
    double energy_tol = 1e-10;  // relative decrease between records that stops the run
    long rearrange_every = 0;   // 0 disables interleaved rearrangement
    std::uint64_t seed = 0;     // 0: plain Gaussian start; else seeded smooth perturbation
    long record_every = 0;      // trace cadence; 0 selects max(1, max_iters / 10000)
};

struct TraceRecord {
    long iter = 0;
    EnergyBreakdown energy;
    double l2_err = 0.0;   // | ||phi||_2 - 1 |
    double tail_mass = 0.0; // ||phi 1_{r > 0.9 r_max}||_1, tightness diagnostic
};

struct SolverTrace {
    std::vector<TraceRecord> records;
    long iterations = 0;
    long best_iter = 0;
    bool converged = false;           // stopped by energy_tol rather than max_iters
    long monotonicity_violations = 0; // recorded energy increases beyond 1e-12 relative
};

struct MinimizeResult {
    RadialProfile profile;
    EnergyBreakdown energy;
    SolverTrace trace;
};

namespace detail {

inline double tail_l1(const RadialGrid& g, const std::vector<double>& v) {
    const double cut = 0.9 * g.r_max;
    double s = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double r = g.nodes[static_cast<std::size_t>(i)];
        if (r > cut) {
            const double w = (i == g.n - 1) ? 0.5 : 1.0;
            s += w * std::abs(v[static_cast<std::size_t>(i)]) * r * r;
        }
    }
    return four_pi * s * g.h;
}

inline std::vector<double> gaussian_start(const RadialGrid& g, std::uint64_t seed) {
    std::vector<double> v(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) {
        const double r = g.nodes[static_cast<std::size_t>(i)];
        v[static_cast<std::size_t>(i)] = std::exp(-r * r);
    }
    if (seed != 0) {
        // smooth multiplicative bumps keep the start positive and generic
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (int b = 0; b < 3; ++b) {
            const double c = uni(rng) * g.r_max;
            const double w = (0.05 + 0.2 * uni(rng)) * g.r_max;
            const double amp = 0.05 * (2.0 * uni(rng) - 1.0);
            for (int i = 0; i < g.n; ++i) {
                const double r = g.nodes[static_cast<std::size_t>(i)];
                const double z = (r - c) / w;
                v[static_cast<std::size_t>(i)] *= 1.0 + amp * std::exp(-z * z);
            }
        }
    }
    return v;
}

} // namespace detail

/// Projected proximal gradient descent for F_beta on the unit L2 sphere:
///   phi <- project_sphere(prox_l1(phi - tau * smooth_gradient(phi), tau beta))
/// restricted to phi >= 0, with optional interleaved rearrangement. Stops when
/// the relative energy decrease between consecutive trace records falls below
/// energy_tol, and returns the best-energy iterate seen.
///
/// Two boundary rows differ from the smooth_gradient stencil for stability of
/// the explicit step: the origin node follows the even-symmetry regularity
/// condition phi'(0) = 0 (quadratic extrapolation from its neighbors), and the
/// outermost node carries no gradient term, only the shrinkage; both sit
/// outside the support of any valid run.
inline MinimizeResult minimize(double beta, const RadialGrid& grid, const SolverOptions& opts,
                               const RadialProfile* initial = nullptr) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("minimize: beta must be positive");
    if (opts.max_iters < 1)
        throw std::invalid_argument("minimize: max_iters must be >= 1");
    if (!(opts.energy_tol > 0.0))
        throw std::invalid_argument("minimize: energy_tol must be positive");
    if (opts.step < 0.0)
        throw std::invalid_argument("minimize: step must be >= 0");
    if (grid.n < 4)
        throw std::invalid_argument("minimize: need at least 4 nodes");

    const int n = grid.n;
    const double h = grid.h;
    const double tau = opts.step > 0.0 ? opts.step : 0.4 * h * h;
    const double thr = tau * beta;
    const long record_every = opts.record_every > 0
                                  ? opts.record_every
                                  : std::max<long>(1, opts.max_iters / 10000);

    std::vector<double> v;
    if (initial) {
        if (!(initial->grid == grid))
            throw std::invalid_argument("minimize: initial profile grid mismatch");
        v = initial->values;
    } else {
        v = detail::gaussian_start(grid, opts.seed);
    }

    const double inv_h2 = 1.0 / (h * h);
    std::vector<double> inv_hr(static_cast<std::size_t>(n), 0.0);
    for (int i = 1; i < n; ++i)
        inv_hr[static_cast<std::size_t>(i)] = 1.0 / (h * grid.nodes[static_cast<std::size_t>(i)]);

    auto normalize = [&](std::vector<double>& w) {
        double s = 0.0;
        for (int i = 1; i < n; ++i) {
            const double wt = (i == n - 1) ? 0.5 : 1.0;
            const double r = grid.nodes[static_cast<std::size_t>(i)];
            s += wt * w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)] * r * r;
        }
        const double nrm = std::sqrt(four_pi * s * h);
        if (!std::isfinite(nrm))
            throw std::runtime_error("minimize: diverged (non-finite norm); reduce the step size");
        if (!(nrm > 0.0))
            throw std::runtime_error("minimize: profile vanished after shrinkage (degenerate threshold); "
                                     "reduce the step size or beta");
        const double inv = 1.0 / nrm;
        for (auto& x : w)
            x *= inv;
        return nrm;
    };

    normalize(v);

    SolverTrace trace;
    std::vector<double> best = v;
    double best_energy = std::numeric_limits<double>::infinity();
    double prev_recorded = std::numeric_limits<double>::infinity();

    auto record = [&](long iter) {
        const RadialProfile cur(grid, v); // validates finiteness as a side effect
        EnergyBreakdown e = evaluate_functional(cur, beta);
        if (!std::isfinite(e.total))
            throw std::runtime_error("minimize: diverged (non-finite energy); reduce the step size");
        TraceRecord rec;
        rec.iter = iter;
        rec.energy = e;
        rec.l2_err = std::abs(e.l2 - 1.0);
        rec.tail_mass = detail::tail_l1(grid, v);
        if (!trace.records.empty() &&
            e.total > trace.records.back().energy.total * (1.0 + 1e-12))
            ++trace.monotonicity_violations;
        trace.records.push_back(rec);
        if (e.total < best_energy) {
            best_energy = e.total;
            best = v;
            trace.best_iter = iter;
        }
        return e.total;
    };

    record(0);
    prev_recorded = best_energy;

    long it = 0;
    while (it < opts.max_iters) {
        // one explicit step, fused: gradient + shrinkage + norm accumulation
        double vm = v[0];
        double vi = v[1];
        double s = 0.0;
        for (int i = 1; i < n - 1; ++i) {
            const auto k = static_cast<std::size_t>(i);
            const double vp = v[k + 1];
            const double lap = (vp - 2.0 * vi + vm) * inv_h2 + (vp - vm) * inv_hr[k];
            double x = vi + tau * lap - thr;
            x = x > 0.0 ? x : 0.0;
            v[k] = x;
            const double r = grid.nodes[k];
            s += x * x * r * r;
            vm = vi;
            vi = vp;
        }
        {
            const auto k = static_cast<std::size_t>(n - 1);
            double x = v[k] - thr;
            x = x > 0.0 ? x : 0.0;
            v[k] = x;
            s += 0.5 * x * x * grid.r_max * grid.r_max;
        }
        {
            double x = (4.0 * v[1] - v[2]) / 3.0;
            v[0] = x > 0.0 ? x : 0.0; // node 0 has zero measure in every norm
        }
        const double nrm = std::sqrt(four_pi * s * h);
        if (!std::isfinite(nrm))
            throw std::runtime_error("minimize: diverged (non-finite norm); reduce the step size");
        if (!(nrm > 0.0))
            throw std::runtime_error("minimize: profile vanished after shrinkage (degenerate threshold); "
                                     "reduce the step size or beta");
        const double inv = 1.0 / nrm;
        for (auto& x : v)
            x *= inv;
        ++it;

        if (opts.rearrange_every > 0 && it % opts.rearrange_every == 0) {
            RadialProfile star = rearrange(RadialProfile(grid, v));
            v = std::move(star.values);
            normalize(v);
        }

        if (it % record_every == 0 || it == opts.max_iters) {
            const double e = record(it);
            if (prev_recorded - e < opts.energy_tol * std::abs(e) && std::isfinite(prev_recorded)) {
                trace.converged = true;
                break;
            }
            prev_recorded = e;
        }
    }
    trace.iterations = it;

    RadialProfile out(grid, std::move(best));
    MinimizeResult res{out, evaluate_functional(out, beta), std::move(trace)};
    return res;
}

} // namespace radl1
