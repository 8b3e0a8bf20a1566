#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "radl1/grid.hpp"

namespace radl1 {

inline constexpr double four_pi = 4.0 * std::numbers::pi;

/// Composite trapezoid rule for node-sampled integrands on the grid.
/// Exact for integrands linear in r.
inline double integrate(const RadialGrid& g, const std::vector<double>& f) {
    if (f.size() != static_cast<std::size_t>(g.n))
        throw std::invalid_argument("integrate: integrand length mismatch");
    double s = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i)
        s += f[i];
    return s * g.h;
}

/// Centered finite differences, one-sided second-order stencils at both ends.
inline std::vector<double> radial_derivative(const RadialProfile& p) {
    const int n = p.grid.n;
    if (n < 3)
        throw std::invalid_argument("radial_derivative: need at least 3 nodes");
    const double h = p.grid.h;
    const auto& v = p.values;
    std::vector<double> d(static_cast<std::size_t>(n));
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    for (int i = 1; i < n - 1; ++i)
        d[static_cast<std::size_t>(i)] = (v[static_cast<std::size_t>(i + 1)] - v[static_cast<std::size_t>(i - 1)]) / (2.0 * h);
    d[static_cast<std::size_t>(n - 1)] =
        (3.0 * v[static_cast<std::size_t>(n - 1)] - 4.0 * v[static_cast<std::size_t>(n - 2)] + v[static_cast<std::size_t>(n - 3)]) / (2.0 * h);
    return d;
}

/// ||phi||_2 = sqrt(4 pi int phi^2 r^2 dr).
inline double l2_norm(const RadialProfile& p) {
    double s = 0.0;
    const auto& r = p.grid.nodes;
    const auto& v = p.values;
    const std::size_t n = v.size();
    // trapezoid with the r^2 weight folded into the integrand; endpoints half-weighted
    s += 0.5 * v[0] * v[0] * r[0] * r[0];
    for (std::size_t i = 1; i + 1 < n; ++i)
        s += v[i] * v[i] * r[i] * r[i];
    s += 0.5 * v[n - 1] * v[n - 1] * r[n - 1] * r[n - 1];
    return std::sqrt(four_pi * s * p.grid.h);
}

/// ||phi||_1 = 4 pi int |phi| r^2 dr.
inline double l1_norm(const RadialProfile& p) {
    double s = 0.0;
    const auto& r = p.grid.nodes;
    const auto& v = p.values;
    const std::size_t n = v.size();
    s += 0.5 * std::abs(v[0]) * r[0] * r[0];
    for (std::size_t i = 1; i + 1 < n; ++i)
        s += std::abs(v[i]) * r[i] * r[i];
    s += 0.5 * std::abs(v[n - 1]) * r[n - 1] * r[n - 1];
    return four_pi * s * p.grid.h;
}

/// Weighted inner product <f, g> = 4 pi int f g r^2 dr on a shared grid.
inline double l2_inner(const RadialProfile& a, const RadialProfile& b) {
    if (!(a.grid == b.grid))
        throw std::invalid_argument("l2_inner: grids differ");
    double s = 0.0;
    const auto& r = a.grid.nodes;
    const std::size_t n = a.values.size();
    s += 0.5 * a.values[0] * b.values[0] * r[0] * r[0];
    for (std::size_t i = 1; i + 1 < n; ++i)
        s += a.values[i] * b.values[i] * r[i] * r[i];
    s += 0.5 * a.values[n - 1] * b.values[n - 1] * r[n - 1] * r[n - 1];
    return four_pi * s * a.grid.h;
}

/// (1/2) ||grad phi||_2^2 with the derivative taken by finite differences.
inline double kinetic_energy(const RadialProfile& p) {
    const auto d = radial_derivative(p);
    double s = 0.0;
    const auto& r = p.grid.nodes;
    const std::size_t n = d.size();
    s += 0.5 * d[0] * d[0] * r[0] * r[0];
    for (std::size_t i = 1; i + 1 < n; ++i)
        s += d[i] * d[i] * r[i] * r[i];
    s += 0.5 * d[n - 1] * d[n - 1] * r[n - 1] * r[n - 1];
    return 0.5 * four_pi * s * p.grid.h;
}

/// All norms of one profile plus the functional value at a given beta.
/// Identities maintained by construction:
///   total = kinetic + beta * l1
///   h1^2 = l2^2 + 2 * kinetic
///   composite^2 = h1^2 + l1^2
struct EnergyBreakdown {
    double kinetic = 0.0;
    double l1 = 0.0;
    double l2 = 0.0;
    double h1 = 0.0;
    double composite = 0.0;
    double beta = 0.0;
    double total = 0.0;
};

inline EnergyBreakdown evaluate_functional(const RadialProfile& p, double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("evaluate_functional: beta must be positive");
    EnergyBreakdown e;
    e.beta = beta;
    e.kinetic = kinetic_energy(p);
    e.l1 = l1_norm(p);
    e.l2 = l2_norm(p);
    e.h1 = std::sqrt(e.l2 * e.l2 + 2.0 * e.kinetic);
    e.composite = std::sqrt(e.h1 * e.h1 + e.l1 * e.l1);
    e.total = e.kinetic + beta * e.l1;
    return e;
}

} // namespace radl1
