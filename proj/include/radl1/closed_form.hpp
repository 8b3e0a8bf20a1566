#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "radl1/grid.hpp"
#include "radl1/norms.hpp"
#include "radl1/root_find.hpp"

namespace radl1 {

namespace detail {

/// sin(x)/x with the removable singularity evaluated by series.
inline double sinc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

/// d/dx [sin(x)/x] = (x cos x - sin x) / x^2.
inline double dsinc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return x * (-1.0 / 3.0 + x2 / 30.0);
    }
    return (x * std::cos(x) - std::sin(x)) / (x * x);
}

} // namespace detail

/// Parameters of the explicit minimizer phi(r) = a sin(mu r)/(mu r) + beta/mu^2
/// on [0, R], zero outside. lambda = -mu^2 is the constraint multiplier and
/// t_star = mu R solves tan t = t independently of beta.
struct MinimizerParams {
    double beta = 0.0;
    double a = 0.0;
    double mu = 0.0;
    double R = 0.0;
    double lambda = 0.0;
    double t_star = 0.0;
};

/// Smallest positive root of tan t = t, located in (pi, 3 pi/2). Computed once.
inline double geometry_constant() {
    static const double t = [] {
        const double delta = 0.01;
        return find_root([](double x) { return std::tan(x) - x; },
                         std::numbers::pi + delta, 1.5 * std::numbers::pi - delta, 1e-14);
    }();
    return t;
}

namespace detail {

/// Dimensionless profile shape g(u) = 1 - (t*/sin t*) sinc(u); the minimizer is
/// phi(r) = (beta/mu^2) g(mu r) on its support.
inline double shape(double u, double t_star) {
    return 1.0 - (t_star / std::sin(t_star)) * sinc(u);
}

/// Shape integral S = int_0^{t*} g(u)^2 u^2 du by composite Simpson over 8192
/// intervals. The normalization condition reads ||phi||_2^2 = 4 pi beta^2 S / mu^7.
/// (The antiderivative evaluates to (5/6) t*^3; tests check the quadrature
/// against it, the solver uses only the quadrature path.)
inline double shape_integral() {
    static const double S = [] {
        const double ts = geometry_constant();
        const int m = 8192; // intervals, even
        const double h = ts / m;
        auto f = [ts](double u) {
            const double gu = shape(u, ts);
            return gu * gu * u * u;
        };
        double s = f(0.0) + f(ts);
        for (int i = 1; i < m; ++i)
            s += (i % 2 == 1 ? 4.0 : 2.0) * f(i * h);
        return s * h / 3.0;
    }();
    return S;
}

} // namespace detail

inline double eval_minimizer(const MinimizerParams& p, double r) {
    if (r < 0.0 || !std::isfinite(r))
        throw std::invalid_argument("eval_minimizer: r must be finite and >= 0");
    if (r > p.R)
        return 0.0;
    return p.a * detail::sinc(p.mu * r) + p.beta / (p.mu * p.mu);
}

/// Solves the transcendental system for a given beta. The system reduces
/// analytically: phi'(R) = 0 forces mu R = t*, phi(R) = 0 fixes a, and the
/// unit-L2 condition N(mu) = 4 pi beta^2 S mu^{-7} = 1 is monotone in mu, so
/// mu = (4 pi beta^2 S)^{1/7} in closed form.
inline MinimizerParams solve_parameters(double beta, double tol = 1e-12) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("solve_parameters: beta must be positive");
    if (!(tol > 0.0))
        throw std::invalid_argument("solve_parameters: tol must be positive");

    MinimizerParams p;
    p.beta = beta;
    p.t_star = geometry_constant();
    const double S = detail::shape_integral();
    p.mu = std::pow(four_pi * beta * beta * S, 1.0 / 7.0);
    p.R = p.t_star / p.mu;
    p.a = -beta / (p.mu * p.mu * detail::sinc(p.t_star));
    p.lambda = -p.mu * p.mu;

    // first-zero guarantee: mu R = t* < 3 pi / 2 and phi > 0 inside the support
    if (!(p.t_star < 1.5 * std::numbers::pi))
        throw std::logic_error("solve_parameters: geometry constant out of range");
    if (!(p.a > 0.0))
        throw std::logic_error("solve_parameters: non-positive amplitude");
    for (int i = 1; i < 1024; ++i) {
        const double r = p.R * static_cast<double>(i) / 1024.0;
        if (!(eval_minimizer(p, r) > 0.0))
            throw std::logic_error("solve_parameters: profile not positive inside support");
    }
    const double phiR = p.a * detail::sinc(p.t_star) + beta / (p.mu * p.mu);
    if (std::abs(phiR) > tol * (std::abs(p.a) + beta / (p.mu * p.mu)))
        throw std::logic_error("solve_parameters: phi(R) = 0 violated");
    return p;
}

inline RadialProfile sample(const MinimizerParams& p, const RadialGrid& grid) {
    return RadialProfile::from_function(grid, [&](double r) { return eval_minimizer(p, r); });
}

/// Discrete L2 norm of p'' + (2/r) p' + mu^2 p - beta over 0 < r < R - h,
/// using centered second-order stencils. Vanishes at rate O(h^2) on the
/// sampled minimizer.
inline double helmholtz_residual(const RadialProfile& prof, const MinimizerParams& params) {
    const int n = prof.grid.n;
    if (n < 3)
        throw std::invalid_argument("helmholtz_residual: need at least 3 nodes");
    const double h = prof.grid.h;
    const double mu2 = params.mu * params.mu;
    const auto& r = prof.grid.nodes;
    const auto& v = prof.values;
    double s = 0.0;
    for (int i = 1; i < n - 1; ++i) {
        const double ri = r[static_cast<std::size_t>(i)];
        if (!(ri < params.R - h))
            break;
        const double d2 = (v[static_cast<std::size_t>(i + 1)] - 2.0 * v[static_cast<std::size_t>(i)] +
                           v[static_cast<std::size_t>(i - 1)]) / (h * h);
        const double d1 = (v[static_cast<std::size_t>(i + 1)] - v[static_cast<std::size_t>(i - 1)]) / (2.0 * h);
        const double res = d2 + 2.0 / ri * d1 + mu2 * v[static_cast<std::size_t>(i)] - params.beta;
        s += res * res * ri * ri;
    }
    return std::sqrt(four_pi * s * h);
}

struct BoundaryReport {
    double phi_R = 0.0;
    double dphi_R = 0.0;
    int lambda_sign = 0; // -1, 0, +1
};

/// phi(R) and phi'(R) from the analytic formula plus the sign of lambda.
/// At the true parameters both boundary values vanish to root tolerance.
inline BoundaryReport boundary_report(const MinimizerParams& p) {
    BoundaryReport b;
    b.phi_R = p.a * detail::sinc(p.t_star) + p.beta / (p.mu * p.mu);
    b.dphi_R = p.a * p.mu * detail::dsinc(p.t_star);
    b.lambda_sign = p.lambda < 0.0 ? -1 : (p.lambda > 0.0 ? 1 : 0);
    return b;
}

} // namespace radl1
