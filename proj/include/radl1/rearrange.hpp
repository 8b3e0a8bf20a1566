#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "radl1/grid.hpp"
#include "radl1/norms.hpp"

namespace radl1 {

/// Piecewise-constant representation of a profile on node-centered shells,
/// with 3-D Lebesgue volumes. Shells with equal adjacent values are merged,
/// so a constant profile reduces to a single shell.
struct ShellDecomposition {
    std::vector<double> boundaries; // m + 1 radii, 0 = s_0 < ... < s_m
    std::vector<double> values;     // one value per shell
    std::vector<double> volumes;    // (4 pi / 3)(s_{k+1}^3 - s_k^3)

    std::size_t shell_count() const { return values.size(); }

    double total_volume() const {
        return std::accumulate(volumes.begin(), volumes.end(), 0.0);
    }
};

namespace detail {

/// Node-centered cell boundaries: [0, r_1 - h/2, ..., r_{n-1} - h/2, r_max].
/// Each interior node sits at the midpoint of its cell.
inline std::vector<double> dual_boundaries(const RadialGrid& g) {
    std::vector<double> b(static_cast<std::size_t>(g.n) + 1);
    b.front() = 0.0;
    for (int k = 1; k < g.n; ++k)
        b[static_cast<std::size_t>(k)] = g.nodes[static_cast<std::size_t>(k)] - 0.5 * g.h;
    b.back() = g.r_max;
    return b;
}

inline double ball_volume(double r) { return four_pi / 3.0 * r * r * r; }

} // namespace detail

inline ShellDecomposition to_shells(const RadialProfile& p) {
    const auto b = detail::dual_boundaries(p.grid);
    ShellDecomposition d;
    d.boundaries.push_back(0.0);
    for (int k = 0; k < p.grid.n; ++k) {
        const double v = p.values[static_cast<std::size_t>(k)];
        const double vol = detail::ball_volume(b[static_cast<std::size_t>(k) + 1]) -
                           detail::ball_volume(b[static_cast<std::size_t>(k)]);
        if (!d.values.empty() && v == d.values.back()) {
            d.volumes.back() += vol;
            d.boundaries.back() = b[static_cast<std::size_t>(k) + 1];
        } else {
            d.values.push_back(v);
            d.volumes.push_back(vol);
            d.boundaries.push_back(b[static_cast<std::size_t>(k) + 1]);
        }
    }
    return d;
}

/// Volume of the superlevel set {|shell value| > t} in the decomposition.
inline double volume_above(const ShellDecomposition& d, double t) {
    double s = 0.0;
    for (std::size_t k = 0; k < d.values.size(); ++k)
        if (std::abs(d.values[k]) > t)
            s += d.volumes[k];
    return s;
}

/// Symmetric decreasing rearrangement of |p| with respect to 3-D Lebesgue
/// measure: shells of the node-centered decomposition are reordered by value,
/// descending, outward from the origin with their volumes preserved, then the
/// result is resampled onto the grid by volume averaging over each cell.
///
/// All bookkeeping runs on cumulative volumes, never on radii, so an already
/// non-increasing nonnegative profile is an exact fixed point and the map is
/// exactly idempotent.
inline RadialProfile rearrange(const RadialProfile& p) {
    const int n = p.grid.n;
    RadialProfile absd = p;
    for (auto& v : absd.values)
        v = std::abs(v);
    const ShellDecomposition d = to_shells(absd);
    const std::size_t m = d.shell_count();

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d.values[a] > d.values[b]; });

    // destination cells, as volume capacities
    const auto db = detail::dual_boundaries(p.grid);
    std::vector<double> cellvol(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        cellvol[static_cast<std::size_t>(j)] = detail::ball_volume(db[static_cast<std::size_t>(j) + 1]) -
                                               detail::ball_volume(db[static_cast<std::size_t>(j)]);

    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    std::size_t k = 0;                       // index into sorted shells
    double shell_left = m > 0 ? d.volumes[order[0]] : 0.0;
    for (int j = 0; j < n; ++j) {
        double cell_left = cellvol[static_cast<std::size_t>(j)];
        double acc = 0.0;
        int segments = 0;
        double first_value = 0.0;
        while (cell_left > 0.0 && k < m) {
            const double take = std::min(cell_left, shell_left);
            if (segments == 0)
                first_value = d.values[order[k]];
            ++segments;
            acc += d.values[order[k]] * take;
            cell_left -= take;
            shell_left -= take;
            if (shell_left <= 0.0) {
                ++k;
                if (k < m)
                    shell_left = d.volumes[order[k]];
            }
        }
        // a cell covered by one shell takes its value verbatim; averaging only
        // where shells genuinely split a cell keeps fixed points bit-exact
        out[static_cast<std::size_t>(j)] = (segments == 1 && cell_left == 0.0)
                                               ? first_value
                                               : acc / cellvol[static_cast<std::size_t>(j)];
    }
    // averaged cells can wobble by an ulp; the true sequence is non-increasing
    for (int j = 1; j < n; ++j)
        if (out[static_cast<std::size_t>(j)] > out[static_cast<std::size_t>(j - 1)])
            out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j - 1)];
    return RadialProfile(p.grid, std::move(out));
}

struct Lemma1Report {
    double F_before = 0.0, F_after = 0.0;
    double l1_before = 0.0, l1_after = 0.0;
    double l2_before = 0.0, l2_after = 0.0;
    double kinetic_before = 0.0, kinetic_after = 0.0;
};

/// Evaluates both sides of the rearrangement inequality; assertions are left
/// to the caller.
inline Lemma1Report check_lemma1(const RadialProfile& p, double beta) {
    if (!(beta > 0.0))
        throw std::invalid_argument("check_lemma1: beta must be positive");
    const RadialProfile star = rearrange(p);
    Lemma1Report rep;
    rep.kinetic_before = kinetic_energy(p);
    rep.kinetic_after = kinetic_energy(star);
    rep.l1_before = l1_norm(p);
    rep.l1_after = l1_norm(star);
    rep.l2_before = l2_norm(p);
    rep.l2_after = l2_norm(star);
    rep.F_before = rep.kinetic_before + beta * rep.l1_before;
    rep.F_after = rep.kinetic_after + beta * rep.l1_after;
    return rep;
}

} // namespace radl1
