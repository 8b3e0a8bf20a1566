#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radl1 {

/// Uniform radial grid on [0, r_max]: nodes r_0 = 0 < r_1 < ... < r_{n-1} = r_max,
/// spacing h = r_max / (n - 1).
struct RadialGrid {
    int n = 0;
    double r_max = 0.0;
    double h = 0.0;
    std::vector<double> nodes;

    static RadialGrid uniform(int n, double r_max) {
        if (n < 2)
            throw std::invalid_argument("RadialGrid: need at least 2 nodes, got " + std::to_string(n));
        if (!(r_max > 0.0) || !std::isfinite(r_max))
            throw std::invalid_argument("RadialGrid: r_max must be positive and finite");
        RadialGrid g;
        g.n = n;
        g.r_max = r_max;
        g.h = r_max / static_cast<double>(n - 1);
        g.nodes.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            g.nodes[static_cast<std::size_t>(i)] = r_max * static_cast<double>(i) / static_cast<double>(n - 1);
        g.nodes.front() = 0.0;
        g.nodes.back() = r_max;
        return g;
    }

    bool operator==(const RadialGrid& other) const {
        return n == other.n && r_max == other.r_max;
    }
};

/// Sampled spherically symmetric field phi(|x|): one value per grid node.
struct RadialProfile {
    RadialGrid grid;
    std::vector<double> values;

    RadialProfile() = default;

    RadialProfile(RadialGrid g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
        if (values.size() != static_cast<std::size_t>(grid.n))
            throw std::invalid_argument("RadialProfile: values length " + std::to_string(values.size()) +
                                        " != node count " + std::to_string(grid.n));
        for (double x : values)
            if (!std::isfinite(x))
                throw std::invalid_argument("RadialProfile: non-finite value");
    }

    static RadialProfile constant(const RadialGrid& g, double c) {
        return RadialProfile(g, std::vector<double>(static_cast<std::size_t>(g.n), c));
    }

    static RadialProfile zero(const RadialGrid& g) { return constant(g, 0.0); }

    /// Sample a callable f(r) at every node.
    template <class F>
    static RadialProfile from_function(const RadialGrid& g, F&& f) {
        std::vector<double> v(static_cast<std::size_t>(g.n));
        for (int i = 0; i < g.n; ++i)
            v[static_cast<std::size_t>(i)] = f(g.nodes[static_cast<std::size_t>(i)]);
        return RadialProfile(g, std::move(v));
    }

    int size() const { return grid.n; }
    double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return values[static_cast<std::size_t>(i)]; }
};

} // namespace radl1
