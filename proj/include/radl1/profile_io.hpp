#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "radl1/grid.hpp"

namespace radl1 {

namespace detail {
inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}
} // namespace detail

/// Profile CSV: header `r,value`, one node per row, 17 significant digits.
inline void write_profile_csv(const std::string& path, const RadialProfile& p) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_profile_csv: cannot open " + path);
    out << "r,value\n";
    for (int i = 0; i < p.grid.n; ++i)
        out << detail::fmt17(p.grid.nodes[static_cast<std::size_t>(i)]) << ','
            << detail::fmt17(p.values[static_cast<std::size_t>(i)]) << '\n';
    if (!out)
        throw std::runtime_error("write_profile_csv: write failed for " + path);
}

/// Reads a profile CSV and reconstructs its uniform grid. Rejects files whose
/// radii are not uniformly spaced from 0.
inline RadialProfile read_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("read_profile_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("read_profile_csv: empty file " + path);
    if (line.rfind("r,value", 0) != 0)
        throw std::runtime_error("read_profile_csv: missing `r,value` header in " + path);
    std::vector<double> rs, vs;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b))
            throw std::runtime_error("read_profile_csv: bad row " + std::to_string(lineno) + " in " + path);
        rs.push_back(std::stod(a));
        vs.push_back(std::stod(b));
    }
    if (rs.size() < 2)
        throw std::runtime_error("read_profile_csv: need at least 2 rows in " + path);
    const int n = static_cast<int>(rs.size());
    const double r_max = rs.back();
    RadialGrid g = RadialGrid::uniform(n, r_max);
    for (int i = 0; i < n; ++i) {
        const double want = g.nodes[static_cast<std::size_t>(i)];
        if (std::abs(rs[static_cast<std::size_t>(i)] - want) > 1e-9 * (1.0 + r_max))
            throw std::runtime_error("read_profile_csv: non-uniform radii in " + path);
    }
    return RadialProfile(std::move(g), std::move(vs));
}

} // namespace radl1
