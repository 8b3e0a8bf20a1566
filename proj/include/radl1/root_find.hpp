#pragma once

#include <cmath>
#include <stdexcept>

namespace radl1 {

/// Safeguarded scalar root finding: secant steps inside a maintained bracket,
/// bisection whenever the secant step leaves it or stalls. Deterministic.
/// Stops once the bracket width drops below tol. Requires f(lo) * f(hi) < 0.
template <class F>
double find_root(F&& f, double lo, double hi, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("find_root: tol must be positive");
    if (!(lo < hi))
        throw std::invalid_argument("find_root: need lo < hi");
    double flo = f(lo);
    double fhi = f(hi);
    if (std::isnan(flo) || std::isnan(fhi))
        throw std::runtime_error("find_root: NaN from function evaluation");
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw std::invalid_argument("find_root: no sign change on the bracket");

    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        double mid;
        const double denom = fhi - flo;
        if (denom != 0.0) {
            mid = lo - flo * (hi - lo) / denom;
            // keep the iterate strictly interior; fall back to bisection otherwise
            const double margin = 0.01 * (hi - lo);
            if (!(mid > lo + margin) || !(mid < hi - margin))
                mid = 0.5 * (lo + hi);
        } else {
            mid = 0.5 * (lo + hi);
        }
        const double fmid = f(mid);
        if (std::isnan(fmid))
            throw std::runtime_error("find_root: NaN from function evaluation");
        if (fmid == 0.0)
            return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace radl1
