// Acceptance suite: every quantitative claim the library makes, one line each.
// Prints [PASS]/[FAIL] per criterion and exits nonzero if any failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "radl1/analysis.hpp"
#include "radl1/closed_form.hpp"
#include "radl1/direct_method.hpp"
#include "radl1/norms.hpp"
#include "radl1/rearrange.hpp"

using namespace radl1;

namespace {

struct Criterion {
    std::string label;
    bool pass = true;
    std::string detail;
    double seconds = 0.0;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty())
                detail += "; ";
            detail += what;
        }
    }
};

std::vector<double> logspace(double lo, double hi, int num) {
    std::vector<double> b(num);
    for (int i = 0; i < num; ++i)
        b[i] = lo * std::pow(hi / lo, double(i) / double(num - 1));
    return b;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

} // namespace

int main() {
    std::vector<Criterion> results;
    auto run = [&](const std::string& label, const std::function<void(Criterion&)>& body) {
        Criterion c;
        c.label = label;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const std::exception& ex) {
            c.pass = false;
            c.detail = std::string("exception: ") + ex.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %s%s%s  (%.2f s)\n", c.pass ? "PASS" : "FAIL", c.label.c_str(),
                    c.detail.empty() ? "" : " -- ", c.detail.c_str(), c.seconds);
        std::fflush(stdout);
        results.push_back(c);
    };

    run("1. geometry constant: root of tan t = t to 1e-10, under 1 ms", [](Criterion& c) {
        const auto t0 = std::chrono::steady_clock::now();
        const double t = geometry_constant();
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        c.require(std::abs(t - 4.493409457909064) <= 1e-10,
                  "value off by " + fmt(std::abs(t - 4.493409457909064)));
        c.require(ms < 1.0, "took " + fmt(ms) + " ms");
    });

    run("2. constraint and boundary conditions for beta in {0.1, 1, 10}", [](Criterion& c) {
        for (double beta : {0.1, 1.0, 10.0}) {
            const auto p = solve_parameters(beta);
            const auto grid = RadialGrid::uniform(4096, 1.5 * p.R);
            const double l2 = l2_norm(sample(p, grid));
            const auto b = boundary_report(p);
            const std::string tag = " at beta=" + fmt(beta);
            c.require(std::abs(l2 - 1.0) <= 1e-6, "|l2-1|=" + fmt(std::abs(l2 - 1.0)) + tag);
            c.require(std::abs(b.phi_R) <= 1e-10, "|phi(R)|=" + fmt(std::abs(b.phi_R)) + tag);
            c.require(std::abs(b.dphi_R) <= 1e-8, "|phi'(R)|=" + fmt(std::abs(b.dphi_R)) + tag);
            c.require(p.lambda < 0.0, "lambda sign" + tag);
        }
    });

    run("3. virial identity within 1e-6 across the scan range", [](Criterion& c) {
        for (double beta : logspace(0.1, 10.0, 15)) {
            const auto p = solve_parameters(beta);
            const auto grid = RadialGrid::uniform(4096, 1.5 * p.R);
            const auto v = virial_check(sample(p, grid), beta);
            c.require(v.relerr < 1e-6, "relerr=" + fmt(v.relerr) + " at beta=" + fmt(beta));
        }
    });

    run("4. scaling exponents (3/7, 2/7, -2/7, 4/7) and constant mu R, under 10 s",
        [](Criterion& c) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto rep = scaling_scan(logspace(0.1, 10.0, 15), ScanSource::closed_form);
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            c.require(std::abs(rep.e_a - 3.0 / 7.0) <= 1e-8, "e_a=" + fmt(rep.e_a));
            c.require(std::abs(rep.e_mu - 2.0 / 7.0) <= 1e-8, "e_mu=" + fmt(rep.e_mu));
            c.require(std::abs(rep.e_R + 2.0 / 7.0) <= 1e-8, "e_R=" + fmt(rep.e_R));
            c.require(std::abs(rep.e_F - 4.0 / 7.0) <= 1e-6, "e_F=" + fmt(rep.e_F));
            c.require(rep.muR_spread <= 1e-9, "muR spread=" + fmt(rep.muR_spread));
            c.require(secs < 10.0, "took " + fmt(secs) + " s");
        });

    run("5. Helmholtz residual decays at order >= 1.9 over n in {1024, 2048, 4096}",
        [](Criterion& c) {
            const auto p = solve_parameters(1.0);
            auto resid = [&](int n) {
                const auto grid = RadialGrid::uniform(n, 1.5 * p.R);
                return helmholtz_residual(sample(p, grid), p);
            };
            const double r1 = resid(1024), r2 = resid(2048), r3 = resid(4096);
            const double o1 = std::log2(r1 / r2), o2 = std::log2(r2 / r3);
            c.require(o1 >= 1.9, "order(1024->2048)=" + fmt(o1));
            c.require(o2 >= 1.9, "order(2048->4096)=" + fmt(o2));
        });

    run("6. direct method at beta=1, n=2048: energy to 1e-3, support to 5%, under 60 s",
        [](Criterion& c) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto params = solve_parameters(1.0);
            const auto grid = RadialGrid::uniform(2048, 2.0 * params.R);
            SolverOptions opts;
            opts.max_iters = 2'000'000;
            opts.energy_tol = 1e-11;
            const auto res = minimize(1.0, grid, opts);
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            const double reference = evaluate_functional(sample(params, grid), 1.0).total;
            const double gap = std::abs(res.energy.total - reference) / reference;
            c.require(gap <= 1e-3, "energy gap=" + fmt(gap));
            double peak = 0.0;
            for (double v : res.profile.values)
                peak = std::max(peak, v);
            double support = 0.0;
            for (int i = 0; i < grid.n; ++i)
                if (res.profile.values[i] > 1e-6 * peak)
                    support = grid.nodes[i];
            c.require(std::abs(support - params.R) <= 0.05 * params.R,
                      "support=" + fmt(support) + " vs R=" + fmt(params.R));
            c.require(secs < 60.0, "took " + fmt(secs) + " s");
        });

    run("7. rearrangement suite over 200 seeded profiles, under 10 s", [](Criterion& c) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto grid = RadialGrid::uniform(65536, 1.5);
        for (std::uint64_t seed = 1; seed <= 200 && c.pass; ++seed) {
            const auto p = oracle::smooth_random_profile(grid, seed);
            const auto star = rearrange(p);
            RadialProfile ab = p;
            for (auto& v : ab.values)
                v = std::abs(v);
            const std::string tag = " at seed " + std::to_string(seed);

            const double dl1 = std::abs(l1_norm(star) / l1_norm(ab) - 1.0);
            const double dl2 = std::abs(l2_norm(star) / l2_norm(ab) - 1.0);
            c.require(dl1 <= 1e-8, "l1 drift " + fmt(dl1) + tag);
            c.require(dl2 <= 1e-8, "l2 drift " + fmt(dl2) + tag);

            bool monotone = true;
            for (int i = 1; i < grid.n; ++i)
                monotone = monotone && star.values[i] <= star.values[i - 1];
            c.require(monotone, "non-monotone output" + tag);

            const auto star2 = rearrange(star);
            double idem = 0.0;
            for (int i = 0; i < grid.n; ++i)
                idem = std::max(idem, std::abs(star2.values[i] - star.values[i]));
            c.require(idem <= 1e-12, "idempotence drift " + fmt(idem) + tag);

            const double fb = evaluate_functional(ab, 1.0).total;
            const double fa = evaluate_functional(star, 1.0).total;
            c.require(fa <= fb * (1.0 + 1e-6), "F increased by " + fmt(fa / fb - 1.0) + tag);
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.require(secs < 10.0, "took " + fmt(secs) + " s");
    });

    run("8. Nash saturation: minimizer tops the family; ratio invariances to 1e-8",
        [](Criterion& c) {
            const auto rep = nash_family(1.0);
            for (std::size_t i = 1; i < rep.family.size(); ++i)
                c.require(rep.family[i].ratio < rep.C3_estimate,
                          rep.family[i].name + " reaches " + fmt(rep.family[i].ratio) + " vs C3 " +
                              fmt(rep.C3_estimate));

            const auto params = solve_parameters(1.0);
            const auto grid = RadialGrid::uniform(4096, 2.5 * params.R);
            const auto minimizer = sample(params, grid);
            const double base = nash_ratio(minimizer);
            for (double cc : {0.5, 3.0}) {
                RadialProfile q = minimizer;
                for (auto& v : q.values)
                    v *= cc;
                c.require(std::abs(nash_ratio(q) / base - 1.0) <= 1e-8,
                          "amplitude invariance at c=" + fmt(cc));
            }
            for (double nu : {0.5, 2.0})
                c.require(std::abs(nash_ratio(rescale_unitary(minimizer, nu)) / base - 1.0) <= 1e-8,
                          "dilation invariance at nu=" + fmt(nu));
        });

    run("9. gradient consistency along 20 random directions to 1e-5", [](Criterion& c) {
        const auto grid = RadialGrid::uniform(4096, 1.5);
        RadialProfile base = oracle::smooth_direction(grid, 42);
        for (auto& v : base.values)
            v += 0.5;
        const auto grad = smooth_gradient(base);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto dir = oracle::smooth_direction(grid, seed);
            const double lhs = l2_inner(grad, dir);
            const double eps = 1e-4;
            RadialProfile plus = base, minus = base;
            for (int i = 0; i < grid.n; ++i) {
                plus.values[i] += eps * dir.values[i];
                minus.values[i] -= eps * dir.values[i];
            }
            const double rhs = (kinetic_energy(plus) - kinetic_energy(minus)) / (2.0 * eps);
            const double rel = std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
            c.require(rel <= 1e-5, "relerr " + fmt(rel) + " at seed " + std::to_string(seed));
        }
    });

    int failed = 0;
    for (const auto& c : results)
        failed += c.pass ? 0 : 1;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
                results.size());
    return failed == 0 ? 0 : 1;
}
