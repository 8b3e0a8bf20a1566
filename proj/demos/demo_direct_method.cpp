// Run the iterative solver at beta = 1 and compare against the closed form.

#include <cstdio>

#include "radl1/closed_form.hpp"
#include "radl1/direct_method.hpp"
#include "radl1/norms.hpp"

int main() {
    const double beta = 1.0;
    const auto params = radl1::solve_parameters(beta);
    const auto grid = radl1::RadialGrid::uniform(1024, 2.0 * params.R);

    radl1::SolverOptions opts;
    opts.max_iters = 1'000'000;
    const auto res = radl1::minimize(beta, grid, opts);

    const auto reference = radl1::evaluate_functional(radl1::sample(params, grid), beta);
    std::printf("direct method:  F = %.9f after %ld iterations%s\n", res.energy.total,
                res.trace.iterations, res.trace.converged ? "" : " (hit the cap)");
    std::printf("closed form id: F = %.9f on the same grid\n", reference.total);
    std::printf("relative gap    %.3e\n",
                (res.energy.total - reference.total) / reference.total);
    std::printf("constraint      | ||phi||_2 - 1 | = %.3e\n", std::abs(res.energy.l2 - 1.0));
    return 0;
}
