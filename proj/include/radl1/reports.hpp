#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "radl1/analysis.hpp"
#include "radl1/closed_form.hpp"
#include "radl1/direct_method.hpp"
#include "radl1/norms.hpp"
#include "radl1/profile_io.hpp"

namespace radl1 {

using nlohmann::json;

/// Closed-form report: parameters, energies, and the checked identities for
/// one beta, evaluated on the given sampled profile.
inline json solve_report_json(const MinimizerParams& params, const RadialProfile& sampled) {
    const EnergyBreakdown e = evaluate_functional(sampled, params.beta);
    const VirialReport vir = virial_check(sampled, params.beta);
    const BoundaryReport b = boundary_report(params);
    json j;
    j["beta"] = params.beta;
    j["a"] = params.a;
    j["mu"] = params.mu;
    j["R"] = params.R;
    j["lambda"] = params.lambda;
    j["t_star"] = params.t_star;
    j["F_total"] = e.total;
    j["kinetic"] = e.kinetic;
    j["l1"] = e.l1;
    j["l2"] = e.l2;
    j["virial_relerr"] = vir.relerr;
    j["helmholtz_residual"] = helmholtz_residual(sampled, params);
    j["phi_R"] = b.phi_R;
    j["dphi_R"] = b.dphi_R;
    return j;
}

inline json energy_json(double beta, const EnergyBreakdown& e, const SolverTrace& trace) {
    json j;
    j["beta"] = beta;
    j["total"] = e.total;
    j["kinetic"] = e.kinetic;
    j["l1"] = e.l1;
    j["l2"] = e.l2;
    j["h1"] = e.h1;
    j["composite"] = e.composite;
    j["iterations"] = trace.iterations;
    j["best_iter"] = trace.best_iter;
    j["converged"] = trace.converged;
    j["monotonicity_violations"] = trace.monotonicity_violations;
    return j;
}

/// Trace CSV: header `iter,total,kinetic,l1,l2err,tailmass`.
inline void write_trace_csv(const std::string& path, const SolverTrace& trace) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_trace_csv: cannot open " + path);
    out << "iter,total,kinetic,l1,l2err,tailmass\n";
    for (const auto& r : trace.records)
        out << r.iter << ',' << detail::fmt17(r.energy.total) << ',' << detail::fmt17(r.energy.kinetic)
            << ',' << detail::fmt17(r.energy.l1) << ',' << detail::fmt17(r.l2_err) << ','
            << detail::fmt17(r.tail_mass) << '\n';
    if (!out)
        throw std::runtime_error("write_trace_csv: write failed for " + path);
}

inline json scaling_report_json(const ScalingReport& rep, const NashFamilyReport* nash = nullptr) {
    json j;
    j["betas"] = rep.betas;
    json recs = json::array();
    for (const auto& r : rep.records) {
        json jr;
        jr["beta"] = r.beta;
        jr["a"] = r.a;
        jr["mu"] = r.mu;
        jr["R"] = r.R;
        jr["F"] = r.F;
        jr["ok"] = r.ok;
        if (!r.ok)
            jr["error"] = r.error;
        recs.push_back(jr);
    }
    j["records"] = recs;
    j["exponents"] = {{"e_a", rep.e_a}, {"e_mu", rep.e_mu}, {"e_R", rep.e_R}, {"e_F", rep.e_F}};
    j["prefactors"] = {{"a1", rep.a1}, {"mu1", rep.mu1}, {"R1", rep.R1}, {"F1", rep.F1}};
    j["fit_residuals"] = {{"a", rep.res_a}, {"mu", rep.res_mu}, {"R", rep.res_R}, {"F", rep.res_F}};
    j["muR_mean"] = rep.muR_mean;
    j["muR_spread"] = rep.muR_spread;
    if (nash) {
        json fam = json::array();
        for (const auto& entry : nash->family)
            fam.push_back({{"name", entry.name}, {"ratio", entry.ratio}});
        j["nash"] = {{"C3_estimate", nash->C3_estimate}, {"family_ratios", fam}};
    }
    return j;
}

inline void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_json: cannot open " + path);
    out << j.dump(2) << '\n';
    if (!out)
        throw std::runtime_error("write_json: write failed for " + path);
}

} // namespace radl1
