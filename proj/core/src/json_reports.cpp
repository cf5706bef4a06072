#include <cmath>

#include "herbidyn/equilibrium_analysis.hpp"
#include "herbidyn/errors.hpp"
#include "json.hpp"

namespace herbidyn {

namespace {

nlohmann::ordered_json report_to_json(const EquilibriumReport& rep) {
    nlohmann::ordered_json j;
    j["P"] = rep.location.P;
    j["H"] = rep.location.H;
    j["kind"] = to_string(rep.kind);
    if (rep.kind != EquilibriumKind::Interior)
        j["index"] = rep.boundary_index;
    j["eig_re"] = {rep.eig[0].real(), rep.eig[1].real()};
    j["eig_im"] = {rep.eig[0].imag(), rep.eig[1].imag()};
    j["stability"] = to_string(rep.stability);
    j["residual"] = rep.residual;
    return j;
}

}  // namespace

std::string equilibrium_report_json(const SystemSpec& spec) {
    nlohmann::ordered_json j;
    j["variant"] = to_string(spec.variant());
    j["model"] = spec.model().name();
    for (const auto& [key, value] : spec.model().params())
        j["params"][key] = value;
    j["a"] = spec.a();

    j["equilibria"] = nlohmann::ordered_json::array();
    for (const auto& rep : boundary_equilibria(spec))
        j["equilibria"].push_back(report_to_json(rep));

    bool interior_found = false;
    try {
        if (auto rep = interior_equilibrium(spec)) {
            j["equilibria"].push_back(report_to_json(*rep));
            interior_found = true;
        }
    } catch (const UnsupportedModel&) {
        // Interior solving is undefined for this class; report boundary only.
    }

    const ThresholdReport th = thresholds(spec);
    j["thresholds"]["a_crit_transcritical"] =
        std::isfinite(th.a_crit_transcritical)
            ? nlohmann::ordered_json(th.a_crit_transcritical)
            : nlohmann::ordered_json("inf");
    j["thresholds"]["extinction"] = th.extinction_predicate;
    j["thresholds"]["persistence"] = th.persistence_predicate;
    j["thresholds"]["interior_exists"] = th.interior_exists;
    j["thresholds"]["marginal"] = th.marginal;
    j["thresholds"]["interior_found"] = interior_found;

    return j.dump(2);
}

}  // namespace herbidyn
