#include "bergman/reports.hpp"

namespace bergman {

using nlohmann::json;

json to_json(const LaurentSeries& s) {
    json terms = json::array();
    for (const auto& [n, a] : s.coefficients())
        terms.push_back({{"degree", n}, {"re", a.real()}, {"im", a.imag()}});
    return terms;
}

json to_json(const SpectrumReport& rep) {
    json entries = json::array();
    for (const SpectrumEntry& e : rep.entries)
        entries.push_back({{"degree", e.degree},
                           {"singular_value", e.singular_value},
                           {"f_squared_eigenvalue", e.f_squared_eigenvalue}});
    return {{"truncation", rep.truncation},
            {"tolerance", rep.tolerance},
            {"entries", entries},
            {"rank_estimate", rep.rank_estimate},
            {"rank_saturated_at_truncation", rep.saturated}};
}

json to_json(const ProbeReport& rep) {
    return {{"q", rep.q},
            {"p", rep.p},
            {"truncation", rep.truncation},
            {"trials", rep.trials},
            {"seed", rep.seed},
            {"lower_bound", rep.lower_bound},
            {"unbounded_hit", rep.unbounded_hit},
            {"witness", to_json(rep.witness)},
            {"trial_values", rep.trial_values}};
}

json to_json(const ThresholdReport& rep) {
    json j{{"n", rep.n},
           {"eta", rep.eta},
           {"p_upper_case1", rep.p_upper_case1},
           {"epsilon_main", rep.epsilon_main},
           {"sobolev_upper", rep.sobolev_upper}};
    if (rep.r) j["r"] = *rep.r;
    if (rep.p_upper_case2) j["p_upper_case2"] = *rep.p_upper_case2;
    if (rep.p) j["p"] = *rep.p;
    if (rep.ws_upper_at_p) j["ws_upper_at_p"] = *rep.ws_upper_at_p;
    return j;
}

} // namespace bergman
