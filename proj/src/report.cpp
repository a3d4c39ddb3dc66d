#include "qasep/report.hpp"

#include <cstdio>

namespace qasep {

std::string float_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

Json to_json(const QExt& x) {
    return Json{{"r", rat_str(x.r())}, {"s", rat_str(x.s())}, {"theta_sq", rat_str(x.ctx()->theta_sq)}};
}

Json to_json(const NPoly& p) {
    Json terms = Json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back(Json{{"m", key.m}, {"n", key.n}, {"coeff", to_json(c)}});
    return terms;
}

Json to_json(const AsepParams& params) {
    Json j{{"alpha", rat_str(params.alpha)},
           {"beta", rat_str(params.beta)},
           {"gamma", rat_str(params.gamma)},
           {"delta", rat_str(params.delta)},
           {"q", rat_str(params.q)}};
    if (params.aw)
        j["aw"] = Json{{"a", rat_str(params.aw->a)},
                       {"b", rat_str(params.aw->b)},
                       {"c", rat_str(params.aw->c)},
                       {"d", rat_str(params.aw->d)}};
    else
        j["aw"] = nullptr;
    return j;
}

Json to_json(const PhiTable& table) {
    const char* regime = nullptr;
    switch (table.regime()) {
    case Regime::Phi0Singular: regime = "phi0-singular"; break;
    case Regime::Phi0NonSingular: regime = "phi0-nonsingular"; break;
    case Regime::Phi1: regime = "phi1"; break;
    }
    Json j{{"regime", regime}};
    if (table.singular_index()) j["N"] = *table.singular_index();
    else j["N"] = nullptr;
    j["max_degree"] = table.covered_degree();
    Json vals = Json::array();
    for (const auto& [key, c] : table.values())
        vals.push_back(Json{{"m", key.m}, {"n", key.n}, {"value", to_json(c)}});
    j["values"] = vals;
    return j;
}

Json stationary_json(const AsepParams& params, const Dist& dist) {
    Json j;
    j["params"] = to_json(params);
    j["L"] = dist.L;
    bool phi1 = params.singular() && dist.L >= *params.singular_index + 1;
    j["regime"] = phi1 ? "phi1" : "phi0";
    if (params.singular_index) j["N"] = *params.singular_index;
    else j["N"] = nullptr;
    Json rows = Json::array();
    for (unsigned s = 0; s < dist.p.size(); ++s)
        rows.push_back(Json{{"config", config_string(dist.L, s)},
                            {"p", rat_str(dist.p[s])},
                            {"p_float", rat_to_double(dist.p[s])}});
    j["rows"] = rows;
    return j;
}

std::string stationary_csv(const Dist& dist) {
    std::string out = "config,p,p_float\n";
    for (unsigned s = 0; s < dist.p.size(); ++s) {
        out += config_string(dist.L, s);
        out += ',';
        out += rat_str(dist.p[s]);
        out += ',';
        out += float_str(rat_to_double(dist.p[s]));
        out += '\n';
    }
    return out;
}

} // namespace qasep
