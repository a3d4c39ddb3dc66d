#pragma once

#include <json.hpp>

#include "qasep/algebra.hpp"
#include "qasep/asep.hpp"
#include "qasep/functionals.hpp"

namespace qasep {

using Json = nlohmann::ordered_json;

/// 15-significant-digit rendering used everywhere a float is printed.
std::string float_str(double x);

Json to_json(const QExt& x);                 // {"r": "...", "s": "...", "theta_sq": "..."}
Json to_json(const NPoly& p);                // term list [{"m":, "n":, "coeff":}]
Json to_json(const AsepParams& params);
Json to_json(const PhiTable& table);         // regime, N, values
Json stationary_json(const AsepParams& params, const Dist& dist);

/// CSV rows "config,p,p_float", states ascending.
std::string stationary_csv(const Dist& dist);

} // namespace qasep
