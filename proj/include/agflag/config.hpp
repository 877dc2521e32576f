#ifndef AGFLAG_CONFIG_HPP
#define AGFLAG_CONFIG_HPP

#include <string>

#include <json.hpp>

#include "agflag/kummer.hpp"

namespace agflag::config {

/// Parses {"field":{"p":..,"k":..,"modulus":[..]},"m":..,"roots":[..]}.
/// Element literals are integer reprs; the modulus is constant-first.
/// Violations raise Error(ConfigError).
kummer::CurveConfig parse_curve_config(const nlohmann::json& j);

kummer::CurveConfig load_curve_config(const std::string& path);

nlohmann::json curve_config_to_json(const kummer::CurveConfig& config);

/// The F_16 curve y^5 = x^4 + x used by `reproduce-example`.
kummer::CurveConfig hermitian16_config();

}  // namespace agflag::config

#endif
