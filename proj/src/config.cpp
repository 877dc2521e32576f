#include "agflag/config.hpp"

#include <fstream>

namespace agflag::config {

using nlohmann::json;

kummer::CurveConfig parse_curve_config(const json& j) {
  try {
    const json& field = j.at("field");
    const auto p = field.at("p").get<gf::Repr>();
    const auto k = field.at("k").get<int>();
    const auto modulus = field.at("modulus").get<std::vector<gf::Repr>>();
    kummer::CurveConfig config;
    config.field = gf::make_field(p, k, modulus);
    config.m = j.at("m").get<int>();
    config.roots = j.at("roots").get<std::vector<gf::Repr>>();
    return config;
  } catch (const json::exception& e) {
    fail(Errc::ConfigError, std::string("malformed curve config: ") + e.what());
  }
}

kummer::CurveConfig load_curve_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ConfigError, "cannot open curve config: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::ConfigError, std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return parse_curve_config(j);
}

json curve_config_to_json(const kummer::CurveConfig& config) {
  return json{{"field",
               {{"p", config.field->p()}, {"k", config.field->k()}, {"modulus", config.field->modulus()}}},
              {"m", config.m},
              {"roots", config.roots}};
}

kummer::CurveConfig hermitian16_config() {
  kummer::CurveConfig config;
  config.field = gf::make_field(2, 4, {1, 1, 0, 0, 1});
  config.m = 5;
  config.roots = {0, 1, 6, 7};
  return config;
}

}  // namespace agflag::config
