#include "ssrbell_cli/spec_json.hpp"

#include <fstream>
#include <stdexcept>

namespace ssrbell::cli {

namespace {

Complex complex_from_json(const nlohmann::json& j, const char* field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument(std::string("'") + field + "' must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

SeparableSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("separable spec must be a JSON object");
  SeparableSpec spec;
  const std::string kind = j.value("kind", "");
  if (kind == "distinguishable") {
    spec.kind = SeparableKind::Distinguishable;
  } else if (kind == "bosonic") {
    spec.kind = SeparableKind::Bosonic;
  } else {
    throw std::invalid_argument("'kind' must be \"distinguishable\" or \"bosonic\"");
  }
  if (!j.contains("components") || !j["components"].is_array()) {
    throw std::invalid_argument("'components' must be an array");
  }
  for (const auto& c : j["components"]) {
    if (!c.is_object() || !c.contains("weight") || !c["weight"].is_number() ||
        !c.contains("amplitudes") || !c["amplitudes"].is_array()) {
      throw std::invalid_argument("each component needs a numeric 'weight' and an 'amplitudes' array");
    }
    SeparableComponent component;
    component.weight = c["weight"].get<double>();
    for (const auto& a : c["amplitudes"]) {
      if (!a.is_object() || !a.contains("alpha") || !a.contains("beta")) {
        throw std::invalid_argument("each amplitude needs 'alpha' and 'beta'");
      }
      component.amplitudes.push_back({complex_from_json(a["alpha"], "alpha"),
                                      complex_from_json(a["beta"], "beta")});
    }
    if (spec.kind == SeparableKind::Bosonic) {
      if (!c.contains("n") || !c["n"].is_number_integer()) {
        throw std::invalid_argument("bosonic components need an integer 'n'");
      }
      component.particles = c["n"].get<int>();
    }
    spec.components.push_back(std::move(component));
  }
  validate(spec);
  return spec;
}

nlohmann::json spec_to_json(const SeparableSpec& spec) {
  nlohmann::json j;
  j["kind"] = spec.kind == SeparableKind::Bosonic ? "bosonic" : "distinguishable";
  j["components"] = nlohmann::json::array();
  for (const auto& c : spec.components) {
    nlohmann::json jc;
    jc["weight"] = c.weight;
    jc["amplitudes"] = nlohmann::json::array();
    for (const auto& a : c.amplitudes) {
      jc["amplitudes"].push_back({{"alpha", {a.alpha.real(), a.alpha.imag()}},
                                  {"beta", {a.beta.real(), a.beta.imag()}}});
    }
    if (spec.kind == SeparableKind::Bosonic) jc["n"] = c.particles;
    j["components"].push_back(std::move(jc));
  }
  return j;
}

std::vector<SeparableSpec> load_specs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("spec file " + path + " is not valid JSON: " + e.what());
  }
  std::vector<SeparableSpec> specs;
  if (j.is_array()) {
    for (const auto& item : j) specs.push_back(spec_from_json(item));
  } else {
    specs.push_back(spec_from_json(j));
  }
  if (specs.empty()) throw std::invalid_argument("spec file " + path + " holds no specs");
  return specs;
}

}  // namespace ssrbell::cli
