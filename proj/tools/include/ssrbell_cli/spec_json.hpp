#pragma once

// JSON form of SeparableSpec:
//   {"kind": "distinguishable" | "bosonic",
//    "components": [{"weight": w,
//                    "amplitudes": [{"alpha": [re, im], "beta": [re, im]}, ...],
//                    "n": N}]}            // "n" only for bosonic components

#include "ssrbell/states.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace ssrbell::cli {

/// Throws std::invalid_argument on schema violations or invalid specs.
[[nodiscard]] SeparableSpec spec_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json spec_to_json(const SeparableSpec& spec);

/// Accepts a single spec object or an array of them.
[[nodiscard]] std::vector<SeparableSpec> load_specs(const std::string& path);

}  // namespace ssrbell::cli
