#pragma once

#include "ssrbell_cli/report.hpp"

#include "ssrbell/states.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ssrbell::cli {

struct ScenarioConfig {
  std::uint64_t seed = 42;  ///< global seed; each scenario derives its own stream
  std::size_t restarts = 32;
  std::size_t samples = 100000;  ///< phase-twirl samples
  std::size_t random_specs = 200;
  int max_particles = 3;
  std::size_t sweep_points = 20;
  std::optional<std::vector<SeparableSpec>> specs;  ///< replaces the random ensemble
};

[[nodiscard]] const std::vector<std::string>& scenario_names();
[[nodiscard]] bool is_scenario(const std::string& name);

/// Per-scenario seed: derive_seed(global, stable_hash(name)).
[[nodiscard]] std::uint64_t scenario_seed(std::uint64_t global, const std::string& name);

/// Throws std::invalid_argument for unknown names.
[[nodiscard]] ScenarioReport run_scenario(const std::string& name, const ScenarioConfig& config);

}  // namespace ssrbell::cli
