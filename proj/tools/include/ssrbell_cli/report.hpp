#pragma once

#include "ssrbell/fock_space.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ssrbell::cli {

struct Verdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SeriesPoint {
  std::string label;
  double value = 0.0;
};

struct ScenarioReport {
  std::string scenario;
  std::string paper_eq;  ///< the relation the scenario exercises, in words
  double chsh_unconstrained = 0.0;
  double chsh_ssr = 0.0;
  double negativity_before = 0.0;
  double negativity_after_dephase = 0.0;
  std::vector<std::pair<SectorLabel, double>> sector_table;
  std::vector<SeriesPoint> series;
  std::vector<Verdict> verdicts;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;

  [[nodiscard]] bool passed() const;
};

enum class OutputFormat { Json, Csv, Text };

[[nodiscard]] OutputFormat parse_format(const std::string& name);

struct EmitOptions {
  OutputFormat format = OutputFormat::Json;
  bool timing = false;  ///< runtime_ms is omitted otherwise so output is reproducible
  std::uint64_t seed = 0;
};

[[nodiscard]] nlohmann::json to_json(const ScenarioReport& report, bool timing);

/// Sorted keys, two-space indent, floats as %.12g.
[[nodiscard]] std::string canonical_dump(const nlohmann::json& j);

/// Column order: scenario, seed, chsh_unconstrained, chsh_ssr, negativity_before,
/// negativity_after_dephase, passed, failed_verdicts[, runtime_ms].
[[nodiscard]] std::string to_csv(const std::vector<ScenarioReport>& reports, bool timing);
[[nodiscard]] std::string to_text(const std::vector<ScenarioReport>& reports);

[[nodiscard]] std::string emit(const std::vector<ScenarioReport>& reports,
                               const EmitOptions& options);

}  // namespace ssrbell::cli
