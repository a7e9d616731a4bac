#include "ssrbell_cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ssrbell::cli {

bool ScenarioReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or text)");
}

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "null";
  if (std::isinf(x)) return x > 0 ? "1e999" : "-1e999";
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

nlohmann::json sector_json(const std::map<int, int>& counts) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [species, n] : counts) j[std::to_string(species)] = n;
  return j;
}

void dump(const nlohmann::json& j, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map storage: sorted keys
        if (!first) out << ",\n";
        first = false;
        out << pad << nlohmann::json(key).dump() << ": ";
        dump(value, depth + 1, out);
      }
      out << "\n" << close_pad << "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        dump(j[i], depth + 1, out);
      }
      out << "\n" << close_pad << "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out << format_double(j.get<double>());
      return;
    default:
      out << j.dump();
  }
}

std::string failed_names(const ScenarioReport& r) {
  std::string names;
  for (const auto& v : r.verdicts) {
    if (v.passed) continue;
    if (!names.empty()) names += ';';
    names += v.name;
  }
  return names;
}

}  // namespace

nlohmann::json to_json(const ScenarioReport& report, bool timing) {
  nlohmann::json j;
  j["scenario"] = report.scenario;
  j["paper_eq"] = report.paper_eq;
  j["seed"] = report.seed;
  j["chsh_unconstrained"] = report.chsh_unconstrained;
  j["chsh_ssr"] = report.chsh_ssr;
  j["negativity_before"] = report.negativity_before;
  j["negativity_after_dephase"] = report.negativity_after_dephase;
  j["sector_table"] = nlohmann::json::array();
  for (const auto& [label, weight] : report.sector_table) {
    j["sector_table"].push_back({{"A", sector_json(label.region_a)},
                                 {"B", sector_json(label.region_b)},
                                 {"weight", weight}});
  }
  if (!report.series.empty()) {
    j["series"] = nlohmann::json::array();
    for (const auto& p : report.series) {
      j["series"].push_back({{"label", p.label}, {"value", p.value}});
    }
  }
  j["verdicts"] = nlohmann::json::object();
  for (const auto& v : report.verdicts) {
    j["verdicts"][v.name] = {{"passed", v.passed}, {"detail", v.detail}};
  }
  j["passed"] = report.passed();
  if (timing) j["runtime_ms"] = report.runtime_ms;
  return j;
}

std::string canonical_dump(const nlohmann::json& j) {
  std::ostringstream out;
  dump(j, 0, out);
  out << "\n";
  return out.str();
}

std::string to_csv(const std::vector<ScenarioReport>& reports, bool timing) {
  std::ostringstream out;
  out << "scenario,seed,chsh_unconstrained,chsh_ssr,negativity_before,"
         "negativity_after_dephase,passed,failed_verdicts";
  if (timing) out << ",runtime_ms";
  out << "\n";
  for (const auto& r : reports) {
    out << r.scenario << ',' << r.seed << ',' << format_double(r.chsh_unconstrained) << ','
        << format_double(r.chsh_ssr) << ',' << format_double(r.negativity_before) << ','
        << format_double(r.negativity_after_dephase) << ',' << (r.passed() ? "true" : "false")
        << ',' << failed_names(r);
    if (timing) out << ',' << format_double(r.runtime_ms);
    out << "\n";
  }
  return out.str();
}

std::string to_text(const std::vector<ScenarioReport>& reports) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-18s %12s %12s %12s %12s %10s\n", "scenario", "CHSH", "CHSH(SSR)",
                "N(rho)", "N(D[rho])", "ms");
  out << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-18s %12.8f %12.8f %12.3e %12.3e %10.1f  %s\n",
                  r.scenario.c_str(), r.chsh_unconstrained, r.chsh_ssr, r.negativity_before,
                  r.negativity_after_dephase, r.runtime_ms, r.passed() ? "✓" : "✗");
    out << line;
    for (const auto& v : r.verdicts) {
      out << "    " << (v.passed ? "✓ " : "✗ ") << v.name;
      if (!v.detail.empty()) out << "  (" << v.detail << ")";
      out << "\n";
    }
  }
  return out.str();
}

std::string emit(const std::vector<ScenarioReport>& reports, const EmitOptions& options) {
  switch (options.format) {
    case OutputFormat::Csv:
      return to_csv(reports, options.timing);
    case OutputFormat::Text:
      return to_text(reports);
    case OutputFormat::Json:
      break;
  }
  nlohmann::json j;
  j["schema"] = 1;
  j["seed"] = options.seed;
  j["reports"] = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    j["reports"].push_back(to_json(r, options.timing));
    all = all && r.passed();
  }
  j["passed"] = all;
  return canonical_dump(j);
}

}  // namespace ssrbell::cli
