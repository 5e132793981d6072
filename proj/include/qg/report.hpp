#pragma once

// Command reports: JSON (schema in docs/report.schema.json) and aligned text.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qg/check.hpp"
#include "qg/rewrite.hpp"

namespace qg {

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  /// Preset label, or empty for purely numeric commands.
  std::string algebra;
  std::optional<ConventionTag> convention;
  Json inputs = Json::object();
  std::vector<CheckResult> results;
  /// Command-specific payload (spectra, paths, rendered values).
  Json data = Json::object();
  std::int64_t timing_ms = 0;
  std::uint64_t seed = 0;

  bool failed() const { return any_fails(results); }
};

Json to_json(const Report &r, bool with_timing = true);
std::string render_json(const Report &r, bool with_timing = true);
std::string render_text(const Report &r);

} // namespace qg
