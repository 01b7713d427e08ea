#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mhg/amalgamation.hpp"
#include "mhg/enumeration.hpp"
#include "mhg/logic.hpp"
#include "mhg/sampler.hpp"

namespace mhg {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Format { csv, json };

struct RunManifest {
  std::string command_line;
  std::string tool_version{kToolVersion};
  std::string cls;
  std::string n_range;
  std::vector<std::uint64_t> seeds;
  std::size_t cache_hits = 0;
  double wall_seconds = 0;
};

/// CSV reports start with the manifest as "# key: value" lines; JSON
/// reports carry it under "manifest". Every number in JSON is a string.
std::string render_counts(const std::vector<CountReport>& rows, const RunManifest& m, Format f);
std::string render_proportions(const ConvergenceTable& t, const RunManifest& m, Format f);
std::string render_asymmetry(const AsymmetryEstimate& e, const RunManifest& m, Format f);
std::string render_amalgamation(const AmalgamationReport& r, const RunManifest& m, Format f);
/// Named boolean checks (e.g. sentence ids evaluated on a truncation).
std::string render_checks(const std::vector<std::pair<std::string, bool>>& checks,
                          const RunManifest& m, Format f);
/// Spaces in the text format (csv) or as nested arrays (json).
std::string render_spaces(const std::vector<MetricSpace>& spaces, const RunManifest& m, Format f);

}  // namespace mhg
