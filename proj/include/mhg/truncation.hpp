#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "mhg/class_spec.hpp"
#include "mhg/metric_space.hpp"

namespace mhg {

enum class Limit { gamma_378, gamma_as, gamma_3710 };

std::string_view limit_name(Limit l);  // "g378", "gas", "g3710"
std::optional<Limit> parse_limit(std::string_view s);
/// A1 for gamma_378 and gamma_as, A2 for gamma_3710.
ClassId limit_class(Limit l);

struct TruncationSpec {
  Limit limit = Limit::gamma_378;
  std::size_t m = 0;  // gamma_378: matched pairs; gamma_3710: points per side
  std::size_t t = 0;  // gamma_as: matched pairs
  std::size_t u = 0;  // gamma_as: unmatched points per side
  std::uint64_t seed = 0;  // gamma_3710
};

/// gamma_378(m): parts [0,m) and [m,2m), d(i, m+i) = 3, other cross pairs 1.
/// gamma_as(t,u): parts of size s = t+u, d(i, s+i) = 3 for i < t.
/// gamma_3710(m, seed): cross pairs iid uniform on {1,3}, row-major draws.
/// The result is validated against limit_class before it is returned.
MetricSpace build_truncation(const TruncationSpec& spec);

}  // namespace mhg
