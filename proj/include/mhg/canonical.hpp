#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mhg/metric_space.hpp"

namespace mhg {

/// Isometry invariant: equal keys iff the spaces are isometric. Bytes are a
/// 4-byte big-endian vertex count followed by the distance matrix's upper
/// triangle in column order ((0,1), (0,2), (1,2), (0,3), ...) under the
/// canonical vertex order, so byte order equals matrix order.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline constexpr std::size_t kBruteForceCanonicalMax = 8;
inline constexpr std::size_t kBruteForceCanonicalLimit = 10;

/// Exhaustive minimum over all orderings for n <= 8; for larger n the
/// bipartite route (class A2 members, which include A1), falling back to
/// the exhaustive search up to n = 10 for non-members. Throws
/// CapacityError beyond that.
CanonicalKey canonical_form(const MetricSpace& s);

/// Vertex order realizing canonical_form: result[i] is the source vertex
/// placed at position i.
std::vector<Vertex> canonical_order(const MetricSpace& s);

/// The minimal matrix over all n! orderings (pruned search).
CanonicalKey canonical_form_bruteforce(const MetricSpace& s);

/// Key built from the two-clique decomposition; nullopt for non-members
/// of A2.
std::optional<CanonicalKey> canonical_form_bipartite(const MetricSpace& s);

}  // namespace mhg
