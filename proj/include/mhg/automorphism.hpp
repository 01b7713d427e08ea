#pragma once

#include <cstddef>
#include <vector>

#include "mhg/bigint.hpp"
#include "mhg/metric_space.hpp"

namespace mhg {

/// Equitable colour refinement of the complete {1,2,3}-edge-coloured graph.
/// `prefix` vertices are individualized in order before refining. Colour
/// ids are ranks of vertex signatures, so isometric inputs with matching
/// prefixes produce colourings related by the isometry.
std::vector<int> refine_coloring(const MetricSpace& s, const std::vector<Vertex>& prefix);

/// Whether some isometry maps from[i] to to[i] for every i.
bool exists_isometry_extending(const MetricSpace& s, const std::vector<Vertex>& from,
                               const std::vector<Vertex>& to);

/// Order of the isometry group, via orbit-stabilizer over a chain of
/// individualized vertices; each orbit is found by refinement-guided
/// backtracking.
BigInt automorphism_count(const MetricSpace& s);

inline constexpr std::size_t kBruteForceAutomorphismLimit = 10;

/// Counts distance-preserving permutations among all n! orderings.
/// Throws CapacityError above kBruteForceAutomorphismLimit.
BigInt automorphism_count_bruteforce(const MetricSpace& s);

bool is_asymmetric(const MetricSpace& s);

/// Closed form for an A1 member with parts k <= m and j matched 3-edges:
/// j!(k-j)!(m-j)!, doubled when k = m. The empty space has one automorphism.
BigInt a1_automorphism_formula(std::size_t k, std::size_t m, std::size_t j);

}  // namespace mhg
