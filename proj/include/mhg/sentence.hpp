#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace mhg {

/// Sentence families. a1_ones_labeled is a1_ones_unlabeled without the
/// second block of witnesses. `extension` is the one-point extension axiom
/// and `divergence_witness` is "every vertex has a vertex at distance 3".
enum class Family {
  a1_distances,
  a1_no_two_threes,
  a1_parts,
  a1_pairs,
  a1_ones_unlabeled,
  a1_ones_labeled,
  a2_distances,
  a2_parts,
  a2_min_ones,
  a2_min_threes,
  extension,
  divergence_witness,
};

struct SentenceId {
  Family family = Family::a1_distances;
  std::size_t p = 0;
  std::size_t q = 0;  // extension only
  std::size_t r = 0;  // extension only
  /// a1_pairs: p vertex-disjoint 3-edges instead of the literal formula.
  /// a1_ones_unlabeled: p 3-edge-free vertices in each of two parts.
  bool gloss = false;

  friend bool operator==(const SentenceId&, const SentenceId&) = default;
};

bool has_p(Family f);
bool allows_gloss(Family f);

/// Stable string id, e.g. "a1.pairs?p=2", "ext?q=1&p=1&r=1", "witness".
std::string to_string(const SentenceId& s);

/// Inverse of to_string; throws std::invalid_argument on unknown families,
/// unknown or missing parameters.
SentenceId parse_sentence(std::string_view id);

}  // namespace mhg
