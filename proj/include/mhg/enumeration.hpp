#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "mhg/bigint.hpp"
#include "mhg/bipartite.hpp"
#include "mhg/class_spec.hpp"
#include "mhg/metric_space.hpp"

namespace mhg {

enum class CountMode { labeled, unlabeled };

std::string_view mode_name(CountMode m);
std::optional<CountMode> parse_mode(std::string_view s);

inline constexpr std::size_t kOracleMaxN = 6;
inline constexpr std::size_t kUnlabeledA2MaxN = 10;

// ---- labeled enumeration -------------------------------------------------

/// Every symmetric {1,2,3} matrix on n points that passes validation, in
/// lexicographic order of the row-major upper triangle. Throws
/// CapacityError for n > kOracleMaxN unless `force`.
std::vector<MetricSpace> enumerate_labeled_oracle(std::size_t n, ClassId cls, bool force = false);

/// Generates each labeled member exactly once from its two-clique
/// decomposition: unordered part pairs (vertex 0 in the second part when the
/// parts are equal) times every legal cross matrix (partial matchings of
/// 3-edges for A1, arbitrary {1,3} matrices for A2).
void for_each_labeled(std::size_t n, ClassId cls,
                      const std::function<void(const MetricSpace&)>& visit);

std::vector<MetricSpace> enumerate_labeled_structured(std::size_t n, ClassId cls);

// ---- counting ------------------------------------------------------------

/// Published labeled sums, evaluated verbatim (ordered part choice, so the
/// balanced term is counted twice).
BigInt count_labeled_paper(std::size_t n, ClassId cls);

/// Number of labeled members: the published sum with the k = n/2 term halved.
BigInt count_labeled_exact(std::size_t n, ClassId cls);

/// Published isomorphism-class counts: sum of (k+1) for A1, sum of C(n,k)
/// for A2, k = 0..floor(n/2).
BigInt count_unlabeled_paper(std::size_t n, ClassId cls);

/// Number of isometry classes: sum of (k+1) for A1; for A2 the Burnside
/// count of cross matrices per k (with the part swap when k = n-k).
/// Throws CapacityError for A2 above kBurnsideMaxN.
BigInt count_unlabeled_exact(std::size_t n, ClassId cls);

/// Oracle count: size of the brute-force enumeration (labeled) or its
/// number of distinct canonical keys (unlabeled).
BigInt count_oracle(std::size_t n, ClassId cls, CountMode mode, bool force = false);

/// Labeled members of A1 with parts k <= m = n-k and j matched pairs, for
/// one fixed ordered part choice: C(k,j) C(m,j) j!.
BigInt a1_cross_count(std::size_t k, std::size_t m, std::size_t j);

// ---- isomorphism classes -------------------------------------------------

struct IsoClassDescriptor {
  ClassId cls;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> j;  // A1 only: number of 3-edges
  CrossMatrix cross;             // canonical for A2; j leading diagonal 3s for A1
  MetricSpace representative;
  BigInt aut_order;

  /// n!/|Aut|: the number of labeled members in this class.
  BigInt labeled_weight() const;
};

/// One representative per isometry class, ordered by k then cross matrix
/// (by (k, j) for A1). A2 is limited to n <= kUnlabeledA2MaxN.
std::vector<IsoClassDescriptor> enumerate_unlabeled(std::size_t n, ClassId cls);

// ---- reports -------------------------------------------------------------

struct CountReport {
  std::size_t n = 0;
  ClassId cls = ClassId::A1;
  CountMode mode = CountMode::labeled;
  std::optional<BigInt> paper;
  std::optional<BigInt> exact;
  std::optional<BigInt> oracle;

  /// Published formula vs exact (or vs oracle when exact is absent).
  std::optional<bool> agrees_paper() const;
  /// exact vs oracle.
  std::optional<bool> agrees_oracle() const;
};

struct CountMethods {
  bool formula = true;
  bool exact = true;
  bool oracle = false;
};

/// `oracle_override` supplies a precomputed oracle value (e.g. from cache).
CountReport make_count_report(std::size_t n, ClassId cls, CountMode mode, CountMethods methods,
                              bool force = false,
                              std::optional<BigInt> oracle_override = std::nullopt);

}  // namespace mhg
