#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mhg/bigint.hpp"
#include "mhg/bipartite.hpp"
#include "mhg/class_spec.hpp"
#include "mhg/enumeration.hpp"
#include "mhg/metric_space.hpp"
#include "mhg/sentence.hpp"

namespace mhg {

using Ensemble = CountMode;

/// Literal evaluation on an arbitrary well-formed space. Distance atoms on
/// an identical pair are false; the universal w of the A1 "ones" families
/// skips the witness it is compared against.
bool eval_sentence(const MetricSpace& s, const SentenceId& id);

/// Same answers as eval_sentence for class members, computed from the
/// two-part decomposition (row/column margins and a maximum matching of
/// the 3-edges). The extension family falls back to eval_extension_axiom
/// on the recomposed space.
bool eval_sentence_member(const BipartiteForm& form, const SentenceId& id);

struct ExtensionPremise {
  std::vector<Vertex> x, y, z;
};

struct ExtensionResult {
  bool holds = true;
  /// Premise instance with no witness w, when `holds` is false.
  std::optional<ExtensionPremise> counterexample;
  /// Number of premise instances (X, Y, Z) examined.
  std::size_t premises = 0;
};

/// For all pairwise-disjoint X (|X| = q), Y (|Y| = p), Z (|Z| = r), each a
/// set of points at mutual distance 2, with every X-Y, X-Z and Y-Z distance
/// different from 2: some w has d(w,x) = 1, d(w,y) = 2, d(w,z) = 3 for all
/// members. Stops at the first premise without a witness.
ExtensionResult eval_extension_axiom(const MetricSpace& s, std::size_t q, std::size_t p,
                                     std::size_t r);

/// Every vertex has some vertex at distance 3.
bool check_divergence_witness(const MetricSpace& s);

/// Size of a largest set of vertex-disjoint 3-edges.
std::size_t three_edge_matching(const MetricSpace& s);

struct ProportionRow {
  std::size_t n = 0;
  ClassId cls = ClassId::A1;
  SentenceId sentence;
  Ensemble ensemble = Ensemble::unlabeled;
  BigInt numerator;
  BigInt denominator;
  Rational value;
};

enum class ProportionMethod { analytic, direct };

inline constexpr std::size_t kAnalyticA1MaxN = 200;
inline constexpr std::size_t kDirectMaxN = 7;

/// Exact satisfaction ratio over the class at size n. `analytic` walks the
/// isometry-class descriptors (weight 1 or n!/|Aut|); `direct` evaluates
/// eval_sentence on every labeled member, or on one member per canonical
/// key for the unlabeled ensemble. Throws CapacityError beyond the
/// per-route limits.
ProportionRow proportion(std::size_t n, ClassId cls, const SentenceId& s, Ensemble ensemble,
                         ProportionMethod method = ProportionMethod::analytic);

struct ConvergenceTable {
  std::vector<ProportionRow> rows;
  /// Least n in range with value >= 99/100.
  std::optional<std::size_t> first_n_reaching;
};

ConvergenceTable convergence_table(ClassId cls, const SentenceId& s, std::size_t n_from,
                                   std::size_t n_to, Ensemble ensemble,
                                   ProportionMethod method = ProportionMethod::analytic);

}  // namespace mhg
