#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mhg/class_spec.hpp"
#include "mhg/metric_space.hpp"

namespace mhg {

/// rows x cols matrix of between-part distances, entries in {1,3}, row-major.
struct CrossMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Distance> cells;

  CrossMatrix() = default;
  CrossMatrix(std::size_t r, std::size_t c, Distance fill = 1)
      : rows(r), cols(c), cells(r * c, fill) {}

  Distance operator()(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
  Distance& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }

  CrossMatrix transposed() const;
  std::size_t count(Distance d) const;

  friend bool operator==(const CrossMatrix&, const CrossMatrix&) = default;
  friend auto operator<=>(const CrossMatrix&, const CrossMatrix&) = default;
};

/// Decomposition of a class member into its (at most two) maximal 2-cliques.
/// `first` is the smaller part (size k); on a tie it is the part that does
/// not contain vertex 0.
struct BipartiteForm {
  std::size_t k = 0;
  std::vector<std::uint8_t> part_of;  // vertex -> 0 (first) or 1 (second)
  std::vector<Vertex> first;          // ascending
  std::vector<Vertex> second;         // ascending
  CrossMatrix cross;                  // rows index `first`, cols index `second`

  std::size_t size() const noexcept { return first.size() + second.size(); }
  bool balanced() const noexcept { return first.size() == second.size(); }

  /// Rebuilds the source space exactly.
  MetricSpace recompose() const;
};

/// Throws MembershipError (with the forbidden triple) for non-members.
BipartiteForm bipartite_decompose(const MetricSpace& s, const ClassSpec& cls);
inline BipartiteForm bipartite_decompose(const MetricSpace& s, ClassId id) {
  return bipartite_decompose(s, ClassSpec::get(id));
}

/// Space whose first part is vertices [0, rows) and second part
/// [rows, rows + cols), with the given cross distances.
MetricSpace space_from_cross(const CrossMatrix& cross);

/// Canonical representative of a cross matrix under independent row and
/// column permutations (and transposition when allowed, for square
/// matrices). The representative is the row-major minimum, over all row
/// orders, of the matrix whose columns have been sorted as top-to-bottom
/// vectors. `row_order[i]` / `col_order[j]` give the source row / column
/// placed at position i / j (indices into the transposed source when
/// `transposed` is set).
struct CanonicalCross {
  CrossMatrix matrix;
  bool transposed = false;
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> col_order;
};

inline constexpr std::size_t kMaxCanonicalRows = 10;

/// Throws CapacityError when rows > kMaxCanonicalRows.
CanonicalCross canonicalize_cross(const CrossMatrix& m, bool allow_transpose);

}  // namespace mhg
