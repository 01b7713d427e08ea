#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mhg/errors.hpp"

namespace mhg {

using Vertex = std::size_t;
using Distance = std::uint8_t;

/// Finite metric space with distances in {1,2,3}, stored as a dense
/// symmetric matrix with a zero diagonal. Vertices are 0-based indices.
class MetricSpace {
 public:
  MetricSpace() = default;

  /// n points, every off-diagonal distance set to `fill` (default 2, the
  /// single 2-clique).
  explicit MetricSpace(std::size_t n, Distance fill = 2);

  /// Checked construction from a full matrix; throws StructuralError.
  static MetricSpace from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  Distance operator()(Vertex i, Vertex j) const noexcept { return d_[i * n_ + j]; }

  /// Sets d(i,j) = d(j,i) = d. Requires i != j and d in {1,2,3}.
  void set(Vertex i, Vertex j, Distance d);

  /// Relabels so that new vertex i is old vertex order[i].
  MetricSpace permuted(const std::vector<Vertex>& order) const;

  /// Swaps every 1 and 3; 2s are untouched.
  MetricSpace swap_ones_and_threes() const;

  /// Upper-triangle entries in row-major order.
  std::vector<Distance> upper_triangle() const;

  const std::vector<Distance>& raw() const noexcept { return d_; }

  friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

/// Throws StructuralError if the matrix is asymmetric, has a nonzero
/// diagonal, or an off-diagonal entry outside {1,2,3}.
void check_well_formed(const MetricSpace& s);

// Text format: "n=<int>" then n rows of n space-separated digits.

void write_text(std::ostream& out, const MetricSpace& s);
std::string to_text(const MetricSpace& s);

/// Parses exactly one block. Throws StructuralError on any deviation.
MetricSpace parse_text(std::string_view text);

/// Reads the next block from a stream of concatenated blocks; blank lines
/// and '#' comment lines between blocks are skipped. Returns nullopt at end of input.
std::optional<MetricSpace> read_text(std::istream& in);

std::vector<MetricSpace> read_all_text(std::istream& in);

}  // namespace mhg
