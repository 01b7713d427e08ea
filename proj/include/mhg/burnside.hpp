#pragma once

#include <cstddef>
#include <vector>

#include "mhg/bigint.hpp"

namespace mhg {

/// Integer partitions of n in nonincreasing part order.
std::vector<std::vector<std::size_t>> integer_partitions(std::size_t n);

/// Size of the centralizer of a permutation with cycle type `parts`
/// (n!/z is the size of its conjugacy class).
BigInt centralizer_order(const std::vector<std::size_t>& parts);

/// Number of rows x cols binary matrices up to independent row and column
/// permutations, by Burnside's lemma over S_rows x S_cols summed by cycle
/// type: a pair of cycles of lengths a, b fixes gcd(a, b) cell orbits.
BigInt binary_matrix_orbits(std::size_t rows, std::size_t cols);

/// Number of k x k binary matrices up to row permutations, column
/// permutations and transposition.
BigInt square_binary_matrix_orbits_with_transpose(std::size_t k);

/// Largest n accepted by the unlabeled A2 counter.
inline constexpr std::size_t kBurnsideMaxN = 40;

}  // namespace mhg
