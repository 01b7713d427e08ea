#include "mhg/burnside.hpp"

#include <numeric>

namespace mhg {

namespace {

void partitions_rec(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::size_t cycle_pair_orbits(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t total = 0;
  for (auto x : a)
    for (auto y : b) total += std::gcd(x, y);
  return total;
}

// Permutation with the given cycle type, cycles laid out consecutively.
std::vector<std::size_t> permutation_of_type(const std::vector<std::size_t>& parts) {
  std::vector<std::size_t> p;
  std::size_t start = 0;
  for (auto len : parts) {
    for (std::size_t i = 0; i < len; ++i) p.push_back(start + (i + 1) % len);
    start += len;
  }
  return p;
}

// Cycles of the cell map (a, b) -> (b, rho(a)) on k x k cells. Every element
// (sigma, tau) composed with transposition is conjugate to (id, rho)
// composed with transposition where rho is conjugate to sigma * tau.
std::size_t transpose_cell_cycles(const std::vector<std::size_t>& rho) {
  const std::size_t k = rho.size();
  std::vector<bool> seen(k * k, false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < k * k; ++start) {
    if (seen[start]) continue;
    ++cycles;
    std::size_t cell = start;
    while (!seen[cell]) {
      seen[cell] = true;
      const std::size_t a = cell / k, b = cell % k;
      cell = b * k + rho[a];
    }
  }
  return cycles;
}

// Sum over S_rows x S_cols of fixed-matrix counts.
BigInt fixed_point_sum(std::size_t rows, std::size_t cols) {
  const auto pr = integer_partitions(rows);
  const auto pc = integer_partitions(cols);
  const BigInt fr = factorial(rows), fc = factorial(cols);
  std::vector<BigInt> class_r, class_c;
  for (const auto& l : pr) class_r.push_back(fr / centralizer_order(l));
  for (const auto& m : pc) class_c.push_back(fc / centralizer_order(m));
  BigInt sum = 0;
  for (std::size_t i = 0; i < pr.size(); ++i)
    for (std::size_t j = 0; j < pc.size(); ++j)
      sum += class_r[i] * class_c[j] * pow2(cycle_pair_orbits(pr[i], pc[j]));
  return sum;
}

}  // namespace

std::vector<std::vector<std::size_t>> integer_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

BigInt centralizer_order(const std::vector<std::size_t>& parts) {
  BigInt z = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const std::size_t mult = j - i;
    for (std::size_t t = 0; t < mult; ++t) z *= parts[i];
    z *= factorial(mult);
    i = j;
  }
  return z;
}

BigInt binary_matrix_orbits(std::size_t rows, std::size_t cols) {
  return fixed_point_sum(rows, cols) / (factorial(rows) * factorial(cols));
}

BigInt square_binary_matrix_orbits_with_transpose(std::size_t k) {
  const BigInt fk = factorial(k);
  BigInt swapped = 0;
  for (const auto& l : integer_partitions(k)) {
    swapped += (fk / centralizer_order(l)) * fk * pow2(transpose_cell_cycles(permutation_of_type(l)));
  }
  return (fixed_point_sum(k, k) + swapped) / (2 * fk * fk);
}

}  // namespace mhg
