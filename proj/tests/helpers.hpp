#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "mhg/metric_space.hpp"

namespace testing_support {

inline std::vector<mhg::Vertex> random_permutation(std::size_t n, std::mt19937_64& g) {
  std::vector<mhg::Vertex> p(n);
  std::iota(p.begin(), p.end(), mhg::Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[g() % i]);
  return p;
}

inline mhg::MetricSpace random_space(std::size_t n, std::mt19937_64& g) {
  mhg::MetricSpace s(n);
  for (mhg::Vertex i = 0; i < n; ++i)
    for (mhg::Vertex j = i + 1; j < n; ++j) s.set(i, j, static_cast<mhg::Distance>(1 + g() % 3));
  return s;
}

// A2 member with parts [0,k) and [k,n), cross entries from g.
inline mhg::MetricSpace random_a2(std::size_t n, std::size_t k, std::mt19937_64& g) {
  mhg::MetricSpace s(n);
  for (mhg::Vertex i = 0; i < k; ++i)
    for (mhg::Vertex j = k; j < n; ++j) s.set(i, j, (g() & 1) ? 3 : 1);
  return s;
}

}  // namespace testing_support
