// Independent test-side oracles. Nothing here calls into the library's
// algorithms beyond the MetricSpace container.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "mhg/class_spec.hpp"
#include "mhg/metric_space.hpp"

namespace oracle {

using mhg::ClassId;
using mhg::MetricSpace;
using mhg::Vertex;

// Triangle admissibility straight from the class parameters: triangle
// inequality, no odd perimeter (K1 infinite), even perimeter below C'.
inline bool triangle_ok(ClassId cls, int a, int b, int c) {
  const int c_prime = cls == ClassId::A1 ? 8 : 10;
  const int p = a + b + c;
  if (a + b < c || a + c < b || b + c < a) return false;
  if (p % 2 == 1) return false;
  return p < c_prime;
}

inline bool member(const MetricSpace& s, ClassId cls) {
  const std::size_t n = s.size();
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      for (Vertex k = j + 1; k < n; ++k)
        if (!triangle_ok(cls, s(i, j), s(i, k), s(j, k))) return false;
  return true;
}

inline std::vector<MetricSpace> all_spaces(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> cells;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  std::size_t total = 1;
  for (std::size_t c = 0; c < cells.size(); ++c) total *= 3;
  std::vector<MetricSpace> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    MetricSpace s(n);
    std::size_t x = code;
    for (const auto& [i, j] : cells) {
      s.set(i, j, static_cast<mhg::Distance>(1 + x % 3));
      x /= 3;
    }
    out.push_back(s);
  }
  return out;
}

inline std::vector<MetricSpace> members(std::size_t n, ClassId cls) {
  std::vector<MetricSpace> out;
  for (auto& s : all_spaces(n))
    if (member(s, cls)) out.push_back(s);
  return out;
}

// 4-byte big-endian n, then d(o[i], o[j]) for j = 1.., i < j.
inline std::vector<std::uint8_t> key_for(const MetricSpace& s, const std::vector<Vertex>& o) {
  const std::size_t n = s.size();
  std::vector<std::uint8_t> k{static_cast<std::uint8_t>(n >> 24), static_cast<std::uint8_t>(n >> 16),
                              static_cast<std::uint8_t>(n >> 8), static_cast<std::uint8_t>(n)};
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) k.push_back(s(o[i], o[j]));
  return k;
}

inline std::vector<std::uint8_t> min_key(const MetricSpace& s) {
  std::vector<Vertex> p(s.size());
  std::iota(p.begin(), p.end(), Vertex{0});
  auto best = key_for(s, p);
  while (std::next_permutation(p.begin(), p.end())) best = std::min(best, key_for(s, p));
  return best;
}

inline std::uint64_t automorphisms(const MetricSpace& s) {
  const std::size_t n = s.size();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (Vertex i = 0; i < n && ok; ++i)
      for (Vertex j = 0; j < n && ok; ++j) ok = s(i, j) == s(p[i], p[j]);
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline std::size_t classes(const std::vector<MetricSpace>& spaces) {
  std::set<std::vector<std::uint8_t>> keys;
  for (const auto& s : spaces) keys.insert(min_key(s));
  return keys.size();
}

// Orbits of rows x cols 0/1 matrices under row and column permutations
// (and transposition when requested), by explicit orbit minima.
inline std::size_t matrix_orbits(std::size_t rows, std::size_t cols, bool transpose) {
  std::set<std::vector<int>> seen;
  const std::size_t cells = rows * cols;
  for (std::size_t code = 0; code < (std::size_t{1} << cells); ++code) {
    std::vector<int> m(cells);
    for (std::size_t c = 0; c < cells; ++c) m[c] = (code >> c) & 1;
    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::vector<int> best;
    bool first = true;
    do {
      std::iota(cp.begin(), cp.end(), 0);
      do {
        for (int t = 0; t < (transpose ? 2 : 1); ++t) {
          std::vector<int> img(cells);
          for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
              img[r * cols + c] = t == 0 ? m[rp[r] * cols + cp[c]] : m[cp[c] * cols + rp[r]];
          if (first || img < best) best = img;
          first = false;
        }
      } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    seen.insert(best);
  }
  return seen.size();
}

// Quantifier-by-quantifier sentence checks, following the written formulas.

inline std::vector<std::vector<Vertex>> injective_tuples(std::size_t n, std::size_t len) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  std::vector<bool> used(n, false);
  auto go = [&](auto&& self) -> void {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = false;
    }
  };
  go(go);
  return out;
}

// atom d(a,b) = d with identical pairs false
inline bool atom(const MetricSpace& s, Vertex a, Vertex b, int d) { return a != b && s(a, b) == d; }

inline bool pairs_literal(const MetricSpace& s, std::size_t p) {
  for (const auto& u : injective_tuples(s.size(), p))
    for (const auto& v : injective_tuples(s.size(), p)) {
      bool ok = true;
      for (std::size_t i = 0; i < p && ok; ++i) ok = atom(s, u[i], v[i], 3);
      if (ok) return true;
    }
  return false;
}

// u's: p distinct vertices, each with no w != u at distance 3.
inline bool three_free(const MetricSpace& s, Vertex u) {
  for (Vertex w = 0; w < s.size(); ++w)
    if (w != u && atom(s, u, w, 3)) return false;
  return true;
}

inline bool ones_labeled_literal(const MetricSpace& s, std::size_t p) {
  for (const auto& u : injective_tuples(s.size(), p))
    if (std::all_of(u.begin(), u.end(), [&](Vertex x) { return three_free(s, x); })) return true;
  return false;
}

inline bool ones_unlabeled_literal(const MetricSpace& s, std::size_t p) {
  return ones_labeled_literal(s, 2 * p);
}

inline bool ones_unlabeled_gloss(const MetricSpace& s, std::size_t p) {
  const std::size_t n = s.size();
  for (const auto& u : injective_tuples(n, p))
    for (const auto& v : injective_tuples(n, p)) {
      bool ok = true;
      for (std::size_t i = 0; i < p && ok; ++i) ok = three_free(s, u[i]) && three_free(s, v[i]);
      for (std::size_t i = 0; i < p && ok; ++i)
        for (std::size_t j = 0; j < p && ok; ++j) {
          if (i != j) ok = atom(s, u[i], u[j], 2) && atom(s, v[i], v[j], 2);
          if (ok) ok = u[i] != v[j] && !atom(s, u[i], v[j], 2);
        }
      if (ok) return true;
    }
  return false;
}

inline bool extension(const MetricSpace& s, std::size_t q, std::size_t p, std::size_t r) {
  const std::size_t n = s.size();
  auto clique = [&](const std::vector<Vertex>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (i != j && !atom(s, a[i], a[j], 2)) return false;
    return true;
  };
  auto apart = [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex x : a)
      for (Vertex y : b)
        if (x == y || atom(s, x, y, 2)) return false;
    return true;
  };
  for (const auto& x : injective_tuples(n, q)) {
    if (!clique(x)) continue;
    for (const auto& y : injective_tuples(n, p)) {
      if (!clique(y) || !apart(x, y)) continue;
      for (const auto& z : injective_tuples(n, r)) {
        if (!clique(z) || !apart(x, z) || !apart(y, z)) continue;
        bool found = false;
        for (Vertex w = 0; w < n && !found; ++w) {
          bool ok = true;
          for (Vertex a : x) ok = ok && atom(s, w, a, 1);
          for (Vertex a : y) ok = ok && atom(s, w, a, 2);
          for (Vertex a : z) ok = ok && atom(s, w, a, 3);
          found = ok;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
