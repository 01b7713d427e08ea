#include "mhg/automorphism.hpp"

#include <algorithm>
#include <numeric>

namespace mhg {

std::vector<int> refine_coloring(const MetricSpace& s, const std::vector<Vertex>& prefix) {
  const std::size_t n = s.size();
  std::vector<int> color(n, 0);
  for (std::size_t i = 0; i < prefix.size(); ++i) color[prefix[i]] = static_cast<int>(i) + 1;

  auto count_colors = [](const std::vector<int>& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  };
  // Compact the initial ids so that the count below is meaningful.
  {
    std::vector<int> ids(color);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (auto& c : color) c = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), c) - ids.begin());
  }
  int classes = count_colors(color);

  std::vector<std::vector<int>> sig(n);
  std::vector<std::size_t> idx(n);
  while (true) {
    const auto k = static_cast<std::size_t>(classes);
    for (Vertex v = 0; v < n; ++v) {
      auto& g = sig[v];
      g.assign(1 + 3 * k, 0);
      g[0] = color[v];
      for (Vertex u = 0; u < n; ++u) {
        if (u == v) continue;
        ++g[1 + (s(v, u) - 1) * k + static_cast<std::size_t>(color[u])];
      }
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
    std::vector<int> next(n, 0);
    int rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
      next[idx[i]] = rank;
    }
    const int next_classes = n ? rank + 1 : 0;
    color.swap(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return color;
}

namespace {

std::vector<std::size_t> histogram(const std::vector<int>& color) {
  std::vector<std::size_t> h;
  for (int c : color) {
    if (static_cast<std::size_t>(c) >= h.size()) h.resize(static_cast<std::size_t>(c) + 1, 0);
    ++h[static_cast<std::size_t>(c)];
  }
  return h;
}

// First colour class with more than one vertex, or -1 if discrete.
int target_cell(const std::vector<std::size_t>& h) {
  for (std::size_t c = 0; c < h.size(); ++c)
    if (h[c] > 1) return static_cast<int>(c);
  return -1;
}

bool is_isometry(const MetricSpace& s, const std::vector<Vertex>& image) {
  const std::size_t n = s.size();
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (s(i, j) != s(image[i], image[j])) return false;
  return true;
}

bool search(const MetricSpace& s, std::vector<Vertex>& from, std::vector<Vertex>& to) {
  const auto left = refine_coloring(s, from);
  const auto right = refine_coloring(s, to);
  const auto hl = histogram(left);
  if (hl != histogram(right)) return false;

  const int cell = target_cell(hl);
  if (cell < 0) {
    std::vector<Vertex> by_color(s.size());
    for (Vertex u = 0; u < s.size(); ++u) by_color[static_cast<std::size_t>(right[u])] = u;
    std::vector<Vertex> image(s.size());
    for (Vertex v = 0; v < s.size(); ++v) image[v] = by_color[static_cast<std::size_t>(left[v])];
    return is_isometry(s, image);
  }

  Vertex x = 0;
  while (left[x] != cell) ++x;
  for (Vertex y = 0; y < s.size(); ++y) {
    if (right[y] != cell) continue;
    from.push_back(x);
    to.push_back(y);
    const bool found = search(s, from, to);
    from.pop_back();
    to.pop_back();
    if (found) return true;
  }
  return false;
}

}  // namespace

bool exists_isometry_extending(const MetricSpace& s, const std::vector<Vertex>& from,
                               const std::vector<Vertex>& to) {
  if (from.size() != to.size()) return false;
  std::vector<Vertex> a(from), b(to);
  return search(s, a, b);
}

BigInt automorphism_count(const MetricSpace& s) {
  check_well_formed(s);
  BigInt order = 1;
  std::vector<Vertex> fixed;
  while (true) {
    const auto color = refine_coloring(s, fixed);
    const int cell = target_cell(histogram(color));
    if (cell < 0) break;
    Vertex v = 0;
    while (color[v] != cell) ++v;
    std::size_t orbit = 1;
    std::vector<Vertex> from(fixed), to(fixed);
    from.push_back(v);
    to.push_back(v);
    for (Vertex u = 0; u < s.size(); ++u) {
      if (u == v || color[u] != cell) continue;
      to.back() = u;
      if (exists_isometry_extending(s, from, to)) ++orbit;
    }
    order *= orbit;
    fixed.push_back(v);
  }
  return order;
}

BigInt automorphism_count_bruteforce(const MetricSpace& s) {
  if (s.size() > kBruteForceAutomorphismLimit) {
    throw CapacityError("brute-force automorphism count limited to n <= " +
                        std::to_string(kBruteForceAutomorphismLimit));
  }
  check_well_formed(s);
  std::vector<Vertex> p(s.size());
  std::iota(p.begin(), p.end(), 0);
  BigInt count = 0;
  do {
    if (is_isometry(s, p)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

bool is_asymmetric(const MetricSpace& s) {
  if (target_cell(histogram(refine_coloring(s, {}))) < 0) return true;
  return automorphism_count(s) == 1;
}

BigInt a1_automorphism_formula(std::size_t k, std::size_t m, std::size_t j) {
  if (k + m == 0) return 1;
  BigInt r = factorial(j) * factorial(k - j) * factorial(m - j);
  if (k == m) r *= 2;
  return r;
}

}  // namespace mhg
