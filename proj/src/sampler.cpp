#include "mhg/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "mhg/automorphism.hpp"
#include "mhg/enumeration.hpp"
#include "mhg/errors.hpp"

namespace mhg {

namespace {

// Uniform `size`-subset of `pool` (partial Fisher-Yates), order as drawn.
std::vector<Vertex> draw_subset(std::vector<Vertex> pool, std::size_t size, Rng& rng) {
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  return pool;
}

BigInt cross_count(ClassId cls, std::size_t k, std::size_t m) {
  if (cls == ClassId::A2) return pow2(k * m);
  BigInt total = 0;
  for (std::size_t j = 0; j <= std::min(k, m); ++j) total += a1_cross_count(k, m, j);
  return total;
}

// Fills the cross distances between `a` and `b`.
void fill_cross(MetricSpace& s, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                ClassId cls, Rng& rng) {
  for (Vertex u : a)
    for (Vertex v : b) s.set(u, v, 1);
  if (cls == ClassId::A2) {
    for (Vertex u : a)
      for (Vertex v : b)
        if (rng.coin()) s.set(u, v, 3);
    return;
  }
  const std::size_t k = a.size(), m = b.size();
  BigInt x = rng.below(cross_count(cls, k, m));
  std::size_t j = 0;
  for (;; ++j) {
    const BigInt w = a1_cross_count(k, m, j);
    if (x < w) break;
    x -= w;
  }
  // ordered j-subsets of each side give a uniform matching
  const auto rows = draw_subset(a, j, rng);
  const auto cols = draw_subset(b, j, rng);
  for (std::size_t i = 0; i < j; ++i) s.set(rows[i], cols[i], 3);
}

}  // namespace

std::string_view model_name(SamplerModel m) {
  return m == SamplerModel::uniform_labeled ? "uniform_labeled" : "fixed_partition";
}

MetricSpace sample_uniform_labeled(std::size_t n, ClassId cls, Rng& rng) {
  if (n == 0) return MetricSpace(0);
  BigInt x = rng.below(count_labeled_exact(n, cls));
  std::size_t k = 0;
  for (;; ++k) {
    BigInt w = binomial(n, k) * cross_count(cls, k, n - k);
    if (2 * k == n) w /= 2;
    if (x < w || 2 * (k + 1) > n) break;
    x -= w;
  }
  MetricSpace s(n);
  std::vector<Vertex> pool;
  for (Vertex v = (2 * k == n) ? 1 : 0; v < n; ++v) pool.push_back(v);
  auto first = draw_subset(pool, k, rng);
  std::sort(first.begin(), first.end());
  std::vector<Vertex> second;
  for (Vertex v = 0; v < n; ++v)
    if (!std::binary_search(first.begin(), first.end(), v)) second.push_back(v);
  fill_cross(s, first, second, cls, rng);
  return s;
}

MetricSpace sample_fixed_partition(std::size_t n, std::size_t k, ClassId cls, Rng& rng) {
  if (2 * k > n) {
    throw std::invalid_argument("fixed_partition requires k <= n - k (k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + ")");
  }
  MetricSpace s(n);
  std::vector<Vertex> a(k), b(n - k);
  std::iota(a.begin(), a.end(), Vertex{0});
  std::iota(b.begin(), b.end(), k);
  fill_cross(s, a, b, cls, rng);
  return s;
}

MetricSpace sample(const SamplerConfig& c) {
  Rng rng(c.seed);
  if (c.model == SamplerModel::uniform_labeled) return sample_uniform_labeled(c.n, c.cls, rng);
  return sample_fixed_partition(c.n, c.k, c.cls, rng);
}

AsymmetryEstimate estimate_asymmetric_fraction(std::size_t n, ClassId cls, std::size_t samples,
                                               std::uint64_t seed, std::size_t workers) {
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  workers = std::max<std::size_t>(1, std::min(workers, samples));
  std::vector<std::size_t> hits(workers, 0);
  auto run = [&](std::size_t w) {
    const std::size_t quota = samples / workers + (w < samples % workers ? 1 : 0);
    Rng rng(derive_seed(seed, w));
    for (std::size_t i = 0; i < quota; ++i)
      if (is_asymmetric(sample_uniform_labeled(n, cls, rng))) ++hits[w];
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  AsymmetryEstimate e;
  e.n = n;
  e.cls = cls;
  e.mode = AsymmetryMode::sampled;
  e.hits = std::accumulate(hits.begin(), hits.end(), std::size_t{0});
  e.samples = samples;
  e.estimate = Rational(e.hits, e.samples);
  return e;
}

AsymmetryEstimate exact_asymmetric_fraction(std::size_t n, ClassId cls) {
  if (n > kExactAsymmetryMaxN) {
    throw CapacityError("exact asymmetry is limited to n <= " + std::to_string(kExactAsymmetryMaxN));
  }
  AsymmetryEstimate e;
  e.n = n;
  e.cls = cls;
  e.mode = AsymmetryMode::exact;
  for_each_labeled(n, cls, [&](const MetricSpace& s) {
    e.samples += 1;
    if (is_asymmetric(s)) e.hits += 1;
  });
  e.estimate = Rational(e.hits, e.samples);
  return e;
}

}  // namespace mhg
