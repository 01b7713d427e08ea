#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mhg/bigint.hpp"
#include "mhg/class_spec.hpp"
#include "mhg/metric_space.hpp"
#include "mhg/rng.hpp"

namespace mhg {

enum class SamplerModel { uniform_labeled, fixed_partition };

std::string_view model_name(SamplerModel m);

struct SamplerConfig {
  std::size_t n = 0;
  ClassId cls = ClassId::A2;
  SamplerModel model = SamplerModel::uniform_labeled;
  std::size_t k = 0;  // fixed_partition only; vertices [0, k) form one part
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument when fixed_partition has k > n - k.
MetricSpace sample(const SamplerConfig& config);

/// Exactly uniform over the labeled members of size n.
MetricSpace sample_uniform_labeled(std::size_t n, ClassId cls, Rng& rng);
/// Parts [0, k) and [k, n). A2: cross entries iid uniform on {1,3}.
/// A1: uniform over partial matchings of 3-edges.
MetricSpace sample_fixed_partition(std::size_t n, std::size_t k, ClassId cls, Rng& rng);

enum class AsymmetryMode { exact, sampled };

struct AsymmetryEstimate {
  std::size_t n = 0;
  ClassId cls = ClassId::A2;
  AsymmetryMode mode = AsymmetryMode::sampled;
  BigInt hits;
  BigInt samples;
  Rational estimate;
};

inline constexpr std::size_t kExactAsymmetryMaxN = 6;

/// Fraction of uniform labeled samples with trivial automorphism group.
/// Samples are split across `workers` streams seeded by derive_seed(seed, i);
/// the result depends only on (seed, workers).
AsymmetryEstimate estimate_asymmetric_fraction(std::size_t n, ClassId cls, std::size_t samples,
                                               std::uint64_t seed, std::size_t workers = 1);

/// Exact fraction over all labeled members; CapacityError above
/// kExactAsymmetryMaxN.
AsymmetryEstimate exact_asymmetric_fraction(std::size_t n, ClassId cls);

}  // namespace mhg
