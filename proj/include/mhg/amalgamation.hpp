#pragma once

#include <cstddef>
#include <vector>

#include "mhg/class_spec.hpp"
#include "mhg/metric_space.hpp"

namespace mhg {

/// Base B with one-point extensions B+x and B+y (the new point is last)
/// that admit no amalgam in the class.
struct AmalgamationFailure {
  MetricSpace base;
  MetricSpace with_x;
  MetricSpace with_y;
};

struct AmalgamationReport {
  ClassId cls = ClassId::A1;
  std::size_t base_max = 0;
  std::size_t bases = 0;
  /// Unordered extension pairs examined (x = y included).
  std::size_t pairs = 0;
  /// Pairs amalgamated with x and y kept distinct for some d(x,y).
  std::size_t strong = 0;
  /// Pairs amalgamated only by identifying x with y (equal distance
  /// vectors to B, no valid d(x,y)).
  std::size_t identified = 0;
  std::vector<AmalgamationFailure> failures;
};

inline constexpr std::size_t kAmalgamationMaxBase = 5;

/// Exhaustive over labeled bases of size 0..base_max and all unordered
/// pairs of one-point extensions. CapacityError above kAmalgamationMaxBase.
AmalgamationReport amalgamation_check(ClassId cls, std::size_t base_max);

}  // namespace mhg
