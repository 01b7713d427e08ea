#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhg/metric_space.hpp"

namespace mhg {

enum class ClassId { A1, A2 };

/// Sorted distance multiset of a triple.
using Triangle = std::array<Distance, 3>;

Triangle make_triangle(Distance a, Distance b, Distance c);

/// Forbidden-triangle parameters (delta, K1, K2, C, C'). K1 is infinite for
/// both classes; `k1` is left empty to encode that.
struct ClassParams {
  int delta = 3;
  std::optional<int> k1;
  int k2 = 0;
  int c = 7;
  int c_prime = 8;
};

struct ClassSpec {
  ClassId id;
  std::vector<Triangle> allowed_triangles;
  ClassParams params;

  bool allows(const Triangle& t) const;

  static const ClassSpec& a1();
  static const ClassSpec& a2();
  static const ClassSpec& get(ClassId id);
};

std::string_view class_name(ClassId id);       // "a1" / "a2"
std::optional<ClassId> parse_class(std::string_view s);

struct TripleWitness {
  Vertex i, j, k;
  Triangle triangle;
};

struct Membership {
  bool member = true;
  std::optional<TripleWitness> witness;

  explicit operator bool() const noexcept { return member; }
};

/// Checks every 3-subset against the class's allowed triangles and reports
/// the first offending triple in (i<j<k) lexicographic order. Throws
/// StructuralError for malformed input.
Membership validate(const MetricSpace& s, const ClassSpec& cls);
inline Membership validate(const MetricSpace& s, ClassId id) {
  return validate(s, ClassSpec::get(id));
}

/// Non-member passed where membership is required.
class MembershipError : public std::invalid_argument {
 public:
  MembershipError(ClassId cls, TripleWitness w);
  const TripleWitness& witness() const noexcept { return witness_; }

 private:
  TripleWitness witness_;
};

}  // namespace mhg
