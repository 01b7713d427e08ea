#include "mhg/amalgamation.hpp"

#include <string>

#include "mhg/enumeration.hpp"
#include "mhg/errors.hpp"

namespace mhg {

namespace {

MetricSpace extend(const MetricSpace& base, const std::vector<Distance>& to_new) {
  const std::size_t b = base.size();
  MetricSpace s(b + 1);
  for (Vertex i = 0; i < b; ++i)
    for (Vertex j = i + 1; j < b; ++j) s.set(i, j, base(i, j));
  for (Vertex i = 0; i < b; ++i) s.set(i, b, to_new[i]);
  return s;
}

std::vector<std::vector<Distance>> extensions(const MetricSpace& base, const ClassSpec& spec) {
  const std::size_t b = base.size();
  std::vector<std::vector<Distance>> out;
  std::vector<Distance> v(b, 1);
  for (;;) {
    if (validate(extend(base, v), spec)) out.push_back(v);
    std::size_t i = 0;
    while (i < b && v[i] == 3) v[i++] = 1;
    if (i == b) break;
    ++v[i];
  }
  return out;
}

}  // namespace

AmalgamationReport amalgamation_check(ClassId cls, std::size_t base_max) {
  if (base_max > kAmalgamationMaxBase) {
    throw CapacityError("amalgamation check is limited to base_max <= " +
                        std::to_string(kAmalgamationMaxBase));
  }
  const ClassSpec& spec = ClassSpec::get(cls);
  AmalgamationReport rep;
  rep.cls = cls;
  rep.base_max = base_max;
  for (std::size_t b = 0; b <= base_max; ++b) {
    for (const MetricSpace& base : enumerate_labeled_oracle(b, cls, true)) {
      ++rep.bases;
      const auto ext = extensions(base, spec);
      for (std::size_t xi = 0; xi < ext.size(); ++xi) {
        for (std::size_t yi = xi; yi < ext.size(); ++yi) {
          ++rep.pairs;
          MetricSpace amalgam(b + 2);
          for (Vertex i = 0; i < b; ++i)
            for (Vertex j = i + 1; j < b; ++j) amalgam.set(i, j, base(i, j));
          for (Vertex i = 0; i < b; ++i) {
            amalgam.set(i, b, ext[xi][i]);
            amalgam.set(i, b + 1, ext[yi][i]);
          }
          bool ok = false;
          for (Distance d = 1; d <= 3 && !ok; ++d) {
            amalgam.set(b, b + 1, d);
            ok = static_cast<bool>(validate(amalgam, spec));
          }
          if (ok) {
            ++rep.strong;
          } else if (ext[xi] == ext[yi]) {
            ++rep.identified;
          } else {
            rep.failures.push_back({base, extend(base, ext[xi]), extend(base, ext[yi])});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace mhg
