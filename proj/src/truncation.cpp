#include "mhg/truncation.hpp"

#include <stdexcept>

#include "mhg/rng.hpp"

namespace mhg {

std::string_view limit_name(Limit l) {
  switch (l) {
    case Limit::gamma_378: return "g378";
    case Limit::gamma_as: return "gas";
    case Limit::gamma_3710: return "g3710";
  }
  return "";
}

std::optional<Limit> parse_limit(std::string_view s) {
  for (Limit l : {Limit::gamma_378, Limit::gamma_as, Limit::gamma_3710})
    if (limit_name(l) == s) return l;
  return std::nullopt;
}

ClassId limit_class(Limit l) { return l == Limit::gamma_3710 ? ClassId::A2 : ClassId::A1; }

namespace {

MetricSpace matched(std::size_t side, std::size_t pairs) {
  MetricSpace s(2 * side);
  for (Vertex i = 0; i < side; ++i)
    for (Vertex j = 0; j < side; ++j) s.set(i, side + j, (i == j && i < pairs) ? 3 : 1);
  return s;
}

}  // namespace

MetricSpace build_truncation(const TruncationSpec& spec) {
  MetricSpace s;
  switch (spec.limit) {
    case Limit::gamma_378:
      s = matched(spec.m, spec.m);
      break;
    case Limit::gamma_as:
      s = matched(spec.t + spec.u, spec.t);
      break;
    case Limit::gamma_3710: {
      s = MetricSpace(2 * spec.m);
      Rng rng(spec.seed);
      for (Vertex i = 0; i < spec.m; ++i)
        for (Vertex j = 0; j < spec.m; ++j) s.set(i, spec.m + j, rng.coin() ? 3 : 1);
      break;
    }
  }
  const auto verdict = validate(s, limit_class(spec.limit));
  if (!verdict) throw MembershipError(limit_class(spec.limit), *verdict.witness);
  return s;
}

}  // namespace mhg
