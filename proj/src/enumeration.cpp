#include "mhg/enumeration.hpp"

#include <algorithm>
#include <set>

#include "mhg/automorphism.hpp"
#include "mhg/burnside.hpp"
#include "mhg/canonical.hpp"

namespace mhg {

std::string_view mode_name(CountMode m) { return m == CountMode::labeled ? "labeled" : "unlabeled"; }

std::optional<CountMode> parse_mode(std::string_view s) {
  if (s == "labeled") return CountMode::labeled;
  if (s == "unlabeled") return CountMode::unlabeled;
  return std::nullopt;
}

std::vector<MetricSpace> enumerate_labeled_oracle(std::size_t n, ClassId cls, bool force) {
  if (n > kOracleMaxN && !force) {
    throw CapacityError("brute-force oracle limited to n <= " + std::to_string(kOracleMaxN) +
                        " (use force to override)");
  }
  const ClassSpec& spec = ClassSpec::get(cls);
  std::vector<std::pair<Vertex, Vertex>> cells;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) cells.emplace_back(i, j);

  std::vector<MetricSpace> out;
  MetricSpace s(n, 1);
  std::vector<Distance> digits(cells.size(), 1);
  while (true) {
    if (validate(s, spec)) out.push_back(s);
    // Odometer with the last cell least significant.
    std::size_t pos = cells.size();
    while (pos > 0 && digits[pos - 1] == 3) {
      digits[pos - 1] = 1;
      s.set(cells[pos - 1].first, cells[pos - 1].second, 1);
      --pos;
    }
    if (pos == 0) break;
    ++digits[pos - 1];
    s.set(cells[pos - 1].first, cells[pos - 1].second, digits[pos - 1]);
  }
  return out;
}

namespace {

// Fills cross cells of `s` between `first` and `second`, then visits.
class CrossFiller {
 public:
  CrossFiller(ClassId cls, MetricSpace& s, const std::vector<Vertex>& first,
              const std::vector<Vertex>& second,
              const std::function<void(const MetricSpace&)>& visit)
      : cls_(cls), s_(s), first_(first), second_(second), visit_(visit),
        col_used_(second.size(), false) {}

  void run() {
    if (cls_ == ClassId::A1)
      matching(0);
    else
      free_cells(0);
  }

 private:
  void matching(std::size_t row) {
    if (row == first_.size()) {
      visit_(s_);
      return;
    }
    for (std::size_t c = 0; c < second_.size(); ++c) s_.set(first_[row], second_[c], 1);
    matching(row + 1);
    for (std::size_t c = 0; c < second_.size(); ++c) {
      if (col_used_[c]) continue;
      col_used_[c] = true;
      s_.set(first_[row], second_[c], 3);
      matching(row + 1);
      s_.set(first_[row], second_[c], 1);
      col_used_[c] = false;
    }
  }

  void free_cells(std::size_t cell) {
    const std::size_t m = second_.size();
    if (cell == first_.size() * m) {
      visit_(s_);
      return;
    }
    const Vertex a = first_[cell / m], b = second_[cell % m];
    s_.set(a, b, 1);
    free_cells(cell + 1);
    s_.set(a, b, 3);
    free_cells(cell + 1);
    s_.set(a, b, 1);
  }

  ClassId cls_;
  MetricSpace& s_;
  const std::vector<Vertex>& first_;
  const std::vector<Vertex>& second_;
  const std::function<void(const MetricSpace&)>& visit_;
  std::vector<bool> col_used_;
};

// Calls f(first, second) for every k-subset `first` of [0, n).
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<Vertex> chosen;
  std::vector<bool> in(n, false);
  auto rec = [&](auto&& self, Vertex start) -> void {
    if (chosen.size() == k) {
      std::vector<Vertex> second;
      for (Vertex v = 0; v < n; ++v)
        if (!in[v]) second.push_back(v);
      f(chosen, second);
      return;
    }
    for (Vertex v = start; v + (k - chosen.size()) <= n; ++v) {
      chosen.push_back(v);
      in[v] = true;
      self(self, v + 1);
      in[v] = false;
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

void for_each_labeled(std::size_t n, ClassId cls,
                      const std::function<void(const MetricSpace&)>& visit) {
  if (n == 0) {
    visit(MetricSpace(0));
    return;
  }
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const bool balanced = 2 * k == n;
    for_each_subset(n, k, [&](const std::vector<Vertex>& first, const std::vector<Vertex>& second) {
      if (balanced && first.front() == 0) return;  // vertex 0 stays in the second part
      MetricSpace s(n, 2);
      CrossFiller(cls, s, first, second, visit).run();
    });
  }
}

std::vector<MetricSpace> enumerate_labeled_structured(std::size_t n, ClassId cls) {
  std::vector<MetricSpace> out;
  for_each_labeled(n, cls, [&](const MetricSpace& s) { out.push_back(s); });
  return out;
}

BigInt a1_cross_count(std::size_t k, std::size_t m, std::size_t j) {
  return binomial(k, j) * binomial(m, j) * factorial(j);
}

namespace {

// Labeled members for one ordered choice of a k-part.
BigInt per_partition(std::size_t n, std::size_t k, ClassId cls) {
  const std::size_t m = n - k;
  if (cls == ClassId::A2) return pow2(k * m);
  BigInt sum = 0;
  for (std::size_t j = 0; j <= k; ++j) sum += a1_cross_count(k, m, j);
  return sum;
}

}  // namespace

BigInt count_labeled_paper(std::size_t n, ClassId cls) {
  BigInt total = 0;
  for (std::size_t k = 0; 2 * k <= n; ++k) total += binomial(n, k) * per_partition(n, k, cls);
  return total;
}

BigInt count_labeled_exact(std::size_t n, ClassId cls) {
  BigInt total = 0;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    BigInt term = binomial(n, k) * per_partition(n, k, cls);
    if (2 * k == n) term /= 2;
    total += term;
  }
  // The k = 0 term of the empty space is "balanced" but holds one space.
  if (n == 0) total = 1;
  return total;
}

BigInt count_unlabeled_paper(std::size_t n, ClassId cls) {
  BigInt total = 0;
  for (std::size_t k = 0; 2 * k <= n; ++k) total += cls == ClassId::A1 ? BigInt(k + 1) : binomial(n, k);
  return total;
}

BigInt count_unlabeled_exact(std::size_t n, ClassId cls) {
  if (cls == ClassId::A1) {
    BigInt total = 0;
    for (std::size_t k = 0; 2 * k <= n; ++k) total += k + 1;
    return total;
  }
  if (n > kBurnsideMaxN) {
    throw CapacityError("unlabeled A2 count limited to n <= " + std::to_string(kBurnsideMaxN));
  }
  BigInt total = 1;  // k = 0
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    total += 2 * k == n ? square_binary_matrix_orbits_with_transpose(k) : binary_matrix_orbits(k, n - k);
  }
  return total;
}

BigInt count_oracle(std::size_t n, ClassId cls, CountMode mode, bool force) {
  const auto spaces = enumerate_labeled_oracle(n, cls, force);
  if (mode == CountMode::labeled) return spaces.size();
  std::set<CanonicalKey> keys;
  for (const auto& s : spaces) keys.insert(canonical_form(s));
  return keys.size();
}

BigInt IsoClassDescriptor::labeled_weight() const { return factorial(n) / aut_order; }

namespace {

std::vector<IsoClassDescriptor> unlabeled_a1(std::size_t n) {
  std::vector<IsoClassDescriptor> out;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const std::size_t m = n - k;
    for (std::size_t j = 0; j <= k; ++j) {
      CrossMatrix cross(k, m, 1);
      for (std::size_t i = 0; i < j; ++i) cross.at(i, i) = 3;
      IsoClassDescriptor d{ClassId::A1, n, k, j, cross, space_from_cross(cross),
                           a1_automorphism_formula(k, m, j)};
      out.push_back(std::move(d));
    }
  }
  return out;
}

// Canonical k x m cross matrices, built from nondecreasing sequences of
// column patterns (each a k-bit mask; bit set means distance 3).
std::set<CrossMatrix> canonical_crosses(std::size_t k, std::size_t m) {
  std::set<CrossMatrix> found;
  const std::size_t patterns = std::size_t{1} << k;
  std::vector<std::size_t> cols(m, 0);
  auto rec = [&](auto&& self, std::size_t c, std::size_t min_pattern) -> void {
    if (c == m) {
      CrossMatrix x(k, m, 1);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < k; ++i)
          if (cols[j] >> i & 1) x.at(i, j) = 3;
      found.insert(canonicalize_cross(x, k == m).matrix);
      return;
    }
    for (std::size_t p = min_pattern; p < patterns; ++p) {
      cols[c] = p;
      self(self, c + 1, p);
    }
  };
  rec(rec, 0, 0);
  return found;
}

std::vector<IsoClassDescriptor> unlabeled_a2(std::size_t n) {
  if (n > kUnlabeledA2MaxN) {
    throw CapacityError("unlabeled A2 enumeration limited to n <= " + std::to_string(kUnlabeledA2MaxN));
  }
  std::vector<IsoClassDescriptor> out;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    for (const auto& cross : canonical_crosses(k, n - k)) {
      MetricSpace rep = space_from_cross(cross);
      BigInt aut = automorphism_count(rep);
      out.push_back(IsoClassDescriptor{ClassId::A2, n, k, std::nullopt, cross, std::move(rep), std::move(aut)});
    }
  }
  return out;
}

}  // namespace

std::vector<IsoClassDescriptor> enumerate_unlabeled(std::size_t n, ClassId cls) {
  return cls == ClassId::A1 ? unlabeled_a1(n) : unlabeled_a2(n);
}

std::optional<bool> CountReport::agrees_paper() const {
  if (!paper) return std::nullopt;
  if (exact) return *paper == *exact;
  if (oracle) return *paper == *oracle;
  return std::nullopt;
}

std::optional<bool> CountReport::agrees_oracle() const {
  if (!exact || !oracle) return std::nullopt;
  return *exact == *oracle;
}

CountReport make_count_report(std::size_t n, ClassId cls, CountMode mode, CountMethods methods,
                              bool force, std::optional<BigInt> oracle_override) {
  CountReport r{n, cls, mode, std::nullopt, std::nullopt, std::nullopt};
  const bool labeled = mode == CountMode::labeled;
  if (methods.formula) r.paper = labeled ? count_labeled_paper(n, cls) : count_unlabeled_paper(n, cls);
  if (methods.exact) r.exact = labeled ? count_labeled_exact(n, cls) : count_unlabeled_exact(n, cls);
  if (methods.oracle) r.oracle = oracle_override ? *oracle_override : count_oracle(n, cls, mode, force);
  return r;
}

}  // namespace mhg
