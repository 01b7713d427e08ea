#include "mhg/canonical.hpp"

#include <algorithm>

#include "mhg/bipartite.hpp"

namespace mhg {

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

namespace {

CanonicalKey encode(const MetricSpace& s, const std::vector<Vertex>& order) {
  const std::size_t n = s.size();
  CanonicalKey key;
  key.bytes.reserve(4 + n * (n ? n - 1 : 0) / 2);
  const auto n32 = static_cast<std::uint32_t>(n);
  for (int shift = 24; shift >= 0; shift -= 8) key.bytes.push_back(static_cast<std::uint8_t>(n32 >> shift));
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) key.bytes.push_back(s(order[i], order[j]));
  return key;
}

// Depth-first search over vertex orders. Placing position t appends the
// column (d(p0,pt), ..., d(p_{t-1},pt)), so a prefix that already exceeds the
// best sequence can be cut.
class MinimalOrderSearch {
 public:
  explicit MinimalOrderSearch(const MetricSpace& s) : s_(s), n_(s.size()), used_(n_, false) {}

  std::vector<Vertex> run() {
    order_.clear();
    seq_.clear();
    have_best_ = false;
    dfs();
    return best_order_;
  }

 private:
  void dfs() {
    const std::size_t t = order_.size();
    if (t == n_) {
      best_seq_ = seq_;
      best_order_ = order_;
      have_best_ = true;
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      const std::size_t mark = seq_.size();
      int cmp = 0;  // relation of the extended prefix to best; only when prefix was equal
      for (std::size_t i = 0; i < t; ++i) seq_.push_back(s_(order_[i], v));
      if (have_best_ && prefix_equal_) {
        for (std::size_t p = mark; p < seq_.size(); ++p) {
          if (seq_[p] != best_seq_[p]) {
            cmp = seq_[p] < best_seq_[p] ? -1 : 1;
            break;
          }
        }
      }
      if (cmp > 0) {
        seq_.resize(mark);
        continue;
      }
      const bool saved = prefix_equal_;
      // A strictly smaller prefix: everything below beats the current best.
      if (cmp < 0) prefix_equal_ = false;
      used_[v] = true;
      order_.push_back(v);
      if (cmp < 0) have_best_ = false;
      dfs();
      order_.pop_back();
      used_[v] = false;
      prefix_equal_ = saved;
      seq_.resize(mark);
      // After any full descent the best sequence shares this prefix again.
      if (have_best_) prefix_equal_ = prefix_matches_best(mark);
    }
  }

  bool prefix_matches_best(std::size_t len) const {
    return std::equal(seq_.begin(), seq_.begin() + static_cast<std::ptrdiff_t>(len), best_seq_.begin());
  }

  const MetricSpace& s_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<Vertex> order_, best_order_;
  std::vector<Distance> seq_, best_seq_;
  bool have_best_ = false;
  bool prefix_equal_ = true;
};

std::vector<Vertex> bruteforce_order(const MetricSpace& s) {
  if (s.size() > kBruteForceCanonicalLimit) {
    throw CapacityError("exhaustive canonical form limited to n <= " +
                        std::to_string(kBruteForceCanonicalLimit));
  }
  check_well_formed(s);
  return MinimalOrderSearch(s).run();
}

std::optional<std::vector<Vertex>> bipartite_order(const MetricSpace& s) {
  if (!validate(s, ClassSpec::a2())) return std::nullopt;
  const BipartiteForm form = bipartite_decompose(s, ClassSpec::a2());
  const CanonicalCross cc = canonicalize_cross(form.cross, form.balanced());
  const auto& rows = cc.transposed ? form.second : form.first;
  const auto& cols = cc.transposed ? form.first : form.second;
  std::vector<Vertex> order;
  order.reserve(s.size());
  for (std::size_t r : cc.row_order) order.push_back(rows[r]);
  for (std::size_t c : cc.col_order) order.push_back(cols[c]);
  return order;
}

}  // namespace

CanonicalKey canonical_form_bruteforce(const MetricSpace& s) { return encode(s, bruteforce_order(s)); }

std::optional<CanonicalKey> canonical_form_bipartite(const MetricSpace& s) {
  auto order = bipartite_order(s);
  if (!order) return std::nullopt;
  return encode(s, *order);
}

std::vector<Vertex> canonical_order(const MetricSpace& s) {
  if (s.size() <= kBruteForceCanonicalMax) return bruteforce_order(s);
  if (auto order = bipartite_order(s)) return *order;
  return bruteforce_order(s);
}

CanonicalKey canonical_form(const MetricSpace& s) { return encode(s, canonical_order(s)); }

}  // namespace mhg
