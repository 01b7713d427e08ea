#include "mhg/logic.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "mhg/canonical.hpp"
#include "mhg/errors.hpp"

namespace mhg {

namespace {

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n, bool full = false) : w_((n + 63) / 64, 0) {
    if (full) {
      for (std::size_t i = 0; i < n; ++i) insert(i);
    }
  }
  void insert(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
  bool none() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

 private:
  std::vector<std::uint64_t> w_;
};

// nbr[d][v]: vertices at distance d from v.
struct Neighborhoods {
  std::vector<VertexSet> by[4];
  explicit Neighborhoods(const MetricSpace& s) {
    const std::size_t n = s.size();
    for (int d = 1; d <= 3; ++d) by[d].assign(n, VertexSet(n));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v) by[s(u, v)][u].insert(v);
  }
};

std::size_t degree(const MetricSpace& s, Vertex u, Distance d) {
  std::size_t c = 0;
  for (Vertex v = 0; v < s.size(); ++v)
    if (v != u && s(u, v) == d) ++c;
  return c;
}

bool all_distances_valid(const MetricSpace& s) {
  for (Vertex u = 0; u < s.size(); ++u)
    for (Vertex v = 0; v < s.size(); ++v)
      if (u != v && (s(u, v) < 1 || s(u, v) > 3)) return false;
  return true;
}

bool all_triples_one_or_three_twos(const MetricSpace& s) {
  const std::size_t n = s.size();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        const int twos = (s(a, b) == 2) + (s(a, c) == 2) + (s(b, c) == 2);
        if (twos != 1 && twos != 3) return false;
      }
  return true;
}

// Kuhn's augmenting paths; adj[l] lists right vertices.
std::size_t bipartite_matching(const std::vector<std::vector<std::size_t>>& adj, std::size_t right) {
  std::vector<std::ptrdiff_t> match_r(right, -1);
  std::size_t size = 0;
  for (std::size_t l = 0; l < adj.size(); ++l) {
    std::vector<bool> seen(right, false);
    std::function<bool(std::size_t)> augment = [&](std::size_t u) {
      for (std::size_t v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        if (match_r[v] < 0 || augment(static_cast<std::size_t>(match_r[v]))) {
          match_r[v] = static_cast<std::ptrdiff_t>(u);
          return true;
        }
      }
      return false;
    };
    if (augment(l)) ++size;
  }
  return size;
}

// Literal pairs formula: distinct u_1..u_p, distinct v_1..v_p with
// d(u_i, v_i) = 3. Equivalent to a matching of size p in the bipartite
// double cover of the 3-graph.
std::size_t double_cover_matching(const MetricSpace& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && s(u, v) == 3) adj[u].push_back(v);
  return bipartite_matching(adj, n);
}

bool has_disjoint_three_edges(const MetricSpace& s, std::size_t p) {
  const std::size_t n = s.size();
  std::vector<bool> used(n, false);
  std::function<bool(Vertex, std::size_t)> go = [&](Vertex from, std::size_t need) {
    if (need == 0) return true;
    for (Vertex u = from; u < n; ++u) {
      if (used[u]) continue;
      for (Vertex v = u + 1; v < n; ++v) {
        if (used[v] || s(u, v) != 3) continue;
        used[u] = used[v] = true;
        const bool ok = go(u + 1, need - 1);
        used[u] = used[v] = false;
        if (ok) return true;
      }
    }
    return false;
  };
  return go(0, p);
}

// Calls visit(clique) for every `size`-subset of `cand` (ascending) whose
// points are pairwise at distance 2. visit returns false to stop.
bool for_each_two_clique(const MetricSpace& s, const std::vector<Vertex>& cand, std::size_t size,
                         const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> cur;
  std::function<bool(std::size_t)> go = [&](std::size_t from) {
    if (cur.size() == size) return visit(cur);
    for (std::size_t i = from; i + (size - cur.size()) <= cand.size(); ++i) {
      const Vertex v = cand[i];
      if (!std::all_of(cur.begin(), cur.end(), [&](Vertex c) { return s(c, v) == 2; })) continue;
      cur.push_back(v);
      const bool more = go(i + 1);
      cur.pop_back();
      if (!more) return false;
    }
    return true;
  };
  return go(0);
}

std::vector<Vertex> three_edge_free(const MetricSpace& s) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < s.size(); ++v)
    if (degree(s, v, 3) == 0) out.push_back(v);
  return out;
}

bool ones_in_two_parts(const MetricSpace& s, std::size_t p) {
  if (p == 0) return true;
  const auto free = three_edge_free(s);
  bool found = false;
  for_each_two_clique(s, free, p, [&](const std::vector<Vertex>& u) {
    std::vector<Vertex> cand;
    for (Vertex v : free) {
      if (std::find(u.begin(), u.end(), v) != u.end()) continue;
      if (std::all_of(u.begin(), u.end(), [&](Vertex x) { return s(x, v) != 2; })) cand.push_back(v);
    }
    for_each_two_clique(s, cand, p, [&](const std::vector<Vertex>&) {
      found = true;
      return false;
    });
    return !found;
  });
  return found;
}

bool min_degree_at_least(const MetricSpace& s, Distance d, std::size_t p) {
  for (Vertex u = 0; u < s.size(); ++u)
    if (degree(s, u, d) < p) return false;
  return true;
}

}  // namespace

std::size_t three_edge_matching(const MetricSpace& s) {
  std::size_t best = 0;
  while (has_disjoint_three_edges(s, best + 1)) ++best;
  return best;
}

bool check_divergence_witness(const MetricSpace& s) { return min_degree_at_least(s, 3, 1); }

ExtensionResult eval_extension_axiom(const MetricSpace& s, std::size_t q, std::size_t p,
                                     std::size_t r) {
  const std::size_t n = s.size();
  const Neighborhoods nb(s);
  ExtensionResult res;
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;

  auto compatible = [&](Vertex v, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex x : a)
      if (x == v || s(x, v) == 2) return false;
    for (Vertex x : b)
      if (x == v || s(x, v) == 2) return false;
    return true;
  };

  for_each_two_clique(s, all, q, [&](const std::vector<Vertex>& xs) {
    std::vector<Vertex> zcand;
    for (Vertex v : all)
      if (compatible(v, xs, {})) zcand.push_back(v);
    return for_each_two_clique(s, zcand, r, [&](const std::vector<Vertex>& zs) {
      VertexSet w0(n, true);
      for (Vertex x : xs) w0 &= nb.by[1][x];
      for (Vertex z : zs) w0 &= nb.by[3][z];
      std::vector<Vertex> ycand;
      for (Vertex v : all)
        if (compatible(v, xs, zs)) ycand.push_back(v);
      return for_each_two_clique(s, ycand, p, [&](const std::vector<Vertex>& ys) {
        ++res.premises;
        VertexSet w = w0;
        for (Vertex y : ys) w &= nb.by[2][y];
        if (w.none()) {
          res.holds = false;
          res.counterexample = ExtensionPremise{xs, ys, zs};
          return false;
        }
        return true;
      });
    });
  });
  return res;
}

bool eval_sentence(const MetricSpace& s, const SentenceId& id) {
  switch (id.family) {
    case Family::a1_distances:
    case Family::a2_distances:
      return all_distances_valid(s);
    case Family::a1_no_two_threes:
      for (Vertex u = 0; u < s.size(); ++u)
        if (degree(s, u, 3) > 1) return false;
      return true;
    case Family::a1_parts:
    case Family::a2_parts:
      return all_triples_one_or_three_twos(s);
    case Family::a1_pairs:
      return id.gloss ? has_disjoint_three_edges(s, id.p) : double_cover_matching(s) >= id.p;
    case Family::a1_ones_unlabeled:
      return id.gloss ? ones_in_two_parts(s, id.p) : three_edge_free(s).size() >= 2 * id.p;
    case Family::a1_ones_labeled:
      return three_edge_free(s).size() >= id.p;
    case Family::a2_min_ones:
      return min_degree_at_least(s, 1, id.p);
    case Family::a2_min_threes:
      return min_degree_at_least(s, 3, id.p);
    case Family::extension:
      return eval_extension_axiom(s, id.q, id.p, id.r).holds;
    case Family::divergence_witness:
      return check_divergence_witness(s);
  }
  return false;
}

bool eval_sentence_member(const BipartiteForm& form, const SentenceId& id) {
  const CrossMatrix& c = form.cross;
  const std::size_t k = c.rows, m = c.cols;
  std::vector<std::size_t> row3(k, 0), col3(m, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (c(i, j) == 3) {
        ++row3[i];
        ++col3[j];
      }
  auto free_count = [&](const std::vector<std::size_t>& v) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), std::size_t{0}));
  };
  auto matching = [&] {
    std::vector<std::vector<std::size_t>> adj(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (c(i, j) == 3) adj[i].push_back(j);
    return bipartite_matching(adj, m);
  };
  // other-part degree d for a row is m - row3 (d = 1) or row3 (d = 3)
  auto min_degree = [&](Distance d, std::size_t p) {
    for (std::size_t i = 0; i < k; ++i)
      if ((d == 3 ? row3[i] : m - row3[i]) < p) return false;
    for (std::size_t j = 0; j < m; ++j)
      if ((d == 3 ? col3[j] : k - col3[j]) < p) return false;
    return true;
  };

  switch (id.family) {
    case Family::a1_distances:
    case Family::a2_distances:
    case Family::a1_parts:
    case Family::a2_parts:
      return true;
    case Family::a1_no_two_threes:
      return std::all_of(row3.begin(), row3.end(), [](std::size_t x) { return x <= 1; }) &&
             std::all_of(col3.begin(), col3.end(), [](std::size_t x) { return x <= 1; });
    case Family::a1_pairs: {
      const std::size_t nu = matching();
      return id.gloss ? nu >= id.p : 2 * nu >= id.p;
    }
    case Family::a1_ones_unlabeled:
      if (id.gloss) return id.p == 0 || (free_count(row3) >= id.p && free_count(col3) >= id.p);
      return free_count(row3) + free_count(col3) >= 2 * id.p;
    case Family::a1_ones_labeled:
      return free_count(row3) + free_count(col3) >= id.p;
    case Family::a2_min_ones:
      return min_degree(1, id.p);
    case Family::a2_min_threes:
      return min_degree(3, id.p);
    case Family::divergence_witness:
      return min_degree(3, 1);
    case Family::extension:
      return eval_extension_axiom(form.recompose(), id.q, id.p, id.r).holds;
  }
  return false;
}

namespace {

BipartiteForm form_from_cross(const CrossMatrix& cross) {
  BipartiteForm f;
  f.k = cross.rows;
  f.cross = cross;
  const std::size_t n = cross.rows + cross.cols;
  f.part_of.assign(n, 1);
  for (Vertex v = 0; v < n; ++v) {
    if (v < cross.rows) {
      f.part_of[v] = 0;
      f.first.push_back(v);
    } else {
      f.second.push_back(v);
    }
  }
  return f;
}

}  // namespace

ProportionRow proportion(std::size_t n, ClassId cls, const SentenceId& s, Ensemble ensemble,
                         ProportionMethod method) {
  ProportionRow row;
  row.n = n;
  row.cls = cls;
  row.sentence = s;
  row.ensemble = ensemble;

  if (method == ProportionMethod::analytic) {
    const std::size_t limit = cls == ClassId::A1 ? kAnalyticA1MaxN : kUnlabeledA2MaxN;
    if (n > limit) {
      throw CapacityError("analytic proportion for " + std::string(class_name(cls)) +
                          " is limited to n <= " + std::to_string(limit));
    }
    for (const auto& d : enumerate_unlabeled(n, cls)) {
      const BigInt w = ensemble == Ensemble::unlabeled ? BigInt(1) : d.labeled_weight();
      row.denominator += w;
      if (eval_sentence_member(form_from_cross(d.cross), s)) row.numerator += w;
    }
  } else {
    if (n > kDirectMaxN) {
      throw CapacityError("direct proportion is limited to n <= " + std::to_string(kDirectMaxN));
    }
    if (ensemble == Ensemble::labeled) {
      for_each_labeled(n, cls, [&](const MetricSpace& sp) {
        row.denominator += 1;
        if (eval_sentence(sp, s)) row.numerator += 1;
      });
    } else {
      std::map<std::vector<std::uint8_t>, bool> seen;
      for_each_labeled(n, cls, [&](const MetricSpace& sp) {
        auto key = canonical_form(sp).bytes;
        if (seen.count(key)) return;
        seen.emplace(std::move(key), eval_sentence(sp, s));
      });
      for (const auto& [key, sat] : seen) {
        row.denominator += 1;
        if (sat) row.numerator += 1;
      }
    }
  }
  row.value = Rational(row.numerator, row.denominator);
  return row;
}

ConvergenceTable convergence_table(ClassId cls, const SentenceId& s, std::size_t n_from,
                                   std::size_t n_to, Ensemble ensemble, ProportionMethod method) {
  ConvergenceTable t;
  const Rational threshold(99, 100);
  for (std::size_t n = n_from; n <= n_to; ++n) {
    t.rows.push_back(proportion(n, cls, s, ensemble, method));
    if (!t.first_n_reaching && t.rows.back().value >= threshold) t.first_n_reaching = n;
  }
  return t;
}

}  // namespace mhg
