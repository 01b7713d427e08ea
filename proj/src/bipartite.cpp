#include "mhg/bipartite.hpp"

#include <algorithm>
#include <numeric>

namespace mhg {

CrossMatrix CrossMatrix::transposed() const {
  CrossMatrix t(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = (*this)(r, c);
  return t;
}

std::size_t CrossMatrix::count(Distance d) const {
  return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), d));
}

MetricSpace BipartiteForm::recompose() const {
  MetricSpace s(size());
  for (std::size_t r = 0; r < first.size(); ++r)
    for (std::size_t c = 0; c < second.size(); ++c) s.set(first[r], second[c], cross(r, c));
  return s;
}

BipartiteForm bipartite_decompose(const MetricSpace& s, const ClassSpec& cls) {
  if (auto m = validate(s, cls); !m) throw MembershipError(cls.id, *m.witness);

  const std::size_t n = s.size();
  BipartiteForm form;
  form.part_of.assign(n, 1);
  if (n == 0) return form;

  // Members have every triple containing a 2-edge, so the 2-neighbourhood of
  // vertex 0 (plus 0 itself) is one maximal 2-clique and the rest the other.
  std::vector<Vertex> with_zero{0}, without_zero;
  for (Vertex v = 1; v < n; ++v) (s(0, v) == 2 ? with_zero : without_zero).push_back(v);

  if (without_zero.size() <= with_zero.size()) {
    form.first = std::move(without_zero);
    form.second = std::move(with_zero);
  } else {
    form.first = std::move(with_zero);
    form.second = std::move(without_zero);
  }
  form.k = form.first.size();
  for (Vertex v : form.first) form.part_of[v] = 0;

  form.cross = CrossMatrix(form.first.size(), form.second.size());
  for (std::size_t r = 0; r < form.first.size(); ++r)
    for (std::size_t c = 0; c < form.second.size(); ++c)
      form.cross.at(r, c) = s(form.first[r], form.second[c]);
  return form;
}

MetricSpace space_from_cross(const CrossMatrix& cross) {
  MetricSpace s(cross.rows + cross.cols);
  for (std::size_t r = 0; r < cross.rows; ++r)
    for (std::size_t c = 0; c < cross.cols; ++c) s.set(r, cross.rows + c, cross(r, c));
  return s;
}

namespace {

void best_over_row_orders(const CrossMatrix& m, bool transposed, CanonicalCross& best,
                          bool& have_best) {
  std::vector<std::size_t> rows(m.rows);
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<std::size_t> cols(m.cols);
  CrossMatrix candidate(m.rows, m.cols);
  do {
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) {
      for (std::size_t r : rows) {
        if (m(r, a) != m(r, b)) return m(r, a) < m(r, b);
      }
      return false;
    });
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) candidate.at(i, j) = m(rows[i], cols[j]);
    if (!have_best || candidate.cells < best.matrix.cells) {
      best.matrix = candidate;
      best.transposed = transposed;
      best.row_order = rows;
      best.col_order = cols;
      have_best = true;
    }
  } while (std::next_permutation(rows.begin(), rows.end()));
}

}  // namespace

CanonicalCross canonicalize_cross(const CrossMatrix& m, bool allow_transpose) {
  if (m.rows > kMaxCanonicalRows) {
    throw CapacityError("cross matrix canonicalization limited to " +
                        std::to_string(kMaxCanonicalRows) + " rows");
  }
  CanonicalCross best;
  bool have_best = false;
  best_over_row_orders(m, false, best, have_best);
  if (allow_transpose && m.rows == m.cols) best_over_row_orders(m.transposed(), true, best, have_best);
  if (!have_best) best.matrix = m;
  return best;
}

}  // namespace mhg
