#include "mhg/metric_space.hpp"

#include <charconv>
#include <sstream>

namespace mhg {

MetricSpace::MetricSpace(std::size_t n, Distance fill) : n_(n), d_(n * n, fill) {
  for (std::size_t i = 0; i < n; ++i) d_[i * n + i] = 0;
}

MetricSpace MetricSpace::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  MetricSpace s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw StructuralError("row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v < 0 || v > 3) {
        throw StructuralError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range");
      }
      s.d_[i * n + j] = static_cast<Distance>(v);
    }
  }
  check_well_formed(s);
  return s;
}

void MetricSpace::set(Vertex i, Vertex j, Distance d) {
  if (i >= n_ || j >= n_ || i == j || d < 1 || d > 3) {
    throw StructuralError("invalid assignment d(" + std::to_string(i) + "," +
                          std::to_string(j) + ")=" + std::to_string(int(d)));
  }
  d_[i * n_ + j] = d;
  d_[j * n_ + i] = d;
}

MetricSpace MetricSpace::permuted(const std::vector<Vertex>& order) const {
  MetricSpace out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out.d_[i * n_ + j] = d_[order[i] * n_ + order[j]];
  return out;
}

MetricSpace MetricSpace::swap_ones_and_threes() const {
  MetricSpace out = *this;
  for (auto& v : out.d_) {
    if (v == 1)
      v = 3;
    else if (v == 3)
      v = 1;
  }
  return out;
}

std::vector<Distance> MetricSpace::upper_triangle() const {
  std::vector<Distance> out;
  out.reserve(n_ * (n_ ? n_ - 1 : 0) / 2);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) out.push_back(d_[i * n_ + j]);
  return out;
}

void check_well_formed(const MetricSpace& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (s(i, i) != 0) throw StructuralError("nonzero diagonal at " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s(i, j) != s(j, i)) {
        throw StructuralError("asymmetric entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
      if (s(i, j) < 1 || s(i, j) > 3) {
        throw StructuralError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range");
      }
    }
  }
}

void write_text(std::ostream& out, const MetricSpace& s) {
  const std::size_t n = s.size();
  out << "n=" << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << static_cast<char>('0' + s(i, j));
    }
    out << '\n';
  }
}

std::string to_text(const MetricSpace& s) {
  std::ostringstream os;
  write_text(os, s);
  return os.str();
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw StructuralError("line " + std::to_string(line) + ": " + what);
}

std::size_t parse_header(std::string_view line, std::size_t lineno) {
  if (line.substr(0, 2) != "n=" || line.size() == 2) fail(lineno, "expected header n=<int>");
  std::size_t n = 0;
  const char* first = line.data() + 2;
  const char* last = line.data() + line.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) fail(lineno, "malformed vertex count");
  if (line.size() > 3 && line[2] == '0') fail(lineno, "malformed vertex count");
  return n;
}

void parse_row(std::string_view line, std::size_t lineno, std::size_t n, std::size_t row,
               std::vector<std::vector<int>>& rows) {
  if (line.size() != (n ? 2 * n - 1 : 0)) fail(lineno, "expected " + std::to_string(n) + " entries");
  std::vector<int>& r = rows[row];
  r.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const char c = line[2 * j];
    if (c < '0' || c > '3') fail(lineno, "entry out of range");
    if (j + 1 < n && line[2 * j + 1] != ' ') fail(lineno, "expected single space separator");
    r[j] = c - '0';
  }
}

MetricSpace finish(std::vector<std::vector<int>>& rows, std::size_t header_line) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i][i] != 0) fail(header_line + 1 + i, "nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && rows[i][j] == 0) fail(header_line + 1 + i, "zero off-diagonal entry");
      if (rows[i][j] != rows[j][i]) fail(header_line + 1 + i, "asymmetric entry");
    }
  }
  return MetricSpace::from_rows(rows);
}

}  // namespace

MetricSpace parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto s = read_text(in);
  if (!s) throw StructuralError("line 1: expected header n=<int>");
  std::string rest;
  while (std::getline(in, rest)) {
    if (!rest.empty()) throw StructuralError("trailing content after block");
  }
  return *s;
}

std::optional<MetricSpace> read_text(std::istream& in) {
  // Line numbers are relative to the block start.
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.front() != '#') break;
  }
  if (line.empty() || line.front() == '#') return std::nullopt;
  const std::size_t n = parse_header(line, lineno);
  const std::size_t header_line = lineno;
  std::vector<std::vector<int>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) fail(lineno + 1, "unexpected end of input");
    ++lineno;
    parse_row(line, lineno, n, i, rows);
  }
  return finish(rows, header_line);
}

std::vector<MetricSpace> read_all_text(std::istream& in) {
  std::vector<MetricSpace> out;
  while (auto s = read_text(in)) out.push_back(std::move(*s));
  return out;
}

}  // namespace mhg
