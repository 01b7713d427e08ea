#include "mhg/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace mhg {

namespace {

using nlohmann::ordered_json;

std::string opt(const std::optional<BigInt>& v) { return v ? to_decimal(*v) : ""; }
std::string opt(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }

ordered_json opt_json(const std::optional<BigInt>& v) {
  return v ? ordered_json(to_decimal(*v)) : ordered_json(nullptr);
}
ordered_json opt_json(const std::optional<bool>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string seconds(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3) << s;
  return o.str();
}

std::string seed_list(const std::vector<std::uint64_t>& seeds) {
  std::string out;
  for (std::size_t i = 0; i < seeds.size(); ++i) out += (i ? "," : "") + std::to_string(seeds[i]);
  return out;
}

void manifest_csv(std::ostream& o, const RunManifest& m) {
  o << "# command: " << m.command_line << "\n"
    << "# version: " << m.tool_version << "\n"
    << "# class: " << m.cls << "\n"
    << "# n: " << m.n_range << "\n"
    << "# seeds: " << seed_list(m.seeds) << "\n"
    << "# cache_hits: " << m.cache_hits << "\n"
    << "# wall_seconds: " << seconds(m.wall_seconds) << "\n";
}

ordered_json manifest_json(const RunManifest& m) {
  ordered_json seeds = ordered_json::array();
  for (auto s : m.seeds) seeds.push_back(std::to_string(s));
  return {{"command", m.command_line},     {"version", m.tool_version},
          {"class", m.cls},                {"n", m.n_range},
          {"seeds", seeds},                {"cache_hits", std::to_string(m.cache_hits)},
          {"wall_seconds", seconds(m.wall_seconds)}};
}

std::string finish(ordered_json body, const RunManifest& m) {
  ordered_json doc;
  doc["manifest"] = manifest_json(m);
  for (auto& [k, v] : body.items()) doc[k] = v;
  return doc.dump(2) + "\n";
}

std::string rational_text(const Rational& v) {
  return to_decimal(numerator(v)) + "/" + to_decimal(denominator(v));
}

}  // namespace

std::string render_counts(const std::vector<CountReport>& rows, const RunManifest& m, Format f) {
  if (f == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", std::to_string(r.n)},
                     {"class", class_name(r.cls)},
                     {"mode", mode_name(r.mode)},
                     {"paper", opt_json(r.paper)},
                     {"exact", opt_json(r.exact)},
                     {"oracle", opt_json(r.oracle)},
                     {"agrees_paper", opt_json(r.agrees_paper())},
                     {"agrees_oracle", opt_json(r.agrees_oracle())}});
    }
    return finish({{"counts", arr}}, m);
  }
  std::ostringstream o;
  manifest_csv(o, m);
  o << "n,class,mode,paper,exact,oracle,agrees_paper,agrees_oracle\n";
  for (const auto& r : rows) {
    o << r.n << ',' << class_name(r.cls) << ',' << mode_name(r.mode) << ',' << opt(r.paper) << ','
      << opt(r.exact) << ',' << opt(r.oracle) << ',' << opt(r.agrees_paper()) << ','
      << opt(r.agrees_oracle()) << "\n";
  }
  return o.str();
}

std::string render_proportions(const ConvergenceTable& t, const RunManifest& m, Format f) {
  const std::string first = t.first_n_reaching ? std::to_string(*t.first_n_reaching) : "";
  if (f == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : t.rows) {
      arr.push_back({{"n", std::to_string(r.n)},
                     {"class", class_name(r.cls)},
                     {"sentence", to_string(r.sentence)},
                     {"ensemble", mode_name(r.ensemble)},
                     {"numerator", to_decimal(r.numerator)},
                     {"denominator", to_decimal(r.denominator)},
                     {"value", rational_text(r.value)},
                     {"value_decimal", to_decimal(r.value, 12)}});
    }
    return finish({{"rows", arr},
                   {"first_n_at_least_0.99",
                    t.first_n_reaching ? ordered_json(first) : ordered_json(nullptr)}},
                  m);
  }
  std::ostringstream o;
  manifest_csv(o, m);
  o << "# first_n_at_least_0.99: " << (first.empty() ? "none" : first) << "\n";
  o << "n,class,sentence,ensemble,numerator,denominator,value_decimal\n";
  for (const auto& r : t.rows) {
    o << r.n << ',' << class_name(r.cls) << ',' << to_string(r.sentence) << ','
      << mode_name(r.ensemble) << ',' << r.numerator << ',' << r.denominator << ','
      << to_decimal(r.value, 12) << "\n";
  }
  return o.str();
}

std::string render_asymmetry(const AsymmetryEstimate& e, const RunManifest& m, Format f) {
  const std::string mode = e.mode == AsymmetryMode::exact ? "exact" : "sampled";
  if (f == Format::json) {
    return finish({{"n", std::to_string(e.n)},
                   {"class", class_name(e.cls)},
                   {"mode", mode},
                   {"hits", to_decimal(e.hits)},
                   {"samples", to_decimal(e.samples)},
                   {"estimate", rational_text(e.estimate)}},
                  m);
  }
  std::ostringstream o;
  manifest_csv(o, m);
  o << "n,class,mode,hits,samples,estimate,estimate_decimal\n"
    << e.n << ',' << class_name(e.cls) << ',' << mode << ',' << e.hits << ',' << e.samples << ','
    << rational_text(e.estimate) << ',' << to_decimal(e.estimate, 12) << "\n";
  return o.str();
}

std::string render_amalgamation(const AmalgamationReport& r, const RunManifest& m, Format f) {
  if (f == Format::json) {
    ordered_json fails = ordered_json::array();
    for (const auto& x : r.failures) {
      fails.push_back({{"base", to_text(x.base)}, {"with_x", to_text(x.with_x)}, {"with_y", to_text(x.with_y)}});
    }
    return finish({{"class", class_name(r.cls)},
                   {"base_max", std::to_string(r.base_max)},
                   {"bases", std::to_string(r.bases)},
                   {"pairs", std::to_string(r.pairs)},
                   {"strong", std::to_string(r.strong)},
                   {"identified", std::to_string(r.identified)},
                   {"failures", fails}},
                  m);
  }
  std::ostringstream o;
  manifest_csv(o, m);
  o << "class,base_max,bases,pairs,strong,identified,failures\n"
    << class_name(r.cls) << ',' << r.base_max << ',' << r.bases << ',' << r.pairs << ','
    << r.strong << ',' << r.identified << ',' << r.failures.size() << "\n";
  for (const auto& x : r.failures) {
    o << "# failure base\n" << to_text(x.base) << "# with x\n" << to_text(x.with_x) << "# with y\n"
      << to_text(x.with_y);
  }
  return o.str();
}

std::string render_checks(const std::vector<std::pair<std::string, bool>>& checks,
                          const RunManifest& m, Format f) {
  if (f == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& [name, ok] : checks) arr.push_back({{"check", name}, {"result", ok}});
    return finish({{"checks", arr}}, m);
  }
  std::ostringstream o;
  manifest_csv(o, m);
  o << "check,result\n";
  for (const auto& [name, ok] : checks) o << name << ',' << (ok ? "true" : "false") << "\n";
  return o.str();
}

std::string render_spaces(const std::vector<MetricSpace>& spaces, const RunManifest& m, Format f) {
  if (f == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : spaces) {
      ordered_json rows = ordered_json::array();
      for (Vertex i = 0; i < s.size(); ++i) {
        std::string row;
        for (Vertex j = 0; j < s.size(); ++j) row += static_cast<char>('0' + s(i, j));
        rows.push_back(row);
      }
      arr.push_back({{"n", std::to_string(s.size())}, {"rows", rows}});
    }
    return finish({{"spaces", arr}}, m);
  }
  std::ostringstream o;
  manifest_csv(o, m);
  for (const auto& s : spaces) write_text(o, s);
  return o.str();
}

}  // namespace mhg
