#include "mhg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "mhg/amalgamation.hpp"
#include "mhg/cache.hpp"
#include "mhg/enumeration.hpp"
#include "mhg/errors.hpp"
#include "mhg/logic.hpp"
#include "mhg/report.hpp"
#include "mhg/sampler.hpp"
#include "mhg/truncation.hpp"

namespace mhg {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NRange {
  std::size_t from = 0, to = 0;
  std::string text() const {
    return from == to ? std::to_string(from) : std::to_string(from) + ".." + std::to_string(to);
  }
};

std::size_t parse_size(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw UsageError("expected a non-negative integer, got '" + s + "'");
  }
  return std::stoul(s);
}

NRange parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto n = parse_size(s);
    return {n, n};
  }
  NRange r{parse_size(s.substr(0, dots)), parse_size(s.substr(dots + 2))};
  if (r.from > r.to) throw UsageError("empty n range '" + s + "'");
  return r;
}

struct Globals {
  std::string cls;
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  std::string cache_dir;
  bool force = false;
};

std::vector<ClassId> classes_of(const Globals& g, bool default_both) {
  if (g.cls.empty()) {
    if (default_both) return {ClassId::A1, ClassId::A2};
    throw UsageError("--class is required");
  }
  const auto c = parse_class(g.cls);
  if (!c) throw UsageError("unknown class '" + g.cls + "' (expected a1 or a2)");
  return {*c};
}

Format format_of(const Globals& g) {
  if (g.format == "csv") return Format::csv;
  if (g.format == "json") return Format::json;
  throw UsageError("unknown format '" + g.format + "' (expected csv or json)");
}

CountMode mode_of(const std::string& s) {
  const auto m = parse_mode(s);
  if (!m) throw UsageError("unknown mode '" + s + "' (expected labeled or unlabeled)");
  return *m;
}

std::uint64_t require_seed(const Globals& g) {
  if (!g.seed) throw UsageError("this command is randomized and requires --seed");
  return *g.seed;
}

std::string join(const std::vector<std::string>& args) {
  std::string out = "mhg";
  for (const auto& a : args) out += " " + a;
  return out;
}

int verdict(const std::vector<CountReport>& rows) {
  bool discrepancy = false;
  for (const auto& r : rows) {
    if (r.agrees_oracle() == false) return kExitInternal;
    if (r.agrees_paper() == false) discrepancy = true;
  }
  return discrepancy ? kExitDiscrepancy : kExitOk;
}

class Runner {
 public:
  Runner(const std::vector<std::string>& args, std::ostream& out, const Globals& g)
      : out_(out), g_(g), cache_(g.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(g.cache_dir)) {
    manifest_.command_line = join(args);
    if (g.seed) manifest_.seeds.push_back(*g.seed);
  }

  void emit(const std::string& body_of_report) { out_ << body_of_report; }

  RunManifest& manifest() {
    manifest_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return manifest_;
  }

  void describe(const std::vector<ClassId>& classes, const std::string& n) {
    std::string c;
    for (auto id : classes) c += (c.empty() ? "" : ",") + std::string(class_name(id));
    manifest_.cls = c;
    manifest_.n_range = n;
  }

  BigInt oracle(std::size_t n, ClassId cls, CountMode mode) {
    const std::string kind = std::string("oracle-") + std::string(mode_name(mode));
    if (auto hit = cache_.load(kind, cls, n)) {
      ++manifest_.cache_hits;
      return hit->count;
    }
    const BigInt v = count_oracle(n, cls, mode, g_.force);
    store({kind, cls, n, v, {}});
    return v;
  }

  std::vector<MetricSpace> classes(std::size_t n, ClassId cls) {
    if (auto hit = cache_.load("classes", cls, n); hit && hit->count == hit->spaces.size()) {
      ++manifest_.cache_hits;
      return hit->spaces;
    }
    std::vector<MetricSpace> reps;
    for (const auto& d : enumerate_unlabeled(n, cls)) reps.push_back(d.representative);
    store({"classes", cls, n, BigInt(reps.size()), reps});
    return reps;
  }

 private:
  void store(const CacheEntry& e) {
    try {
      cache_.store(e);
    } catch (const std::exception&) {
      // an unwritable cache only costs recomputation
    }
  }

  std::ostream& out_;
  const Globals& g_;
  Cache cache_;
  RunManifest manifest_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite diameter-3 metric space workbench", "mhg"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--class", g.cls, "a1 or a2");
  app.add_option("--format", g.format, "csv or json");
  app.add_option("--seed", g.seed, "64-bit seed for randomized commands");
  app.add_option("--cache-dir", g.cache_dir, "cache directory (default $MHG_CACHE_DIR or ./.mhg-cache)");
  app.add_flag("--force", g.force, "lift the size guards of the brute-force routes");

  std::string n_text, mode_text = "labeled", ensemble_text = "unlabeled", sentence, method_text;
  std::vector<std::string> methods{"formula", "exact"};

  auto* count = app.add_subcommand("count", "labeled or unlabeled counts: paper formula, exact, oracle");
  count->add_option("--n", n_text, "N or A..B")->required();
  count->add_option("--mode", mode_text, "labeled or unlabeled");
  count->add_option("--method", methods, "formula,exact,oracle")->delimiter(',');

  std::string enum_mode = "unlabeled";
  auto* enumerate = app.add_subcommand("enumerate", "list members (labeled) or class representatives");
  enumerate->add_option("--n", n_text, "N or A..B")->required();
  enumerate->add_option("--mode", enum_mode, "labeled or unlabeled");

  std::string prop_method = "analytic";
  auto* proportions = app.add_subcommand("proportions", "exact satisfaction proportions per n");
  proportions->add_option("--sentence", sentence, "sentence id, e.g. a1.pairs?p=1")->required();
  proportions->add_option("--ensemble", ensemble_text, "labeled or unlabeled");
  proportions->add_option("--n", n_text, "N or A..B")->required();
  proportions->add_option("--method", prop_method, "analytic or direct");

  std::string model_text = "uniform";
  std::size_t k = 0, draws = 1, samples = 10000, workers = 1;
  bool asymmetry = false, exact = false;
  auto* sample_cmd = app.add_subcommand("sample", "random members, or asymmetric-fraction estimates");
  sample_cmd->add_option("--n", n_text, "number of points")->required();
  sample_cmd->add_option("--model", model_text, "uniform or fixed");
  sample_cmd->add_option("--k", k, "size of the first part (fixed model)");
  sample_cmd->add_option("--count", draws, "number of spaces to draw");
  sample_cmd->add_flag("--asymmetry", asymmetry, "estimate the asymmetric fraction");
  sample_cmd->add_option("--samples", samples, "samples for --asymmetry");
  sample_cmd->add_option("--workers", workers, "sampling streams for --asymmetry");
  sample_cmd->add_flag("--exact", exact, "exact asymmetric fraction by enumeration");

  std::string limit_text;
  std::size_t lm = 0, lt = 0, lu = 0;
  std::vector<std::string> checks;
  auto* limits = app.add_subcommand("limits", "finite truncations of the limit structures");
  limits->add_option("--limit", limit_text, "g378, gas or g3710")->required();
  limits->add_option("--m", lm, "matched pairs (g378) or points per side (g3710)");
  limits->add_option("--t", lt, "matched pairs (gas)");
  limits->add_option("--u", lu, "unmatched points per side (gas)");
  limits->add_option("--check", checks, "sentence ids to evaluate")->delimiter(',');

  std::size_t base_max = 3;
  auto* amalg = app.add_subcommand("amalgamation", "exhaustive amalgamation check over small bases");
  amalg->add_option("--base-max", base_max, "largest base size");

  std::string report_n = "1..7";
  auto* report = app.add_subcommand("report", "count audit for both modes with every method");
  report->add_option("--n", report_n, "N or A..B");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mhg: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Format fmt = format_of(g);
    Runner run(args, out, g);

    if (count->parsed()) {
      const auto classes = classes_of(g, false);
      const NRange r = parse_range(n_text);
      const CountMode mode = mode_of(mode_text);
      CountMethods cm{false, false, false};
      for (const auto& m : methods) {
        if (m == "formula") cm.formula = true;
        else if (m == "exact") cm.exact = true;
        else if (m == "oracle") cm.oracle = true;
        else throw UsageError("unknown method '" + m + "' (expected formula, exact or oracle)");
      }
      if (cm.oracle && r.to > kOracleMaxN && !g.force) {
        throw UsageError("oracle is limited to n <= " + std::to_string(kOracleMaxN) + " without --force");
      }
      run.describe(classes, r.text());
      std::vector<CountReport> rows;
      for (auto cls : classes) {
        for (std::size_t n = r.from; n <= r.to; ++n) {
          std::optional<BigInt> o;
          if (cm.oracle) o = run.oracle(n, cls, mode);
          rows.push_back(make_count_report(n, cls, mode, cm, g.force, o));
        }
      }
      run.emit(render_counts(rows, run.manifest(), fmt));
      return verdict(rows);
    }

    if (enumerate->parsed()) {
      const auto classes = classes_of(g, false);
      const NRange r = parse_range(n_text);
      const CountMode mode = mode_of(enum_mode);
      if (mode == CountMode::labeled && r.to > kOracleMaxN && !g.force) {
        throw UsageError("labeled enumeration is limited to n <= " + std::to_string(kOracleMaxN) +
                         " without --force");
      }
      run.describe(classes, r.text());
      std::vector<MetricSpace> spaces;
      for (auto cls : classes) {
        for (std::size_t n = r.from; n <= r.to; ++n) {
          auto part = mode == CountMode::labeled ? enumerate_labeled_structured(n, cls) : run.classes(n, cls);
          spaces.insert(spaces.end(), part.begin(), part.end());
        }
      }
      run.emit(render_spaces(spaces, run.manifest(), fmt));
      return kExitOk;
    }

    if (proportions->parsed()) {
      const auto classes = classes_of(g, false);
      SentenceId sid;
      try {
        sid = parse_sentence(sentence);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const NRange r = parse_range(n_text);
      const Ensemble ens = mode_of(ensemble_text);
      ProportionMethod pm;
      if (prop_method == "analytic") pm = ProportionMethod::analytic;
      else if (prop_method == "direct") pm = ProportionMethod::direct;
      else throw UsageError("unknown method '" + prop_method + "' (expected analytic or direct)");
      run.describe(classes, r.text());
      const auto table = convergence_table(classes.front(), sid, r.from, r.to, ens, pm);
      run.emit(render_proportions(table, run.manifest(), fmt));
      return kExitOk;
    }

    if (sample_cmd->parsed()) {
      const auto classes = classes_of(g, false);
      const std::size_t n = parse_size(n_text);
      run.describe(classes, std::to_string(n));
      if (asymmetry) {
        const auto e = exact ? exact_asymmetric_fraction(n, classes.front())
                             : estimate_asymmetric_fraction(n, classes.front(), samples, require_seed(g), workers);
        run.emit(render_asymmetry(e, run.manifest(), fmt));
        return kExitOk;
      }
      Rng rng(require_seed(g));
      std::vector<MetricSpace> spaces;
      for (std::size_t i = 0; i < draws; ++i) {
        if (model_text == "uniform") {
          spaces.push_back(sample_uniform_labeled(n, classes.front(), rng));
        } else if (model_text == "fixed") {
          if (2 * k > n) throw UsageError("--k must satisfy k <= n - k");
          spaces.push_back(sample_fixed_partition(n, k, classes.front(), rng));
        } else {
          throw UsageError("unknown model '" + model_text + "' (expected uniform or fixed)");
        }
      }
      run.emit(render_spaces(spaces, run.manifest(), fmt));
      return kExitOk;
    }

    if (limits->parsed()) {
      const auto limit = parse_limit(limit_text);
      if (!limit) throw UsageError("unknown limit '" + limit_text + "' (expected g378, gas or g3710)");
      TruncationSpec spec{*limit, lm, lt, lu, 0};
      if (*limit == Limit::gamma_3710) spec.seed = require_seed(g);
      const MetricSpace s = build_truncation(spec);
      run.describe({limit_class(*limit)}, std::to_string(s.size()));
      if (checks.empty()) {
        run.emit(render_spaces({s}, run.manifest(), fmt));
        return kExitOk;
      }
      std::vector<std::pair<std::string, bool>> results;
      for (const auto& c : checks) {
        SentenceId sid;
        try {
          sid = parse_sentence(c);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        results.emplace_back(to_string(sid), eval_sentence(s, sid));
      }
      run.emit(render_checks(results, run.manifest(), fmt));
      return kExitOk;
    }

    if (amalg->parsed()) {
      const auto classes = classes_of(g, false);
      run.describe(classes, "0.." + std::to_string(base_max));
      const auto rep = amalgamation_check(classes.front(), base_max);
      run.emit(render_amalgamation(rep, run.manifest(), fmt));
      return kExitOk;
    }

    if (report->parsed()) {
      const auto classes = classes_of(g, true);
      const NRange r = parse_range(report_n);
      run.describe(classes, r.text());
      std::vector<CountReport> rows;
      for (auto cls : classes) {
        for (auto mode : {CountMode::labeled, CountMode::unlabeled}) {
          for (std::size_t n = r.from; n <= r.to; ++n) {
            const bool oracle = n <= kOracleMaxN || g.force;
            std::optional<BigInt> o;
            if (oracle) o = run.oracle(n, cls, mode);
            rows.push_back(make_count_report(n, cls, mode, {true, true, oracle}, g.force, o));
          }
        }
      }
      run.emit(render_counts(rows, run.manifest(), fmt));
      return verdict(rows);
    }
  } catch (const UsageError& e) {
    err << "mhg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "mhg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "mhg: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace mhg
