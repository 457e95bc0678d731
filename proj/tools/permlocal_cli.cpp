#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "permlocal/bijections.hpp"
#include "permlocal/experiments.hpp"
#include "permlocal/limits.hpp"
#include "permlocal/samplers.hpp"
#include "permlocal/thresholds.hpp"
#include "permlocal/verify.hpp"

using namespace permlocal;
using json = nlohmann::json;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitThreshold = 2;

struct Options {
  std::string model = "av231";
  int n = 0;
  int samples = 0;
  std::vector<std::string> patterns;
  int pattern_size = 3;
  int radius = 1;
  std::optional<std::uint64_t> seed;
  std::uint64_t stream = 0;
  int workers = 1;
  std::string out;
  bool assert_thresholds = false;
  int max_n = 8;
  std::string format = "json";
  std::string suite = "all";
  std::string kind;
  std::string sigma, a, b;
  std::optional<double> tolerance;
  std::vector<int> n_grid;
  std::vector<int> shifts;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  const auto s = entropy_seed();
  std::cerr << "seed: " << s << "\n";
  return s;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::invalid_argument("cannot write " + o.out);
  f << text;
}

std::string fmt_double(double x) {
  std::ostringstream s;
  s.precision(10);
  s << x;
  return s.str();
}

std::string records_tsv(const std::vector<ExperimentRecord>& recs) {
  std::string s = "model\tn\tsamples\tseed\tpattern\tempirical_mean\tempirical_variance\ttheoretical\tabs_error\tstd_error\n";
  for (const auto& r : recs) {
    s += r.model + "\t" + std::to_string(r.n) + "\t" + std::to_string(r.samples) + "\t" + std::to_string(r.seed) +
         "\t" + r.pattern + "\t" + fmt_double(r.empirical_mean) + "\t" + fmt_double(r.empirical_variance) + "\t" +
         r.theoretical.value_or("") + "\t" + (r.abs_error ? fmt_double(*r.abs_error) : "") + "\t" +
         fmt_double(r.std_error) + "\n";
  }
  return s;
}

std::vector<Permutation> parse_patterns(const Options& o) {
  std::vector<Permutation> out;
  for (const auto& p : o.patterns) out.push_back(parse_permutation(p));
  return out;
}

Permutation single_pattern(const Options& o) {
  if (o.patterns.size() != 1) throw std::invalid_argument("exactly one --pattern is required");
  return parse_permutation(o.patterns[0]);
}

int cmd_sample(const Options& o) {
  if (o.n < 1) throw std::invalid_argument("--n must be >= 1");
  RandomStream rs(resolve_seed(o), o.stream);
  std::string text;
  if (o.model == "limit231" || o.model == "limit321") {
    const auto w = o.model == "limit231" ? limit231_window(o.n, rs) : limit321_window(o.n, rs);
    text = to_string(w);
  } else if (o.model == "boltzmann231") {
    const auto s = boltzmann_av231(rs);
    text = s ? to_string(*s) : "overflow";
  } else {
    text = to_string(sample_model(parse_model(o.model), o.n, rs));
  }
  if (o.format == "json") {
    emit(o, json{{"model", o.model}, {"n", o.n}, {"seed", rs.seed()}, {"stream", o.stream}, {"value", text}}.dump() + "\n");
  } else {
    emit(o, text + "\n");
  }
  return 0;
}

int cmd_cocc(const Options& o) {
  const auto pi = single_pattern(o);
  const auto sigma = parse_permutation(o.sigma);
  const auto st = pattern_stats(pi, sigma);
  if (o.format == "json") {
    emit(o, json{{"pattern", to_string(pi)}, {"count", st.count}, {"proportion", to_string(st.proportion)}}.dump() + "\n");
  } else {
    emit(o, std::to_string(st.count) + "\t" + to_string(st.proportion) + "\n");
  }
  return 0;
}

int cmd_limit(const Options& o) {
  const auto model = parse_model(o.model);
  const auto pi = single_pattern(o);
  const auto v = limit_value(model, pi);
  if (o.format == "json") {
    emit(o, json{{"model", o.model}, {"pattern", to_string(pi)}, {"value", to_string(v)}, {"float", to_double(v)}}.dump() + "\n");
  } else {
    emit(o, to_string(v) + "\n");
  }
  return 0;
}

int cmd_symbolic(const Options& o) {
  const auto pi = single_pattern(o);
  const std::string kind = o.kind.empty() ? "joint" : o.kind;
  RationalPoly poly;
  if (kind == "joint") {
    poly = symbolic_pat_j(pi);
  } else if (kind == "begin") {
    poly = symbolic_pat_b(pi);
  } else if (kind == "end") {
    poly = symbolic_pat_e(pi);
  } else {
    throw std::invalid_argument("--kind must be joint, begin or end");
  }
  const auto at_half = poly.evaluate(Rational(1, 2));
  if (o.format == "json") {
    emit(o, json{{"pattern", to_string(pi)}, {"kind", kind}, {"factored", poly.factored_string()},
                 {"expanded", poly.expanded_string()}, {"at_half", to_string(at_half)}}.dump() + "\n");
  } else {
    emit(o, poly.factored_string() + "\t" + poly.expanded_string() + "\t" + to_string(at_half) + "\n");
  }
  return 0;
}

int cmd_dist(const Options& o) {
  const auto x = parse_rooted(o.a), y = parse_rooted(o.b);
  const auto d = local_distance(x, y);
  if (o.format == "json") {
    emit(o, json{{"a", to_string(x)}, {"b", to_string(y)}, {"distance", to_string(d)}}.dump() + "\n");
  } else {
    emit(o, to_string(d) + "\n");
  }
  return 0;
}

int cmd_enumerate(const Options& o) {
  const auto cls = enumerate_class(class_pattern(parse_model(o.model)), o.n);
  if (o.kind == "count") {
    emit(o, std::to_string(cls.size()) + "\n");
    return 0;
  }
  if (o.format == "json") {
    std::vector<std::string> words;
    for (const auto& p : cls) words.push_back(to_string(p));
    emit(o, json{{"model", o.model}, {"n", o.n}, {"count", cls.size()}, {"members", words}}.dump() + "\n");
  } else {
    std::string s;
    for (const auto& p : cls) s += to_string(p) + "\n";
    emit(o, s);
  }
  return 0;
}

int report_assert(bool ok, const std::string& what) {
  std::cerr << (ok ? "assert ok: " : "assert FAILED: ") << what << "\n";
  return ok ? 0 : kExitThreshold;
}

int cmd_experiment(const Options& o) {
  namespace th = thresholds;
  const std::string kind = o.kind.empty() ? "convergence" : o.kind;
  const auto seed = resolve_seed(o);
  if (o.samples < 1) throw std::invalid_argument("--samples must be >= 1");

  if (kind == "convergence" || kind == "rooted") {
    ExperimentSpec spec;
    spec.model = parse_model(o.model);
    spec.n = o.n;
    spec.samples = o.samples;
    spec.pattern_size = o.pattern_size;
    spec.seed = seed;
    spec.workers = o.workers;
    spec.radius = o.radius;
    spec.patterns = parse_patterns(o);
    const auto recs = kind == "convergence" ? run_convergence(spec) : run_rooted_marginal(spec);
    json spec_json = spec;
    spec_json["kind"] = kind;
    emit(o, o.format == "tsv" ? records_tsv(recs) : envelope(spec_json, recs).dump(2) + "\n");
    if (!o.assert_thresholds) return 0;
    const double tol = o.tolerance.value_or(th::kMeanTolerance);
    double worst = 0;
    for (const auto& r : recs) worst = std::max(worst, r.abs_error.value_or(0.0));
    return report_assert(worst <= tol, "max abs_error " + fmt_double(worst) + " <= " + fmt_double(tol));
  }

  if (kind == "variance") {
    const auto model = parse_model(o.model);
    const auto pi = single_pattern(o);
    std::vector<int> grid = o.n_grid.empty() ? std::vector<int>{o.n} : o.n_grid;
    const auto t = run_variance_decay(model, pi, grid, o.samples, seed, o.workers);
    if (o.format == "tsv") {
      std::string s = "n\tmean\tvariance\n";
      for (const auto& r : t.rows) s += std::to_string(r.n) + "\t" + fmt_double(r.mean) + "\t" + fmt_double(r.variance) + "\n";
      emit(o, s);
    } else {
      json rows = json::array();
      for (const auto& r : t.rows) rows.push_back({{"n", r.n}, {"mean", r.mean}, {"variance", r.variance}});
      emit(o, json{{"model", o.model}, {"pattern", to_string(pi)}, {"seed", seed}, {"samples", o.samples},
                   {"rows", rows}, {"non_increasing", t.non_increasing}, {"library_version", kLibraryVersion}}
                      .dump(2) + "\n");
    }
    if (!o.assert_thresholds) return 0;
    const double tol = o.tolerance.value_or(th::kVarianceMax);
    return report_assert(t.rows.back().variance <= tol, "final variance " + fmt_double(t.rows.back().variance) +
                                                            " <= " + fmt_double(tol));
  }

  if (kind == "shift") {
    const auto model = parse_limit_model(o.model);
    const auto pi = single_pattern(o);
    std::vector<int> shifts = o.shifts;
    if (shifts.empty()) {
      for (int s = -th::kShiftMax; s <= th::kShiftMax; ++s) shifts.push_back(s);
    }
    const auto t = run_shift_invariance(model, pi, shifts, o.radius, o.samples, seed, o.workers);
    if (o.format == "tsv") {
      std::string s = "shift\testimate\n";
      for (const auto& r : t.rows) s += std::to_string(r.shift) + "\t" + fmt_double(r.estimate) + "\n";
      emit(o, s);
    } else {
      json rows = json::array();
      for (const auto& r : t.rows) rows.push_back({{"shift", r.shift}, {"estimate", r.estimate}});
      json theoretical = nullptr;
      if (model == LimitModel::limit321 && pi == Permutation{1, 2}) theoretical = "3/4";
      if (pi.size() == 1) theoretical = "1";
      emit(o, json{{"model", o.model}, {"pattern", to_string(pi)}, {"radius", o.radius}, {"seed", seed},
                   {"samples", o.samples}, {"rows", rows}, {"spread", t.spread}, {"theoretical", theoretical},
                   {"library_version", kLibraryVersion}}
                      .dump(2) + "\n");
    }
    if (!o.assert_thresholds) return 0;
    const double tol = o.tolerance.value_or(th::kShiftSpreadMax);
    return report_assert(t.spread <= tol, "spread " + fmt_double(t.spread) + " <= " + fmt_double(tol));
  }

  if (kind == "separating") {
    const int k = o.radius;
    const auto r = run_separating_line(o.n, k, o.samples, seed, o.workers);
    if (o.format == "tsv") {
      emit(o, "n\tk\tmean\tvariance\n" + std::to_string(o.n) + "\t" + std::to_string(k) + "\t" + fmt_double(r.mean) +
                  "\t" + fmt_double(r.variance) + "\n");
    } else {
      emit(o, json{{"n", o.n}, {"k", k}, {"seed", seed}, {"samples", o.samples}, {"mean", r.mean},
                   {"variance", r.variance}, {"library_version", kLibraryVersion}}
                      .dump(2) + "\n");
    }
    if (!o.assert_thresholds) return 0;
    const double lo = o.tolerance.value_or(th::kSeparatingLineMin);
    return report_assert(r.mean >= lo, "mean " + fmt_double(r.mean) + " >= " + fmt_double(lo));
  }

  if (kind == "windows") {
    const int k = o.radius;
    const auto t = run_window_set_uniformity(o.n, k, o.samples, seed, o.workers);
    const double target = std::ldexp(1.0, -(2 * k + 1));
    double worst = 0;
    for (const auto& c : t.cells) worst = std::max(worst, std::abs(c.mean - target));
    if (o.format == "tsv") {
      std::string s = "subset\tmean\n";
      for (const auto& c : t.cells) s += subset_label(c.subset) + "\t" + fmt_double(c.mean) + "\n";
      emit(o, s);
    } else {
      json cells = json::array();
      for (const auto& c : t.cells) cells.push_back({{"subset", c.subset}, {"mean", c.mean}});
      emit(o, json{{"n", o.n}, {"k", k}, {"seed", seed}, {"samples", o.samples}, {"cells", cells},
                   {"target", target}, {"discarded_fraction", t.discarded_fraction},
                   {"library_version", kLibraryVersion}}
                      .dump(2) + "\n");
    }
    if (!o.assert_thresholds) return 0;
    const double tol = o.tolerance.value_or(th::kWindowSetTolerance);
    return report_assert(worst <= tol, "max cell deviation " + fmt_double(worst) + " <= " + fmt_double(tol));
  }

  throw std::invalid_argument("unknown experiment kind '" + kind +
                              "' (convergence, rooted, variance, shift, separating, windows)");
}

int cmd_verify(const Options& o) {
  const auto results = verify_suite(o.suite, o.max_n);
  bool ok = true;
  json arr = json::array();
  std::string text;
  for (const auto& r : results) {
    ok = ok && r.ok;
    arr.push_back({{"check", r.name}, {"ok", r.ok}, {"cases", r.cases}, {"detail", r.detail}});
    text += std::string(r.ok ? "PASS" : "FAIL") + "  " + r.name + "  (" + std::to_string(r.cases) + " cases)" +
            (r.ok ? "" : "  " + r.detail) + "\n";
  }
  emit(o, o.format == "json" ? json{{"suite", o.suite}, {"max_n", o.max_n}, {"results", arr}, {"ok", ok}}.dump(2) + "\n"
                             : text);
  return ok ? 0 : kExitThreshold;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local limits of pattern-avoiding permutations: sampling, exact limits, experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kLibraryVersion));
  Options o;

  auto* sample = app.add_subcommand("sample", "Draw one random object");
  sample->add_option("--model", o.model, "av231, av321, limit231, limit321 or boltzmann231")
      ->check(CLI::IsMember({"av231", "av321", "limit231", "limit321", "boltzmann231"}));
  sample->add_option("--n", o.n, "Size (window radius for limit models)")->required();
  sample->add_option("--seed", o.seed, "Seed; drawn from entropy and printed when omitted");
  sample->add_option("--stream", o.stream, "Stream id");
  sample->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  sample->add_option("--out", o.out, "Write output to this file");

  auto* cocc = app.add_subcommand("cocc", "Consecutive occurrences of a pattern");
  cocc->add_option("--pattern", o.patterns, "Pattern")->required();
  cocc->add_option("--sigma", o.sigma, "Permutation")->required();
  cocc->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));

  auto* limit = app.add_subcommand("limit", "Exact limiting pattern proportion");
  limit->add_option("--model", o.model)->check(CLI::IsMember({"av231", "av321"}));
  limit->add_option("--pattern", o.patterns, "Pattern")->required();
  limit->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));

  auto* symbolic = app.add_subcommand("symbolic", "Exact pattern polynomial in p for the binary tree");
  symbolic->add_option("--pattern", o.patterns, "Pattern avoiding 231")->required();
  symbolic->add_option("--kind", o.kind, "joint, begin or end");
  symbolic->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));

  auto* dist = app.add_subcommand("dist", "Local distance between rooted permutations");
  dist->add_option("--a", o.a, "Rooted permutation, e.g. 2,1@1")->required();
  dist->add_option("--b", o.b, "Rooted permutation")->required();
  dist->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));

  auto* enumerate = app.add_subcommand("enumerate", "List a class");
  enumerate->add_option("--model", o.model)->check(CLI::IsMember({"av231", "av321"}));
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--kind", o.kind, "list or count");
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));
  enumerate->add_option("--out", o.out);

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo experiment");
  experiment->add_option("--kind", o.kind, "convergence, rooted, variance, shift, separating, windows");
  experiment->add_option("--model", o.model, "av231/av321, or limit231/limit321 for shift");
  experiment->add_option("--n", o.n, "Permutation size");
  experiment->add_option("--n-grid", o.n_grid, "Sizes for the variance table")->delimiter(',');
  experiment->add_option("--samples", o.samples, "Number of samples")->required();
  experiment->add_option("--pattern", o.patterns, "Pattern(s); default is the whole class of --pattern-size");
  experiment->add_option("--pattern-size", o.pattern_size, "Pattern size");
  experiment->add_option("--radius", o.radius, "Window radius h (or k for separating/windows)");
  experiment->add_option("--shifts", o.shifts, "Shifts for the shift table")->delimiter(',');
  experiment->add_option("--seed", o.seed, "Seed; drawn from entropy and printed when omitted");
  experiment->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  experiment->add_flag("--assert", o.assert_thresholds, "Exit 2 when the default threshold is missed");
  experiment->add_option("--tolerance", o.tolerance, "Override the --assert threshold");
  experiment->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));
  experiment->add_option("--out", o.out);

  auto* verify = app.add_subcommand("verify", "Exhaustive exact identity checks");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--max-n", o.max_n, "Largest size checked");
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));
  verify->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*sample) return cmd_sample(o);
    if (*cocc) return cmd_cocc(o);
    if (*limit) return cmd_limit(o);
    if (*symbolic) return cmd_symbolic(o);
    if (*dist) return cmd_dist(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*experiment) return cmd_experiment(o);
    if (*verify) return cmd_verify(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return kExitInput;
}
