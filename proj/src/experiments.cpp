#include "permlocal/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "permlocal/bijections.hpp"
#include "permlocal/limits.hpp"
#include "permlocal/rooted.hpp"
#include "permlocal/samplers.hpp"

namespace permlocal {

std::string to_string(Model m) { return m == Model::av231 ? "av231" : "av321"; }
std::string to_string(LimitModel m) { return m == LimitModel::limit231 ? "limit231" : "limit321"; }

Model parse_model(const std::string& text) {
  if (text == "av231") return Model::av231;
  if (text == "av321") return Model::av321;
  throw std::invalid_argument("unknown model '" + text + "' (expected av231 or av321)");
}

LimitModel parse_limit_model(const std::string& text) {
  if (text == "limit231") return LimitModel::limit231;
  if (text == "limit321") return LimitModel::limit321;
  throw std::invalid_argument("unknown limit model '" + text + "' (expected limit231 or limit321)");
}

Permutation class_pattern(Model m) { return m == Model::av231 ? Permutation{2, 3, 1} : Permutation{3, 2, 1}; }

Permutation sample_model(Model m, int n, RandomStream& rs) {
  return m == Model::av231 ? uniform_av231(n, rs) : uniform_av321(n, rs);
}

Rational limit_value(Model m, const Permutation& pi) {
  if (!avoids(pi, class_pattern(m))) return 0;
  return m == Model::av231 ? p231(pi) : p321(pi);
}

std::string subset_label(const std::vector<int>& subset) {
  std::string s = "{";
  for (std::size_t j = 0; j < subset.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(subset[j]);
  }
  return s + "}";
}

namespace {

struct CellStats {
  double mean = 0;
  double variance = 0;
};

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Splits `samples` into batches keyed by batch index (stream id), each sample
// adding integer counts to `cells` cells. Per-cell mean and across-sample
// variance of count/denominator are computed exactly from the merged sums.
template <class PerSample>
std::vector<CellStats> run_batched(int cells, int samples, std::uint64_t seed, int batch_size, int workers,
                                   std::int64_t denominator, PerSample per_sample) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (batch_size < 1) throw std::invalid_argument("batch size must be >= 1");
  if (denominator < 1) throw std::invalid_argument("empty statistic denominator");
  const int batches = (samples + batch_size - 1) / batch_size;
  std::vector<std::vector<std::int64_t>> sums(batches), sumsq(batches);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      std::vector<std::int64_t> counts(cells);
      for (int b = next++; b < batches; b = next++) {
        RandomStream rs(seed, static_cast<std::uint64_t>(b));
        sums[b].assign(cells, 0);
        sumsq[b].assign(cells, 0);
        const int todo = std::min(batch_size, samples - b * batch_size);
        for (int s = 0; s < todo; ++s) {
          std::fill(counts.begin(), counts.end(), 0);
          per_sample(rs, counts);
          for (int c = 0; c < cells; ++c) {
            sums[b][c] += counts[c];
            sumsq[b][c] += counts[c] * counts[c];
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = batches;
    }
  };
  const int threads = std::max(1, std::min(workers, batches));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<CellStats> out(cells);
  const BigInt s = samples;
  const BigInt d = denominator;
  for (int c = 0; c < cells; ++c) {
    BigInt s1 = 0, s2 = 0;
    for (int b = 0; b < batches; ++b) {
      s1 += sums[b][c];
      s2 += sumsq[b][c];
    }
    out[c].mean = to_double(Rational(s1, s * d));
    out[c].variance = samples > 1 ? to_double(Rational(s * s2 - s1 * s1, s * (s - 1) * d * d)) : 0.0;
  }
  return out;
}

std::vector<Permutation> spec_patterns(const ExperimentSpec& spec, int size) {
  if (!spec.patterns.empty()) return spec.patterns;
  return enumerate_class(class_pattern(spec.model), size);
}

ExperimentRecord make_record(const ExperimentSpec& spec, const Permutation& pi, const CellStats& st) {
  ExperimentRecord r;
  r.model = to_string(spec.model);
  r.n = spec.n;
  r.samples = spec.samples;
  r.seed = spec.seed;
  r.pattern = to_string(pi);
  r.empirical_mean = st.mean;
  r.empirical_variance = st.variance;
  const Rational th = limit_value(spec.model, pi);
  r.theoretical = th.str();
  r.theoretical_value = to_double(th);
  r.abs_error = std::abs(st.mean - *r.theoretical_value);
  r.std_error = std::sqrt(st.variance / spec.samples);
  return r;
}

void validate(const ExperimentSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n must be >= 1");
  if (spec.samples < 1) throw std::invalid_argument("samples must be >= 1");
}

}  // namespace

std::vector<ExperimentRecord> run_convergence(const ExperimentSpec& spec) {
  validate(spec);
  const auto start = Clock::now();
  const auto patterns = spec_patterns(spec, spec.pattern_size);
  const auto stats = run_batched(static_cast<int>(patterns.size()), spec.samples, spec.seed, spec.batch_size,
                                 spec.workers, spec.n, [&](RandomStream& rs, std::vector<std::int64_t>& counts) {
                                   const auto sigma = sample_model(spec.model, spec.n, rs);
                                   for (std::size_t j = 0; j < patterns.size(); ++j) {
                                     counts[j] = c_occ(patterns[j], sigma);
                                   }
                                 });
  std::vector<ExperimentRecord> out;
  const auto ms = elapsed_ms(start);
  for (std::size_t j = 0; j < patterns.size(); ++j) {
    out.push_back(make_record(spec, patterns[j], stats[j]));
    out.back().wall_time_ms = ms;
  }
  return out;
}

std::vector<ExperimentRecord> run_rooted_marginal(const ExperimentSpec& spec) {
  validate(spec);
  const int h = spec.radius;
  if (h < 1) throw std::invalid_argument("radius must be >= 1");
  if (spec.n < 2 * h + 1) throw std::invalid_argument("n must be >= 2*radius+1");
  const auto start = Clock::now();
  const auto patterns = spec_patterns(spec, 2 * h + 1);
  std::map<Permutation, int> index;
  for (std::size_t j = 0; j < patterns.size(); ++j) {
    if (patterns[j].size() != 2 * h + 1) throw std::invalid_argument("rooted marginal patterns need size 2*radius+1");
    index[patterns[j]] = static_cast<int>(j);
  }
  const auto stats = run_batched(static_cast<int>(patterns.size()), spec.samples, spec.seed, spec.batch_size,
                                 spec.workers, spec.n, [&](RandomStream& rs, std::vector<std::int64_t>& counts) {
                                   const auto sigma = sample_model(spec.model, spec.n, rs);
                                   for (int i = 1; i <= spec.n; ++i) {
                                     const auto r = restrict(RootedPermutation(sigma, i), h);
                                     if (r.root != h + 1 || r.size() != 2 * h + 1) continue;
                                     if (auto it = index.find(r.sigma); it != index.end()) ++counts[it->second];
                                   }
                                 });
  std::vector<ExperimentRecord> out;
  const auto ms = elapsed_ms(start);
  for (std::size_t j = 0; j < patterns.size(); ++j) {
    out.push_back(make_record(spec, patterns[j], stats[j]));
    out.back().wall_time_ms = ms;
  }
  return out;
}

VarianceTable run_variance_decay(Model model, const Permutation& pattern, const std::vector<int>& n_grid,
                                 int samples, std::uint64_t seed, int workers) {
  if (n_grid.empty()) throw std::invalid_argument("empty n grid");
  for (std::size_t j = 1; j < n_grid.size(); ++j) {
    if (n_grid[j] <= n_grid[j - 1]) throw std::invalid_argument("n grid must be increasing");
  }
  VarianceTable table{{}, true};
  for (int n : n_grid) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const auto st = run_batched(1, samples, seed, 16, workers, n, [&](RandomStream& rs, std::vector<std::int64_t>& c) {
      c[0] = c_occ(pattern, sample_model(model, n, rs));
    });
    if (!table.rows.empty() && st[0].variance > table.rows.back().variance) table.non_increasing = false;
    table.rows.push_back({n, st[0].mean, st[0].variance});
  }
  return table;
}

ShiftTable run_shift_invariance(LimitModel model, const Permutation& pattern, const std::vector<int>& shifts,
                                int radius, int samples, std::uint64_t seed, int workers) {
  if (shifts.empty()) throw std::invalid_argument("no shifts requested");
  int widest = 0;
  for (int s : shifts) widest = std::max(widest, std::abs(s));
  if (radius < widest + pattern.size()) throw std::invalid_argument("radius too small for the requested shifts");
  const int cells = static_cast<int>(shifts.size());
  const auto st = run_batched(cells, samples, seed, 256, workers, 1, [&](RandomStream& rs, std::vector<std::int64_t>& c) {
    const auto window = model == LimitModel::limit231 ? limit231_window(radius, rs) : limit321_window(radius, rs);
    const auto order = to_order(window);
    for (int j = 0; j < cells; ++j) c[j] = in_shift_set(order, pattern, shifts[j]);
  });
  ShiftTable table{{}, 0.0};
  double lo = 1.0, hi = 0.0;
  for (int j = 0; j < cells; ++j) {
    table.rows.push_back({shifts[j], st[j].mean});
    lo = std::min(lo, st[j].mean);
    hi = std::max(hi, st[j].mean);
  }
  table.spread = hi - lo;
  return table;
}

FrequencyResult run_separating_line(int n, int k, int samples, std::uint64_t seed, int workers) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const auto st = run_batched(1, samples, seed, 16, workers, n, [&](RandomStream& rs, std::vector<std::int64_t>& c) {
    const auto sigma = uniform_av321(n, rs);
    for (int i = 1; i <= n; ++i) c[0] += has_separating_line(sigma, i, k);
  });
  return {st[0].mean, st[0].variance};
}

WindowTable run_window_set_uniformity(int n, int k, int samples, std::uint64_t seed, int workers) {
  if (k < 1 || k > 2) throw std::invalid_argument("window-set table supports k in {1,2}");
  if (n < 2 * k + 1) throw std::invalid_argument("n must be >= 2k+1");
  const int width = 2 * k + 1;
  const int cells = 1 << width;
  const auto st = run_batched(cells, samples, seed, 16, workers, n - 2 * k, [&](RandomStream& rs, std::vector<std::int64_t>& c) {
    const auto sigma = uniform_av321(n, rs);
    // Sliding bit mask: bit x+k set when i+x is in E+.
    for (int i = k + 1; i <= n - k; ++i) {
      int mask = 0;
      for (int x = -k; x <= k; ++x) mask |= (sigma(i + x) >= i + x ? 1 : 0) << (x + k);
      ++c[mask];
    }
  });
  WindowTable table{{}, static_cast<double>(2 * k) / n};
  for (int mask = 0; mask < cells; ++mask) {
    std::vector<int> subset;
    for (int x = -k; x <= k; ++x) {
      if ((mask >> (x + k)) & 1) subset.push_back(x);
    }
    table.cells.push_back({subset, st[mask].mean});
  }
  return table;
}

void to_json(nlohmann::json& j, const ExperimentRecord& r) {
  auto opt = [](const auto& v) -> nlohmann::json { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  j = nlohmann::json{{"schema_version", r.schema_version},
                     {"model", r.model},
                     {"n", r.n},
                     {"samples", r.samples},
                     {"seed", r.seed},
                     {"pattern", r.pattern},
                     {"empirical_mean", r.empirical_mean},
                     {"empirical_variance", r.empirical_variance},
                     {"theoretical", opt(r.theoretical)},
                     {"theoretical_value", opt(r.theoretical_value)},
                     {"abs_error", opt(r.abs_error)},
                     {"std_error", r.std_error},
                     {"wall_time_ms", r.wall_time_ms}};
}

void from_json(const nlohmann::json& j, ExperimentRecord& r) {
  j.at("schema_version").get_to(r.schema_version);
  if (r.schema_version != kSchemaVersion) throw std::invalid_argument("unsupported record schema version");
  j.at("model").get_to(r.model);
  j.at("n").get_to(r.n);
  j.at("samples").get_to(r.samples);
  j.at("seed").get_to(r.seed);
  j.at("pattern").get_to(r.pattern);
  j.at("empirical_mean").get_to(r.empirical_mean);
  j.at("empirical_variance").get_to(r.empirical_variance);
  auto opt_string = [&](const char* key, std::optional<std::string>& out) {
    out = j.at(key).is_null() ? std::nullopt : std::optional<std::string>(j.at(key).get<std::string>());
  };
  auto opt_double = [&](const char* key, std::optional<double>& out) {
    out = j.at(key).is_null() ? std::nullopt : std::optional<double>(j.at(key).get<double>());
  };
  opt_string("theoretical", r.theoretical);
  opt_double("theoretical_value", r.theoretical_value);
  opt_double("abs_error", r.abs_error);
  j.at("std_error").get_to(r.std_error);
  j.at("wall_time_ms").get_to(r.wall_time_ms);
}

void to_json(nlohmann::json& j, const ExperimentSpec& s) {
  std::vector<std::string> pats;
  for (const auto& p : s.patterns) pats.push_back(to_string(p));
  j = nlohmann::json{{"model", to_string(s.model)}, {"n", s.n},           {"samples", s.samples},
                     {"pattern_size", s.pattern_size}, {"seed", s.seed},  {"workers", s.workers},
                     {"radius", s.radius},            {"batch_size", s.batch_size}, {"patterns", pats}};
}

nlohmann::json envelope(const nlohmann::json& spec, const std::vector<ExperimentRecord>& records) {
  return nlohmann::json{{"spec", spec}, {"records", records}, {"library_version", kLibraryVersion}};
}

}  // namespace permlocal
