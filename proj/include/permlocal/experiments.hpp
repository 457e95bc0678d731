#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permlocal/permutation.hpp"
#include "permlocal/random.hpp"

namespace permlocal {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class Model { av231, av321 };
enum class LimitModel { limit231, limit321 };

std::string to_string(Model m);
std::string to_string(LimitModel m);
Model parse_model(const std::string& text);
LimitModel parse_limit_model(const std::string& text);
Permutation class_pattern(Model m);  // 231 or 321
Permutation sample_model(Model m, int n, RandomStream& rs);
// Exact limit of the pattern proportion; 0 for patterns outside the class.
Rational limit_value(Model m, const Permutation& pi);

struct ExperimentSpec {
  Model model = Model::av231;
  int n = 1;
  int samples = 1;
  int pattern_size = 3;
  std::uint64_t seed = 0;
  int workers = 1;
  int radius = 1;          // rooted marginals
  int batch_size = 16;     // samples per RandomStream
  std::vector<Permutation> patterns;  // overrides the whole class of size pattern_size
};

struct ExperimentRecord {
  int schema_version = kSchemaVersion;
  std::string model;
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string pattern;
  double empirical_mean = 0;
  double empirical_variance = 0;
  std::optional<std::string> theoretical;  // exact rational text
  std::optional<double> theoretical_value;
  std::optional<double> abs_error;
  double std_error = 0;
  std::int64_t wall_time_ms = 0;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

void to_json(nlohmann::json& j, const ExperimentRecord& r);
void from_json(const nlohmann::json& j, ExperimentRecord& r);
void to_json(nlohmann::json& j, const ExperimentSpec& s);
nlohmann::json envelope(const nlohmann::json& spec, const std::vector<ExperimentRecord>& records);

std::vector<ExperimentRecord> run_convergence(const ExperimentSpec& spec);
std::vector<ExperimentRecord> run_rooted_marginal(const ExperimentSpec& spec);

struct VarianceRow {
  int n;
  double mean;
  double variance;
};
struct VarianceTable {
  std::vector<VarianceRow> rows;
  bool non_increasing;  // trend diagnostic only
};
VarianceTable run_variance_decay(Model model, const Permutation& pattern, const std::vector<int>& n_grid,
                                 int samples, std::uint64_t seed, int workers = 1);

struct ShiftRow {
  int shift;
  double estimate;
};
struct ShiftTable {
  std::vector<ShiftRow> rows;
  double spread;
};
ShiftTable run_shift_invariance(LimitModel model, const Permutation& pattern, const std::vector<int>& shifts,
                                int radius, int samples, std::uint64_t seed, int workers = 1);

struct FrequencyResult {
  double mean;
  double variance;
};
FrequencyResult run_separating_line(int n, int k, int samples, std::uint64_t seed, int workers = 1);

struct WindowCell {
  std::vector<int> subset;  // offsets in [-k,k]
  double mean;
};
struct WindowTable {
  std::vector<WindowCell> cells;
  double discarded_fraction;
};
WindowTable run_window_set_uniformity(int n, int k, int samples, std::uint64_t seed, int workers = 1);

std::string subset_label(const std::vector<int>& subset);

}  // namespace permlocal
