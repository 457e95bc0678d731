#include <doctest.h>

#include <cmath>

#include "permlocal/experiments.hpp"
#include "permlocal/limits.hpp"

using namespace permlocal;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
}  // namespace

TEST_CASE("trivial convergence run is exact") {
  ExperimentSpec spec;
  spec.model = Model::av231;
  spec.n = 1;
  spec.samples = 1;
  spec.pattern_size = 1;
  const auto recs = run_convergence(spec);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].pattern == "1");
  CHECK(recs[0].empirical_mean == 1.0);
  CHECK(recs[0].empirical_variance == 0.0);
  CHECK(recs[0].theoretical == std::optional<std::string>("1"));
  CHECK(recs[0].abs_error == std::optional<double>(0.0));
}

TEST_CASE("theoretical values attached to records") {
  ExperimentSpec spec;
  spec.model = Model::av321;
  spec.n = 30;
  spec.samples = 20;
  spec.pattern_size = 3;
  spec.seed = 4;
  const auto recs = run_convergence(spec);
  REQUIRE(recs.size() == 5);
  for (const auto& r : recs) {
    if (r.pattern == "1,2,3") CHECK(*r.theoretical == "1/2");
    if (r.pattern == "3,1,2") CHECK(*r.theoretical == "1/8");
    CHECK(std::abs(*r.abs_error - std::abs(r.empirical_mean - *r.theoretical_value)) < 1e-15);
    CHECK(std::abs(r.std_error - std::sqrt(r.empirical_variance / r.samples)) < 1e-15);
  }
  spec.patterns = {P("2143")};
  const auto two = run_convergence(spec);
  REQUIRE(two.size() == 1);
  CHECK(*two[0].theoretical == "0");
  CHECK(limit_value(Model::av321, P("321")) == 0);
  CHECK(limit_value(Model::av231, P("132985476")) == Rational(1, 2048));
}

TEST_CASE("records survive a JSON round trip") {
  ExperimentRecord r;
  r.model = "av231";
  r.n = 4096;
  r.samples = 2000;
  r.seed = 18446744073709551615ull;
  r.pattern = "1,3,2";
  r.empirical_mean = 0.2512345678901234;
  r.empirical_variance = 1.5e-5;
  r.theoretical = "1/4";
  r.theoretical_value = 0.25;
  r.abs_error = 0.0012345678901234;
  r.std_error = 8.6e-5;
  r.wall_time_ms = 1234;
  const nlohmann::json j = r;
  CHECK(nlohmann::json::parse(j.dump()).get<ExperimentRecord>() == r);

  ExperimentRecord bare = r;
  bare.theoretical.reset();
  bare.theoretical_value.reset();
  bare.abs_error.reset();
  const nlohmann::json jb = bare;
  CHECK(jb.at("theoretical").is_null());
  CHECK(nlohmann::json::parse(jb.dump()).get<ExperimentRecord>() == bare);

  auto bad = j;
  bad["schema_version"] = 99;
  CHECK_THROWS(bad.get<ExperimentRecord>());

  ExperimentSpec spec;
  const auto env = envelope(nlohmann::json(spec), {r});
  CHECK(env.at("library_version") == kLibraryVersion);
  CHECK(env.at("records").size() == 1);
  CHECK(env.at("spec").at("model") == "av231");
}

TEST_CASE("results do not depend on worker count") {
  ExperimentSpec spec;
  spec.model = Model::av231;
  spec.n = 200;
  spec.samples = 100;
  spec.pattern_size = 3;
  spec.seed = 99;
  spec.workers = 1;
  auto a = run_convergence(spec);
  spec.workers = 3;
  auto b = run_convergence(spec);
  REQUIRE(a.size() == b.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    a[j].wall_time_ms = b[j].wall_time_ms = 0;
    CHECK(a[j] == b[j]);
  }
  const auto s1 = run_separating_line(100, 2, 40, 5, 1);
  const auto s2 = run_separating_line(100, 2, 40, 5, 4);
  CHECK(s1.mean == s2.mean);
  CHECK(s1.variance == s2.variance);
}

TEST_CASE("rooted marginals equal window proportions") {
  for (auto model : {Model::av231, Model::av321}) {
    ExperimentSpec spec;
    spec.model = model;
    spec.n = 40;
    spec.samples = 30;
    spec.seed = 13;
    spec.radius = 1;
    spec.pattern_size = 3;
    const auto rooted = run_rooted_marginal(spec);
    const auto conv = run_convergence(spec);
    REQUIRE(rooted.size() == conv.size());
    for (std::size_t j = 0; j < rooted.size(); ++j) {
      CHECK(rooted[j].pattern == conv[j].pattern);
      CHECK(rooted[j].empirical_mean == conv[j].empirical_mean);
      CHECK(rooted[j].empirical_variance == conv[j].empirical_variance);
    }
  }
  ExperimentSpec spec;
  spec.model = Model::av321;
  spec.n = 30;
  spec.samples = 10;
  spec.radius = 1;
  spec.patterns = {P("321")};
  const auto zero = run_rooted_marginal(spec);
  CHECK(zero[0].empirical_mean == 0.0);
  spec.n = 2;
  CHECK_THROWS_AS(run_rooted_marginal(spec), std::invalid_argument);
}

TEST_CASE("variance decay table") {
  const auto t = run_variance_decay(Model::av231, P("1"), {1}, 10, 1);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].variance == 0.0);
  CHECK(t.rows[0].mean == 1.0);
  const auto g = run_variance_decay(Model::av321, P("21"), {16, 64}, 50, 2);
  CHECK(g.rows.size() == 2);
  CHECK(g.rows[1].n == 64);
  CHECK_THROWS_AS(run_variance_decay(Model::av321, P("21"), {64, 16}, 50, 2), std::invalid_argument);
}

TEST_CASE("shift invariance table") {
  for (auto m : {LimitModel::limit231, LimitModel::limit321}) {
    const auto t = run_shift_invariance(m, P("1"), {-3, -1, 0, 2, 3}, 6, 200, 3);
    for (const auto& row : t.rows) CHECK(row.estimate == 1.0);
    CHECK(t.spread == 0.0);
  }
  CHECK_THROWS_AS(run_shift_invariance(LimitModel::limit321, P("12"), {-3, 3}, 4, 10, 1), std::invalid_argument);
  const auto t = run_shift_invariance(LimitModel::limit321, P("12"), {-3, 0, 3}, 6, 4000, 7);
  for (const auto& row : t.rows) CHECK(std::abs(row.estimate - 0.75) < 0.04);
}

TEST_CASE("separating line and window sets") {
  const auto tiny = run_separating_line(5, 2, 50, 1);
  CHECK(tiny.mean >= 0.0);
  CHECK(tiny.mean <= 1.0);
  const auto w = run_window_set_uniformity(200, 1, 20, 3);
  CHECK(w.cells.size() == 8);
  CHECK(w.discarded_fraction == doctest::Approx(2.0 / 200));
  double total = 0;
  for (const auto& c : w.cells) total += c.mean;
  CHECK(total == doctest::Approx(1.0));
  CHECK(subset_label(w.cells[5].subset) == "{-1,1}");
  CHECK_THROWS_AS(run_window_set_uniformity(200, 3, 20, 3), std::invalid_argument);
  CHECK_THROWS_AS(run_separating_line(10, 0, 5, 1), std::invalid_argument);
}

TEST_CASE("model names") {
  CHECK(parse_model("av231") == Model::av231);
  CHECK(to_string(Model::av321) == "av321");
  CHECK(parse_limit_model("limit321") == LimitModel::limit321);
  CHECK_THROWS_AS(parse_model("av123"), std::invalid_argument);
}
