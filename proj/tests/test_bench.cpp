#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "ltclus/bench.hpp"
#include "ltclus/density.hpp"
#include "helpers.hpp"

using namespace ltclus;

TEST_CASE("break_even_layers reference arithmetic") {
  CHECK(break_even_layers(300, 5, 2) == 101);  // ratio exactly 100, strict
  CHECK(break_even_layers(10, 4, 2) == 6);
  CHECK(break_even_layers(10, 4.5, 2) == 5);   // ratio 4, strict -> 5
  CHECK(!break_even_layers(10, 2, 2).has_value());
  CHECK(!break_even_layers(10, 1, 2).has_value());
  CHECK_THROWS_AS(break_even_layers(0, 1, 1), ParamError);
  CHECK_THROWS_AS(break_even_layers(1, -1, 1), ParamError);
}

TEST_CASE("break_even_layers monotonicity") {
  std::mt19937_64 rng(89);
  for (int round = 0; round < 50; ++round) {
    const double split = 0.5 + testutil::uniform01(rng) * 4.0;
    const double assign = split + 0.1 + testutil::uniform01(rng) * 10.0;
    const double constr = 1.0 + testutil::uniform01(rng) * 500.0;
    const auto base = break_even_layers(constr, assign, split);
    REQUIRE(base.has_value());
    CHECK(*base >= 1);
    // nondecreasing in construction cost
    CHECK(*break_even_layers(constr * 2, assign, split) >= *base);
    // nonincreasing in the assign-split gap
    CHECK(*break_even_layers(constr, assign + 5.0, split) <= *base);
  }
}

TEST_CASE("prepared inputs match the matrix-backed pipeline exactly") {
  std::mt19937_64 rng(97);
  for (int n : {60, 500, 1200}) {
    const Dataset ds = testutil::random_mixture(rng, n);
    const StageInputs prep = prepare_stage_inputs(ds, 4);

    const auto d = pairwise_distances(ds);
    const DensityVector rho = rho_cutoff(d, estimate_dc(d, 2.0));
    const PeakProfile p = make_peak_profile(d, rho);
    CHECK(prep.q == p.q);
    CHECK(prep.nn == p.nn);
    CHECK(prep.gamma_order == p.gamma_order);
    CHECK(prep.centers.ids == select_centers(p.gamma_order, 4).ids);
    CHECK(prep.tree.root() == p.q[0]);
  }
}

TEST_CASE("prepare_stage_inputs validates parameters") {
  std::mt19937_64 rng(101);
  const Dataset ds = testutil::random_mixture(rng, 20);
  CHECK_THROWS_AS(prepare_stage_inputs(ds, 0), ParamError);
  CHECK_THROWS_AS(prepare_stage_inputs(ds, 21), ParamError);
  Dataset single;
  single.dims = 2;
  single.points = {0.0, 0.0};
  CHECK_THROWS_AS(prepare_stage_inputs(single, 1), ParamError);
}

TEST_CASE("time_stage needs three repeats and orders stats") {
  std::mt19937_64 rng(103);
  const StageInputs prep = prepare_stage_inputs(testutil::random_mixture(rng, 200), 3);
  CHECK_THROWS_AS(time_stage(Stage::assign, prep, 2), ParamError);
  for (Stage stage : {Stage::assign, Stage::construct, Stage::split}) {
    const TimingStats stats = time_stage(stage, prep, 5);
    CHECK(stats.repeats == 5);
    CHECK(stats.min_ns > 0);
    CHECK(stats.median_ns >= stats.min_ns);
  }
  const TimingStats with_labels = time_split_with_labels(prep, 5);
  CHECK(with_labels.median_ns >= with_labels.min_ns);
}

TEST_CASE("synth_blobs is deterministic with k populated classes") {
  const Dataset a = synth_blobs(100, 8, 5);
  const Dataset b = synth_blobs(100, 8, 5);
  CHECK(a.points == b.points);
  CHECK(a.size() == 100);
  const std::set<int> classes(a.labels.begin(), a.labels.end());
  CHECK(classes.size() == 8);
  CHECK(synth_blobs(100, 8, 6).points != a.points);
  CHECK_THROWS_AS(synth_blobs(0, 3, 1), ParamError);
}

TEST_CASE("run_benchmark on a tiny dataset flags clock resolution") {
  const BenchReport report =
      run_benchmark({{"tiny", synth_blobs(13, 2, 7), 2}}, 3);
  REQUIRE(report.results.size() == 1);
  const BenchDatasetResult& r = report.results[0];
  CHECK(r.n == 13);
  CHECK(r.m == 2);
  CHECK(r.split.low_confidence);  // sub-microsecond stage on 13 points

  const std::string summary = bench_summary(report);
  CHECK(summary.find("low confidence") != std::string::npos);

  CHECK_THROWS_AS(run_benchmark({{"tiny", synth_blobs(13, 2, 7), 2}}, 1), ParamError);
  CHECK_THROWS_AS(run_benchmark({}, 5), ParamError);
}

TEST_CASE("bench CSV layout: three stage rows per dataset") {
  testutil::TempDir tmp("bench");
  const BenchReport report = run_benchmark(
      {{"a", synth_blobs(120, 4, 1), 4}, {"b", synth_blobs(80, 3, 2), 3}}, 3);
  const std::string path = tmp.file("report.csv");
  write_bench_csv(path, report);
  const std::string text = testutil::read_file(path);
  CHECK(text.find("dataset,N,m,stage,median_ns,min_ns,repeats,break_even_Nl") == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);  // header + 2 * 3 stages
  for (const char* stage : {"assign", "construct", "split"}) {
    CHECK(text.find(std::string("a,120,4,") + stage) != std::string::npos);
    CHECK(text.find(std::string("b,80,3,") + stage) != std::string::npos);
  }
}

TEST_CASE("linear_fit recovers exact lines") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{3, 5, 7, 9};  // y = 2x + 1
  const LinearFit fit = linear_fit(x, y);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> noisy{3.2, 4.6, 7.4, 8.8};
  const LinearFit nf = linear_fit(x, noisy);
  CHECK(nf.r2 > 0.9);
  CHECK(nf.r2 < 1.0);

  CHECK_THROWS_AS(linear_fit(std::vector<double>{1}, std::vector<double>{1}), ParamError);
  CHECK_THROWS_AS(linear_fit(std::vector<double>{1, 1}, std::vector<double>{1, 2}),
                  ParamError);
}
