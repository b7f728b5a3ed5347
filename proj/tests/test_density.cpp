#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ltclus/datasets.hpp"
#include "ltclus/density.hpp"
#include "helpers.hpp"

using namespace ltclus;

namespace {

Dataset make_dataset(std::vector<std::pair<double, double>> pts) {
  Dataset ds;
  ds.dims = 2;
  for (auto [x, y] : pts) {
    ds.points.push_back(x);
    ds.points.push_back(y);
  }
  return ds;
}

}  // namespace

TEST_CASE("pairwise_distances 3-4-5 triangle") {
  const auto d = pairwise_distances(make_dataset({{0, 0}, {3, 4}}));
  CHECK(d(0, 1) == 5.0);
  CHECK(d(1, 0) == 5.0);
  CHECK(d(0, 0) == 0.0);
}

TEST_CASE("pairwise_distances identical points") {
  const auto d = pairwise_distances(make_dataset({{1, 1}, {1, 1}}));
  CHECK(d(0, 1) == 0.0);
}

TEST_CASE("pairwise_distances matches the direct double loop") {
  std::mt19937_64 rng(7);
  Dataset ds = testutil::random_mixture(rng, 10, false);
  const auto d = pairwise_distances(ds);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double dx = ds.at(i, 0) - ds.at(j, 0);
      const double dy = ds.at(i, 1) - ds.at(j, 1);
      const double expected = std::sqrt(dx * dx + dy * dy);
      CHECK(d(i, j) == expected);
      CHECK(d(i, j) == d(j, i));
    }
  }
}

TEST_CASE("pairwise_distances rejects non-finite coordinates") {
  Dataset ds = make_dataset({{0, 0}, {1, 1}});
  ds.points[2] = std::nan("");
  CHECK_THROWS_AS(pairwise_distances(ds), InputError);
  CHECK_THROWS_AS(pairwise_distances(make_dataset({{0, 0}})), ParamError);
}

TEST_CASE("estimate_dc single pair returns its distance for any percent") {
  const auto d = pairwise_distances(make_dataset({{0, 0}, {3, 4}}));
  CHECK(estimate_dc(d, 2.0) == 5.0);
  CHECK(estimate_dc(d, 99.0) == 5.0);
}

TEST_CASE("ascending rank value hits the ceil rank") {
  CHECK(ascending_rank_value({1, 2, 3, 4, 5}, 40.0) == 2.0);
  CHECK(ascending_rank_value({5, 4, 3, 2, 1}, 40.0) == 2.0);
  CHECK(ascending_rank_value({1, 2, 3, 4, 5}, 0.1) == 1.0);
  CHECK(ascending_rank_value({1, 2, 3, 4, 5}, 99.9) == 5.0);
  CHECK_THROWS_AS(ascending_rank_value({1.0}, 0.0), ParamError);
  CHECK_THROWS_AS(ascending_rank_value({1.0}, 100.0), ParamError);
}

TEST_CASE("estimate_dc equals the full-sort oracle") {
  GeneratorSpec spec = default_spec(GeneratorKind::five_spherical);
  spec.n_points = 120;
  const auto d = pairwise_distances(gen_five_spherical(spec));
  std::vector<double> sorted = d.values();
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  for (double percent : {0.5, 2.0, 10.0, 50.0, 97.0}) {
    const std::size_t rank = std::min<std::size_t>(
        m, static_cast<std::size_t>(std::ceil(percent / 100.0 * m)));
    CHECK(estimate_dc(d, percent) == sorted[rank - 1]);
  }
}

TEST_CASE("estimate_dc is monotone in percent") {
  std::mt19937_64 rng(11);
  const auto d = pairwise_distances(testutil::random_mixture(rng, 40));
  double prev = 0.0;
  for (double percent = 1.0; percent < 100.0; percent += 7.0) {
    const double dc = estimate_dc(d, percent);
    CHECK(dc >= prev);
    prev = dc;
  }
}

TEST_CASE("estimate_dc rejects an all-zero matrix") {
  const auto d = pairwise_distances(make_dataset({{2, 2}, {2, 2}, {2, 2}}));
  CHECK_THROWS_AS(estimate_dc(d, 2.0), InputError);
}

TEST_CASE("rho_cutoff counts strictly-closer neighbors") {
  const auto near = pairwise_distances(make_dataset({{0, 0}, {1, 0}}));
  auto rho = rho_cutoff(near, 2.0);
  CHECK(rho.rho == std::vector<double>{1, 1});
  CHECK(rho.kernel == Kernel::cutoff);
  CHECK(rho.dc == 2.0);

  const auto at = pairwise_distances(make_dataset({{0, 0}, {2, 0}}));
  CHECK(rho_cutoff(at, 2.0).rho == std::vector<double>{0, 0});  // d == dc excluded
  CHECK_THROWS_AS(rho_cutoff(at, 0.0), ParamError);
}

TEST_CASE("rho_cutoff matches the counting oracle and stays integral") {
  std::mt19937_64 rng(3);
  Dataset ds = testutil::random_mixture(rng, 50);
  const auto d = pairwise_distances(ds);
  const double dc = estimate_dc(d, 20.0);
  const auto rho = rho_cutoff(d, dc);
  for (int i = 0; i < 50; ++i) {
    double count = 0;
    for (int j = 0; j < 50; ++j) {
      if (j != i && d(i, j) < dc) count += 1;
    }
    CHECK(rho.rho[i] == count);
    CHECK(rho.rho[i] == std::floor(rho.rho[i]));
    CHECK(rho.rho[i] >= 0);
    CHECK(rho.rho[i] <= 49);
  }
}

TEST_CASE("rho_gaussian analytic pair values") {
  const auto d = pairwise_distances(make_dataset({{0, 0}, {1, 0}}));
  const auto rho = rho_gaussian(d, 1.0);
  CHECK(rho.rho[0] == doctest::Approx(0.36787944117144233).epsilon(1e-14));
  CHECK(rho.rho[1] == rho.rho[0]);

  const auto zero = pairwise_distances(make_dataset({{1, 1}, {1, 1}}));
  CHECK(rho_gaussian(zero, 1.0).rho == std::vector<double>{1, 1});
  CHECK_THROWS_AS(rho_gaussian(d, -1.0), ParamError);
}

TEST_CASE("rho_gaussian matches the direct sum") {
  std::mt19937_64 rng(5);
  Dataset ds = testutil::random_mixture(rng, 50);
  const auto d = pairwise_distances(ds);
  const double dc = estimate_dc(d, 5.0);
  const auto rho = rho_gaussian(d, dc);
  for (int i = 0; i < 50; ++i) {
    double sum = 0.0;
    for (int j = 0; j < 50; ++j) {
      if (j == i) continue;
      const double r = d(i, j) / dc;
      sum += std::exp(-r * r);
    }
    CHECK(rho.rho[i] == doctest::Approx(sum).epsilon(1e-12));
  }
}

TEST_CASE("rho_gaussian never decreases when a point is added") {
  std::mt19937_64 rng(9);
  Dataset ds = testutil::random_mixture(rng, 30, false);
  const double dc = estimate_dc(pairwise_distances(ds), 10.0);
  const auto before = rho_gaussian(pairwise_distances(ds), dc);
  ds.points.push_back(0.5);
  ds.points.push_back(-0.5);
  const auto after = rho_gaussian(pairwise_distances(ds), dc);
  for (int i = 0; i < 30; ++i) CHECK(after.rho[i] >= before.rho[i]);
}

TEST_CASE("density_order sorts descending with index tie-break") {
  CHECK(density_order(std::vector<double>{1, 3, 2}) == std::vector<int>{1, 2, 0});
  CHECK(density_order(std::vector<double>{2, 2, 2}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("density_order reproduces the 13-object ordering") {
  const auto fx = ds1_fixture();
  const auto expected = fx.rho_order();
  // densities consistent with that ordering: rank position decides
  std::vector<double> rho(13);
  for (int p = 0; p < 13; ++p) rho[expected[p]] = 13.0 - p;
  CHECK(density_order(rho) == expected);
}

TEST_CASE("density_order is a permutation and nonincreasing") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 20; ++round) {
    std::vector<double> rho(40);
    for (double& v : rho) v = std::floor(testutil::uniform01(rng) * 8.0);
    const auto q = density_order(rho);
    std::vector<char> seen(rho.size(), 0);
    for (int v : q) {
      CHECK(!seen[v]);
      seen[v] = 1;
    }
    for (std::size_t p = 0; p + 1 < q.size(); ++p) {
      CHECK(rho[q[p]] >= rho[q[p + 1]]);
      if (rho[q[p]] == rho[q[p + 1]]) CHECK(q[p] < q[p + 1]);
    }
  }
}

TEST_CASE("distance matrix CSV import") {
  testutil::TempDir tmp("dmat");

  const std::string good = tmp.file("good.csv");
  testutil::write_file(good, "0,1,2\n1,0,1.5\n2,1.5,0\n");
  const auto d = read_distance_matrix_csv(good);
  CHECK(d.size() == 3);
  CHECK(d(0, 2) == 2.0);
  CHECK(d(2, 1) == 1.5);

  const std::string asym = tmp.file("asym.csv");
  testutil::write_file(asym, "0,1\n1.1,0\n");
  CHECK_THROWS_AS(read_distance_matrix_csv(asym), ParseError);

  const std::string ragged = tmp.file("ragged.csv");
  testutil::write_file(ragged, "0,1\n1,0,3\n");
  CHECK_THROWS_AS(read_distance_matrix_csv(ragged), ParseError);

  CHECK_THROWS_AS(read_distance_matrix_csv(tmp.file("missing.csv")), IoError);
}
