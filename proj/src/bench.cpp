#include "ltclus/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "ltclus/density.hpp"

namespace ltclus {

namespace {

constexpr std::int64_t kLowConfidenceNs = 1000;
constexpr std::size_t kExactDcPairs = 4'000'000;
constexpr std::size_t kDcSamplePairs = 1'000'000;

inline void sink(const void* p) { asm volatile("" : : "g"(p) : "memory"); }

struct PointDistance {
  const double* points;
  int dims;

  double operator()(int a, int b) const {
    const double* pa = points + static_cast<std::size_t>(a) * dims;
    const double* pb = points + static_cast<std::size_t>(b) * dims;
    double s = 0.0;
    for (int c = 0; c < dims; ++c) {
      const double diff = pa[c] - pb[c];
      s += diff * diff;
    }
    return std::sqrt(s);
  }
};

double streamed_dc(const Dataset& ds, double dc_percent, PointDistance dist) {
  const int n = ds.size();
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<double> values;
  if (pairs <= kExactDcPairs) {
    values.reserve(pairs);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) values.push_back(dist(i, j));
    }
  } else {
    values.reserve(kDcSamplePairs);
    std::mt19937_64 rng(0x5eedULL);
    for (std::size_t s = 0; s < kDcSamplePairs; ++s) {
      const int i = static_cast<int>(rng() % n);
      int j = static_cast<int>(rng() % (n - 1));
      if (j >= i) ++j;
      values.push_back(dist(i, j));
    }
  }
  const double dc = ascending_rank_value(std::move(values), dc_percent);
  if (dc <= 0.0) throw InputError("benchmark input: degenerate cutoff distance");
  return dc;
}

std::vector<double> streamed_cutoff_rho(const Dataset& ds, double dc,
                                        PointDistance dist) {
  const int n = ds.size();
  std::vector<double> rho(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist(i, j) < dc) {
        rho[i] += 1.0;
        rho[j] += 1.0;
      }
    }
  }
  return rho;
}

std::int64_t median_of(std::vector<std::int64_t>& sorted) {
  const std::size_t r = sorted.size();
  if (r % 2 == 1) return sorted[r / 2];
  return (sorted[r / 2 - 1] + sorted[r / 2]) / 2;
}

template <class Fn>
TimingStats time_runs(Fn&& run_once, int repeats) {
  if (repeats < 3) throw ParamError("timing needs at least 3 repeats");
  using clock = std::chrono::steady_clock;
  run_once();
  run_once();
  std::vector<std::int64_t> ns;
  ns.reserve(repeats);
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = clock::now();
    run_once();
    const auto t1 = clock::now();
    ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  }
  std::sort(ns.begin(), ns.end());
  TimingStats stats;
  stats.repeats = repeats;
  stats.min_ns = ns.front();
  stats.median_ns = median_of(ns);
  stats.low_confidence = stats.min_ns < kLowConfidenceNs;
  return stats;
}

}  // namespace

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::assign: return "assign";
    case Stage::construct: return "construct";
    case Stage::split: return "split";
  }
  return "?";
}

StageInputs prepare_stage_inputs(const Dataset& dataset, int m, double dc_percent) {
  const int n = dataset.size();
  if (n < 2) throw ParamError("benchmark input: need at least two points");
  if (m < 1 || m > n) throw ParamError("benchmark input: center count out of range");

  const PointDistance dist{dataset.points.data(), dataset.dims};
  const double dc = streamed_dc(dataset, dc_percent, dist);
  const std::vector<double> rho = streamed_cutoff_rho(dataset, dc, dist);

  StageInputs in;
  in.q = density_order(rho);
  std::vector<double> delta;
  delta_nn_scan(n, in.q, dist, delta, in.nn);
  in.gamma_order = gamma_order(gamma_values(rho, delta));
  in.centers = select_centers(in.gamma_order, m);
  in.tree = LeadingTree::build(in.nn, in.gamma_order);
  return in;
}

TimingStats time_stage(Stage stage, const StageInputs& inputs, int repeats) {
  switch (stage) {
    case Stage::assign:
      return time_runs(
          [&inputs] {
            const LabelVector cl = assign_baseline(inputs.nn, inputs.q, inputs.centers);
            sink(cl.data());
          },
          repeats);
    case Stage::construct:
      return time_runs(
          [&inputs] {
            const LeadingTree t =
                LeadingTree::build(inputs.nn, inputs.gamma_order, /*validate=*/false);
            sink(&t);
          },
          repeats);
    case Stage::split:
      return time_runs(
          [&inputs] {
            const ClusterForest f =
                split(inputs.tree, inputs.centers, SplitMode::prefix_fast);
            sink(&f);
          },
          repeats);
  }
  throw ParamError("time_stage: unknown stage");
}

TimingStats time_split_with_labels(const StageInputs& inputs, int repeats) {
  return time_runs(
      [&inputs] {
        const ClusterForest f = split(inputs.tree, inputs.centers, SplitMode::prefix_fast);
        const LabelVector cl = forest_labels(f);
        sink(cl.data());
      },
      repeats);
}

std::optional<long long> break_even_layers(double t_constr, double t_assign,
                                           double t_split) {
  if (!(t_constr > 0.0) || !(t_assign > 0.0) || !(t_split > 0.0)) {
    throw ParamError("break_even_layers: times must be positive");
  }
  if (t_assign <= t_split) return std::nullopt;
  const double ratio = t_constr / (t_assign - t_split);
  return static_cast<long long>(std::floor(ratio)) + 1;  // strictly greater
}

BenchReport run_benchmark(const std::vector<BenchInput>& inputs, int repeats) {
  if (inputs.empty()) throw ParamError("run_benchmark: no datasets");
  if (repeats < 3) throw ParamError("run_benchmark: repeats must be at least 3");

  BenchReport report;
  report.repeats = repeats;
#if defined(__VERSION__)
  report.environment = std::string("compiler ") + __VERSION__ + ", single thread";
#else
  report.environment = "single thread";
#endif

  for (const BenchInput& input : inputs) {
    const StageInputs prep = prepare_stage_inputs(input.data, input.m);
    BenchDatasetResult r;
    r.name = input.name;
    r.n = input.data.size();
    r.m = input.m;
    r.assign = time_stage(Stage::assign, prep, repeats);
    r.construct = time_stage(Stage::construct, prep, repeats);
    r.split = time_stage(Stage::split, prep, repeats);
    r.split_with_labels = time_split_with_labels(prep, repeats);
    r.split_faster = r.split.median_ns < r.assign.median_ns;
    if (r.assign.median_ns > r.split.median_ns && r.construct.median_ns > 0) {
      r.break_even_nl = break_even_layers(static_cast<double>(r.construct.median_ns),
                                          static_cast<double>(r.assign.median_ns),
                                          static_cast<double>(r.split.median_ns));
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

void write_bench_csv(const std::string& path, const BenchReport& report) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "dataset,N,m,stage,median_ns,min_ns,repeats,break_even_Nl\n";
  for (const BenchDatasetResult& r : report.results) {
    const std::string nl =
        r.break_even_nl ? std::to_string(*r.break_even_nl) : std::string();
    for (const auto& [stage, stats] :
         {std::pair<const char*, const TimingStats*>{"assign", &r.assign},
          {"construct", &r.construct},
          {"split", &r.split}}) {
      out << r.name << ',' << r.n << ',' << r.m << ',' << stage << ','
          << stats->median_ns << ',' << stats->min_ns << ',' << stats->repeats << ','
          << nl << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

std::string bench_summary(const BenchReport& report) {
  std::ostringstream out;
  out << "benchmark (" << report.repeats << " repeats, " << report.environment << ")\n";
  for (const BenchDatasetResult& r : report.results) {
    out << r.name << " (N=" << r.n << ", m=" << r.m << ")\n";
    out << "  assign            median " << r.assign.median_ns << " ns\n";
    out << "  construct         median " << r.construct.median_ns << " ns\n";
    out << "  split             median " << r.split.median_ns << " ns\n";
    out << "  split+labels      median " << r.split_with_labels.median_ns << " ns\n";
    out << "  split < assign:   " << (r.split_faster ? "yes" : "no") << '\n';
    if (r.break_even_nl) {
      out << "  layers to amortize construction: " << *r.break_even_nl << '\n';
    } else {
      out << "  layers to amortize construction: n/a (assign not slower than split)\n";
    }
    std::string flagged;
    for (const auto& [name, stats] :
         {std::pair<const char*, const TimingStats*>{"assign", &r.assign},
          {"construct", &r.construct},
          {"split", &r.split},
          {"split+labels", &r.split_with_labels}}) {
      if (stats->low_confidence) {
        if (!flagged.empty()) flagged += ", ";
        flagged += name;
      }
    }
    if (!flagged.empty()) {
      out << "  low confidence (near clock resolution): " << flagged << '\n';
    }
  }
  return out.str();
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ParamError("linear_fit: need equal-length inputs with >= 2 points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw ParamError("linear_fit: x values are all equal");

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double pred = fit.slope * x[i] + fit.intercept;
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - my) * (y[i] - my);
  }
  fit.r2 = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

Dataset synth_blobs(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 1) throw ParamError("synth_blobs: n and k must be positive");
  std::mt19937_64 rng(seed);
  auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  // Box-Muller keeps generation identical across standard libraries
  auto normal = [&] {
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  };

  std::vector<double> cx(k), cy(k), sigma(k);
  for (int b = 0; b < k; ++b) {
    cx[b] = (uniform01() * 2.0 - 1.0) * 50.0;
    cy[b] = (uniform01() * 2.0 - 1.0) * 50.0;
    sigma[b] = 0.5 + uniform01() * 2.0;
  }

  Dataset ds;
  ds.dims = 2;
  ds.points.reserve(static_cast<std::size_t>(n) * 2);
  ds.labels.reserve(n);
  for (int b = 0; b < k; ++b) {
    const int count = n / k + (b < n % k ? 1 : 0);
    for (int i = 0; i < count; ++i) {
      ds.points.push_back(cx[b] + sigma[b] * normal());
      ds.points.push_back(cy[b] + sigma[b] * normal());
      ds.labels.push_back(b + 1);
    }
  }
  return ds;
}

}  // namespace ltclus
