#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ltclus/core.hpp"
#include "ltclus/ltree.hpp"
#include "ltclus/peaks.hpp"

namespace ltclus {

/// The three timed algorithms: single-scan assignment, tree construction
/// from the neighbor array, and prefix splitting of the built tree.
enum class Stage { assign, construct, split };

const char* stage_name(Stage s);

struct TimingStats {
  std::int64_t median_ns = 0;
  std::int64_t min_ns = 0;
  int repeats = 0;
  bool low_confidence = false;  // minimum under ~1us: near clock resolution
};

/// Everything a timed stage consumes, computed up front so the stage runs
/// pure. The tree is prebuilt (and validated once) for the split stage.
struct StageInputs {
  std::vector<int> nn;
  std::vector<int> q;
  std::vector<int> gamma_order;
  CenterSet centers;
  LeadingTree tree;
};

/// Full input preparation from raw points. Distances stream from the
/// coordinates instead of materializing the pair matrix, so this scales to
/// the large benchmark sizes; the arithmetic matches the matrix-backed
/// pipeline bit for bit. Density uses the cutoff kernel. The cutoff
/// percentile is exact up to 4M pairs and sampled (seeded, 1M pairs)
/// beyond that.
StageInputs prepare_stage_inputs(const Dataset& dataset, int m, double dc_percent = 2.0);

/// Median/min wall time of one stage over `repeats` runs (two warm-up runs
/// first, results fed to an optimization sink). repeats must be >= 3.
TimingStats time_stage(Stage stage, const StageInputs& inputs, int repeats);

/// Split immediately followed by label extraction, reported separately
/// because the split cost model excludes labeling.
TimingStats time_split_with_labels(const StageInputs& inputs, int repeats);

/// Smallest layer count at which building the tree once and splitting per
/// layer beats re-running assignment per layer: the least integer strictly
/// greater than t_constr / (t_assign - t_split). Empty when assignment is
/// not slower than splitting.
std::optional<long long> break_even_layers(double t_constr, double t_assign,
                                           double t_split);

struct BenchInput {
  std::string name;
  Dataset data;
  int m = 8;
};

struct BenchDatasetResult {
  std::string name;
  int n = 0;
  int m = 0;
  TimingStats assign;
  TimingStats construct;
  TimingStats split;
  TimingStats split_with_labels;
  std::optional<long long> break_even_nl;
  bool split_faster = false;  // median split < median assign
};

struct BenchReport {
  std::vector<BenchDatasetResult> results;
  int repeats = 0;
  std::string environment;
};

/// Times the three stages for every input on a single thread.
BenchReport run_benchmark(const std::vector<BenchInput>& inputs, int repeats);

/// CSV columns: dataset,N,m,stage,median_ns,min_ns,repeats,break_even_Nl
/// (three stage rows per dataset; the break-even column is empty when the
/// layer inequality has no solution).
void write_bench_csv(const std::string& path, const BenchReport& report);

/// Human-readable per-dataset summary, including the label-extraction time
/// and low-confidence caveats.
std::string bench_summary(const BenchReport& report);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Ordinary least squares y = slope x + intercept.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

/// Seeded 2-D Gaussian mixture with k blobs; label = blob index (1-based).
Dataset synth_blobs(int n, int k, std::uint64_t seed);

}  // namespace ltclus
