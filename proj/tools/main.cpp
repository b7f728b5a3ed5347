#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ltclus/bench.hpp"
#include "ltclus/datasets.hpp"
#include "ltclus/density.hpp"
#include "ltclus/hierarchy.hpp"
#include "ltclus/ltree.hpp"
#include "ltclus/peaks.hpp"

namespace {

// distinct exit codes per error class
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitStructural = 4;
constexpr int kExitIo = 5;

using ltclus::CenterSet;
using ltclus::Dataset;
using ltclus::Kernel;

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string distances;
  std::string out;
  std::string out_dir;
  std::string kind = "5spherical";
  std::string kernel = "gaussian";
  double dc_percent = 2.0;
  int centers = 0;
  int n_points = 0;  // 0 = generator default
  std::vector<int> layers;
  std::vector<int> sizes;
  std::uint64_t seed = 42;
  int repeats = 21;
  int blob_k = 8;
  bool no_header = false;
  bool paper = false;
  std::string ecoli;
  std::string parents_out;
  std::string dot_out;
  std::string profile_out;

  std::vector<std::pair<std::string, std::string>> manifest_entries() const {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("command", subcommand);
    if (!input.empty()) e.emplace_back("input", input);
    if (!distances.empty()) e.emplace_back("distances", distances);
    if (!out.empty()) e.emplace_back("out", out);
    if (!out_dir.empty()) e.emplace_back("out_dir", out_dir);
    if (subcommand == "generate") {
      e.emplace_back("kind", kind);
      if (n_points > 0) e.emplace_back("n", std::to_string(n_points));
    }
    if (subcommand == "cluster" || subcommand == "hierarchy") {
      e.emplace_back("kernel", kernel);
      e.emplace_back("dc_percent", std::to_string(dc_percent));
    }
    if (subcommand == "cluster") e.emplace_back("centers", std::to_string(centers));
    if (!layers.empty()) {
      std::string joined;
      for (int m : layers) {
        if (!joined.empty()) joined += ',';
        joined += std::to_string(m);
      }
      e.emplace_back("layers", joined);
    }
    if (subcommand == "bench") e.emplace_back("repeats", std::to_string(repeats));
    e.emplace_back("seed", std::to_string(seed));
    return e;
  }
};

Kernel parse_kernel(const std::string& name) {
  if (name == "gaussian") return Kernel::gaussian;
  if (name == "cutoff") return Kernel::cutoff;
  throw ltclus::ParamError("unknown kernel '" + name + "'");
}

struct PipelineOutput {
  ltclus::PeakProfile profile;
  ltclus::LeadingTree tree;
  double dc = 0.0;
};

// points or imported matrix -> densities -> peak profile -> leading tree
PipelineOutput run_pipeline(const Dataset& ds, const ltclus::CondensedDistanceMatrix* dm,
                            const RunConfig& cfg) {
  ltclus::CondensedDistanceMatrix local;
  if (dm == nullptr) {
    local = ltclus::pairwise_distances(ds);
    dm = &local;
  }
  PipelineOutput out;
  out.dc = ltclus::estimate_dc(*dm, cfg.dc_percent);
  const ltclus::DensityVector rho = parse_kernel(cfg.kernel) == Kernel::gaussian
                                        ? ltclus::rho_gaussian(*dm, out.dc)
                                        : ltclus::rho_cutoff(*dm, out.dc);
  out.profile = ltclus::make_peak_profile(*dm, rho);
  out.tree = ltclus::LeadingTree::build(out.profile.nn, out.profile.gamma_order);
  return out;
}

void write_labels_csv(const std::string& path, const ltclus::LabelVector& labels) {
  std::ofstream out(path);
  if (!out) throw ltclus::IoError("cannot write " + path);
  out << "index,label\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << (i + 1) << ',' << labels[i] << '\n';
  }
  if (!out) throw ltclus::IoError("write failed: " + path);
}

int cmd_generate(const RunConfig& cfg) {
  ltclus::GeneratorKind kind;
  if (cfg.kind == "5spherical") {
    kind = ltclus::GeneratorKind::five_spherical;
  } else if (cfg.kind == "5spiral") {
    kind = ltclus::GeneratorKind::five_spiral;
  } else {
    throw CLI::ValidationError("--kind", "unknown kind '" + cfg.kind + "'");
  }
  ltclus::GeneratorSpec spec = ltclus::default_spec(kind);
  if (cfg.n_points > 0) spec.n_points = cfg.n_points;
  spec.seed = cfg.seed;
  const Dataset ds = kind == ltclus::GeneratorKind::five_spherical
                         ? ltclus::gen_five_spherical(spec)
                         : ltclus::gen_five_spiral(spec);
  ltclus::write_points_csv(cfg.out, ds);
  auto entries = cfg.manifest_entries();
  entries.emplace_back("n_points", std::to_string(ds.size()));
  ltclus::write_manifest(cfg.out + ".manifest", entries);
  std::cout << "wrote " << ds.size() << " points to " << cfg.out << '\n';
  return 0;
}

int cmd_cluster(const RunConfig& cfg) {
  Dataset ds;
  ltclus::CondensedDistanceMatrix dm;
  const ltclus::CondensedDistanceMatrix* dmp = nullptr;
  if (!cfg.distances.empty()) {
    dm = ltclus::read_distance_matrix_csv(cfg.distances);
    dmp = &dm;
  } else {
    ds = ltclus::read_points_csv(cfg.input, !cfg.no_header);
  }

  PipelineOutput pipe = run_pipeline(ds, dmp, cfg);
  const int n = static_cast<int>(pipe.profile.rho.size());
  if (cfg.centers < 1 || cfg.centers > n) {
    throw ltclus::ParamError("--centers must lie in [1, " + std::to_string(n) + "]");
  }
  const CenterSet centers = ltclus::select_centers(pipe.profile.gamma_order, cfg.centers);
  const ltclus::ClusterForest forest =
      ltclus::split(pipe.tree, centers, ltclus::SplitMode::prefix_fast);
  const ltclus::LabelVector labels = ltclus::forest_labels(forest);

  write_labels_csv(cfg.out, labels);
  if (!cfg.parents_out.empty()) ltclus::write_forest_csv(cfg.parents_out, forest);
  if (!cfg.dot_out.empty()) ltclus::write_forest_dot(cfg.dot_out, forest);
  if (!cfg.profile_out.empty()) ltclus::write_peak_profile_csv(cfg.profile_out, pipe.profile);

  auto entries = cfg.manifest_entries();
  entries.emplace_back("n_points", std::to_string(n));
  entries.emplace_back("dc", std::to_string(pipe.dc));
  if (ds.has_labels()) {
    const double ari = ltclus::adjusted_rand_index(labels, ds.labels);
    entries.emplace_back("ari_vs_ground_truth", std::to_string(ari));
    std::cout << "ARI vs ground truth: " << ari << '\n';
  }
  ltclus::write_manifest(cfg.out + ".manifest", entries);
  std::cout << "wrote " << cfg.centers << "-cluster labels to " << cfg.out << '\n';
  return 0;
}

int cmd_hierarchy(const RunConfig& cfg) {
  const Dataset ds = ltclus::read_points_csv(cfg.input, !cfg.no_header);
  PipelineOutput pipe = run_pipeline(ds, nullptr, cfg);
  const ltclus::Hierarchy h = ltclus::build_hierarchy(pipe.tree, cfg.layers);
  ltclus::write_hierarchy_layers(cfg.out_dir, h);

  auto entries = cfg.manifest_entries();
  entries.emplace_back("n_points", std::to_string(ds.size()));
  entries.emplace_back("dc", std::to_string(pipe.dc));
  if (h.layers.size() >= 2) {
    const ltclus::RefinementResult rr = ltclus::check_refinement(h);
    entries.emplace_back("refinement", rr.refined ? "true" : "false");
    std::cout << "refinement: " << (rr.refined ? "true" : "false") << '\n';
  }
  ltclus::write_manifest(cfg.out_dir + "/manifest.txt", entries);
  std::cout << "wrote " << h.layers.size() << " layers to " << cfg.out_dir << '\n';
  return 0;
}

int cmd_bench(const RunConfig& cfg) {
  std::vector<ltclus::BenchInput> inputs;
  if (cfg.paper) {
    ltclus::GeneratorSpec sph = ltclus::default_spec(ltclus::GeneratorKind::five_spherical);
    sph.seed = cfg.seed;
    inputs.push_back({"5spherical", ltclus::gen_five_spherical(sph), 5});
    ltclus::GeneratorSpec spi = ltclus::default_spec(ltclus::GeneratorKind::five_spiral);
    spi.seed = cfg.seed;
    inputs.push_back({"5spiral", ltclus::gen_five_spiral(spi), 5});
    if (!cfg.ecoli.empty()) {
      inputs.push_back({"ecoli", ltclus::load_ecoli(cfg.ecoli), 8});
    } else {
      std::cerr << "note: no --ecoli path given, benchmarking the two synthetic sets\n";
    }
  }
  for (int n : cfg.sizes) {
    inputs.push_back({"blob_" + std::to_string(n),
                      ltclus::synth_blobs(n, cfg.blob_k, cfg.seed),
                      cfg.centers > 0 ? cfg.centers : 8});
  }
  if (inputs.empty()) {
    throw CLI::ValidationError("bench", "need --paper and/or --sizes");
  }

  const ltclus::BenchReport report = ltclus::run_benchmark(inputs, cfg.repeats);
  ltclus::write_bench_csv(cfg.out, report);
  std::cout << ltclus::bench_summary(report);
  ltclus::write_manifest(cfg.out + ".manifest", cfg.manifest_entries());
  std::cout << "wrote report to " << cfg.out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density-peaks clustering over an explicit leading tree"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* gen = app.add_subcommand("generate", "Write a synthetic dataset as points CSV");
  gen->add_option("--kind", cfg.kind, "5spherical or 5spiral")->required();
  gen->add_option("--n", cfg.n_points, "point count (0 = kind default)");
  gen->add_option("--seed", cfg.seed, "generator seed");
  gen->add_option("--out", cfg.out, "output CSV path")->required();

  CLI::App* clu = app.add_subcommand("cluster", "Flat clustering at m centers");
  clu->add_option("--input", cfg.input, "points CSV");
  clu->add_option("--distances", cfg.distances, "N x N distance matrix CSV");
  clu->add_flag("--no-header", cfg.no_header, "points CSV has no header row");
  clu->add_option("--kernel", cfg.kernel, "gaussian or cutoff");
  clu->add_option("--dc-percent", cfg.dc_percent, "cutoff-distance percentile");
  clu->add_option("--centers", cfg.centers, "number of centers m")->required();
  clu->add_option("--out", cfg.out, "labels CSV path")->required();
  clu->add_option("--parents", cfg.parents_out, "forest parents CSV path");
  clu->add_option("--dot", cfg.dot_out, "forest DOT path");
  clu->add_option("--profile", cfg.profile_out, "peak profile CSV path");
  clu->add_option("--seed", cfg.seed, "recorded in the manifest");

  CLI::App* hie = app.add_subcommand("hierarchy", "Nested clustering at several layer counts");
  hie->add_option("--input", cfg.input, "points CSV")->required();
  hie->add_flag("--no-header", cfg.no_header, "points CSV has no header row");
  hie->add_option("--kernel", cfg.kernel, "gaussian or cutoff");
  hie->add_option("--dc-percent", cfg.dc_percent, "cutoff-distance percentile");
  hie->add_option("--layers", cfg.layers, "ascending cluster counts, e.g. 2,4,5")
      ->required()
      ->delimiter(',');
  hie->add_option("--out-dir", cfg.out_dir, "output directory")->required();
  hie->add_option("--seed", cfg.seed, "recorded in the manifest");

  CLI::App* ben = app.add_subcommand("bench", "Time assign / construct / split");
  ben->add_flag("--paper", cfg.paper, "benchmark the reference datasets");
  ben->add_option("--ecoli", cfg.ecoli, "ecoli data file for --paper");
  ben->add_option("--sizes", cfg.sizes, "synthetic blob sizes, e.g. 1000,4000")
      ->delimiter(',');
  ben->add_option("--blob-k", cfg.blob_k, "blob count for synthetic sizes");
  ben->add_option("--centers", cfg.centers, "centers m for synthetic sizes");
  ben->add_option("--repeats", cfg.repeats, "timing repeats (>= 3)");
  ben->add_option("--seed", cfg.seed, "blob generator seed");
  ben->add_option("--out", cfg.out, "report CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      cfg.subcommand = "generate";
      return cmd_generate(cfg);
    }
    if (clu->parsed()) {
      cfg.subcommand = "cluster";
      if (cfg.input.empty() == cfg.distances.empty()) {
        throw CLI::ValidationError("cluster", "give exactly one of --input / --distances");
      }
      return cmd_cluster(cfg);
    }
    if (hie->parsed()) {
      cfg.subcommand = "hierarchy";
      return cmd_hierarchy(cfg);
    }
    cfg.subcommand = "bench";
    return cmd_bench(cfg);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ltclus::ParamError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ltclus::StructuralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitStructural;
  } catch (const ltclus::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ltclus::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ltclus::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
