#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "ltclus/core.hpp"

namespace ltclus {

enum class GeneratorKind { five_spherical, five_spiral };

/// Shape and sampling parameters for the two synthetic generators.
/// Defaults reproduce the reference sizes (2200 / 1060 points) and a
/// two-close-pairs-plus-one layout in both geometries.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::five_spherical;
  int n_points = 2200;
  std::uint64_t seed = 42;

  // five_spherical: sphere centers sit on a circle of `circumradius` at
  // the given angles; points are sampled uniformly on each sphere surface
  // and orthogonally projected to the plane.
  double circumradius = 10.0;
  double sphere_radius = 1.0;
  std::array<double, 5> sphere_angles_deg{0.0, 30.0, 150.0, 180.0, 270.0};

  // five_spiral: arms (x, y) = (-t/8 cos(t+theta), -t/8 sin(t+theta)) with
  // t uniform in (t_min, t_max); theta controls each arm's start.
  std::array<double, 5> spiral_thetas{0.0, 0.3, 2.2, 2.5, 4.4};
  double spiral_t_min = 2.0;
  double spiral_t_max = 4.0 * std::numbers::pi;
};

/// Spec with the reference point count for the given kind.
GeneratorSpec default_spec(GeneratorKind kind);

/// Uniform samples on five sphere surfaces projected to the plane;
/// label = sphere index (1-based). Pure function of the spec.
Dataset gen_five_spherical(const GeneratorSpec& spec);

/// Five spiral arms; label = arm index (1-based). Pure function of the spec.
Dataset gen_five_spiral(const GeneratorSpec& spec);

/// The spiral parametric map, exposed for direct checks.
std::pair<double, double> spiral_point(double t, double theta);

/// UCI Ecoli format: sequence name, 7 numeric attributes, class string,
/// whitespace-separated. The name column is dropped and classes map to
/// integer labels in order of first appearance.
Dataset load_ecoli(const std::string& path);

/// Hand-verified 13-object reference example: the neighbor array, both
/// orderings, and the expected labels for centers {13, 6, 11}. Arrays are
/// stored 1-based as printed (parent 0 marks the root); the accessors
/// translate to the library's 0-based indices.
struct Ds1Fixture {
  std::array<int, 13> nneigh;
  std::array<int, 13> ord_rho;
  std::array<int, 13> sort_gamma_ind;
  std::array<int, 13> cl;

  std::vector<int> parents() const;          // 0-based, kNone at the root
  std::vector<int> rho_order() const;        // 0-based density ordering
  std::vector<int> gamma_order_ids() const;  // 0-based gamma ordering
  LabelVector labels() const;
};

Ds1Fixture ds1_fixture();

/// Points CSV: one row per point, comma-separated decimal fields. With
/// `expect_header`, a final column named "label" is read as ground truth.
Dataset read_points_csv(const std::string& path, bool expect_header = true);

/// Lossless for finite doubles (shortest round-trip rendering). Writes a
/// header (x1..xA plus label when present) unless `with_header` is false.
void write_points_csv(const std::string& path, const Dataset& dataset,
                      bool with_header = true);

/// Plain key: value lines, one per entry.
void write_manifest(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace ltclus
