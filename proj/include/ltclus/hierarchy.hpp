#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltclus/core.hpp"
#include "ltclus/ltree.hpp"

namespace ltclus {

struct HierarchyLayer {
  int m = 0;
  LabelVector labels;
};

/// Nested partitions of one leading tree, coarsest first. Every layer uses
/// the top-m gamma prefix as centers, so labels are comparable across
/// layers (label 1 always contains the density root) and consecutive
/// layers nest.
struct Hierarchy {
  std::vector<HierarchyLayer> layers;
  const LeadingTree* tree = nullptr;
};

/// One partition per count, built incrementally: each layer extends the
/// previous cut set by the next (m_{k+1} - m_k) gamma-prefix centers.
/// Counts must be strictly ascending and within [1, N].
Hierarchy build_hierarchy(const LeadingTree& tree, const std::vector<int>& layer_counts);

/// Two points sharing a cluster in the finer layer but split across
/// clusters in the coarser one.
struct RefinementViolation {
  int coarse_layer;  // index into Hierarchy::layers of the coarser layer
  int point_a;
  int point_b;
};

struct RefinementResult {
  bool refined = false;
  std::optional<RefinementViolation> witness;
};

/// True iff every consecutive layer pair nests (each finer cluster lies
/// wholly inside one coarser cluster). Needs at least two layers.
RefinementResult check_refinement(const Hierarchy& h);

/// Adjusted Rand index between two labelings of the same points, in
/// [-1, 1]; 1 for identical partitions up to label renaming.
double adjusted_rand_index(const LabelVector& a, const LabelVector& b);

/// Writes layer_<m>.csv (columns index,label) per layer into `dir`,
/// creating the directory if needed.
void write_hierarchy_layers(const std::string& dir, const Hierarchy& h);

}  // namespace ltclus
