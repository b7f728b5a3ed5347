#pragma once

#include <span>
#include <string>
#include <vector>

#include "ltclus/core.hpp"
#include "ltclus/peaks.hpp"

namespace ltclus {

/// The tree hidden in the nearest-higher-density-neighbor array: every
/// point except the density root hangs under its neighbor, and each node's
/// children are kept in gamma-descending order (ties ascending by index).
/// Immutable after construction; stored as a parent array plus a
/// contiguous child-index arena.
class LeadingTree {
 public:
  /// Builds the tree by walking the gamma ordering once and appending each
  /// node to its parent's child list, which leaves every child list
  /// gamma-descending. With `validate` set (the default) the inputs are
  /// checked first: `nn` must hold exactly one kNone and no cycles, and
  /// `order` must be a permutation starting at that root.
  static LeadingTree build(const std::vector<int>& nn, const std::vector<int>& order,
                           bool validate = true);

  int size() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int parent(int i) const { return parent_[i]; }

  std::span<const int> children(int i) const {
    return {child_arena_.data() + child_begin_[i],
            static_cast<std::size_t>(child_begin_[i + 1] - child_begin_[i])};
  }

  /// The gamma-descending ordering the tree was built with.
  const std::vector<int>& order() const { return order_; }
  /// Position of node i in that ordering.
  int order_rank(int i) const { return rank_[i]; }

 private:
  std::vector<int> parent_;
  std::vector<int> child_arena_;   // size-1 entries: every non-root once
  std::vector<int> child_begin_;   // size+1 offsets into child_arena_
  std::vector<int> order_;
  std::vector<int> rank_;
  int root_ = kNone;
};

struct CutEdge {
  int parent;
  int child;  // always a center

  bool operator==(const CutEdge&) const = default;
};

enum class SplitMode {
  prefix_fast,  // centers must be the gamma-order prefix; O(m) first-child cuts
  general       // any center set containing the root; locates each cut by identity
};

/// A clustering of the tree: the severed parent->center edges plus the
/// center list. The tree itself is left untouched, so one tree can serve
/// any number of cluster layers. Cheap to copy relative to the tree.
class ClusterForest {
 public:
  const LeadingTree& tree() const { return *tree_; }
  /// Centers in label order: the component of centers()[k] gets label k+1.
  const std::vector<int>& centers() const { return centers_; }
  const std::vector<CutEdge>& cut_set() const { return cuts_; }

  bool is_center(int i) const { return center_label(i) != 0; }
  /// 1-based label of a center, 0 for non-centers.
  int center_label(int i) const;

 private:
  friend ClusterForest split(const LeadingTree&, const CenterSet&, SplitMode);

  const LeadingTree* tree_ = nullptr;
  std::vector<int> centers_;
  std::vector<CutEdge> cuts_;
  std::vector<std::pair<int, int>> sorted_centers_;  // (id, label), id ascending
};

/// Severs the parent edge of every non-root center. prefix_fast emulates
/// removing the first remaining child of each center's parent, valid
/// exactly for gamma-prefix center sets processed in gamma-descending
/// order (any higher-gamma sibling is an earlier center, already cut);
/// it throws ModeViolationError for anything else. general accepts any
/// distinct center set that includes the tree root and finds each cut
/// edge by identity.
ClusterForest split(const LeadingTree& tree, const CenterSet& centers, SplitMode mode);

/// Labels every node with the 1-based rank of its component's center by
/// walking each component top-down from its center.
LabelVector forest_labels(const ClusterForest& forest);

/// Number of parent hops from point i to its component's center; 0 for
/// centers themselves.
int jump_depth(const ClusterForest& forest, int i);

/// CSV with columns index,parent,depth,label; indices 1-based, parent = -1
/// for component roots, depth = jump_depth.
void write_forest_csv(const std::string& path, const ClusterForest& forest);

/// Graphviz digraph of the forest: parent -> child edges with cut edges
/// omitted and centers drawn as double circles.
void write_forest_dot(const std::string& path, const ClusterForest& forest);

}  // namespace ltclus
