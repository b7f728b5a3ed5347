#include "ltclus/ltree.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace ltclus {

namespace {

void validate_inputs(const std::vector<int>& nn, const std::vector<int>& order) {
  const int n = static_cast<int>(nn.size());

  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) {
      throw StructuralError("leading tree: order is not a permutation");
    }
    seen[v] = 1;
  }

  int root = kNone;
  for (int i = 0; i < n; ++i) {
    if (nn[i] == kNone) {
      if (root != kNone) throw StructuralError("leading tree: more than one root");
      root = i;
    } else if (nn[i] < 0 || nn[i] >= n) {
      throw StructuralError("leading tree: parent index out of range");
    }
  }
  if (root == kNone) throw StructuralError("leading tree: no root");
  if (order[0] != root) {
    throw StructuralError("leading tree: ordering must start at the root");
  }

  // 0 = unvisited, 1 = on the current path, 2 = known good
  std::vector<char> state(n, 0);
  std::vector<int> path;
  for (int i = 0; i < n; ++i) {
    if (state[i] == 2) continue;
    path.clear();
    int u = i;
    while (u != kNone && state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = nn[u];
    }
    if (u != kNone && state[u] == 1) {
      throw StructuralError("leading tree: cycle through node " + std::to_string(u + 1));
    }
    for (int v : path) state[v] = 2;
  }
}

}  // namespace

LeadingTree LeadingTree::build(const std::vector<int>& nn, const std::vector<int>& order,
                               bool validate) {
  const int n = static_cast<int>(nn.size());
  if (n == 0) throw ParamError("leading tree: empty input");
  if (order.size() != nn.size()) {
    throw ParamError("leading tree: ordering length does not match");
  }
  if (validate) validate_inputs(nn, order);

  LeadingTree t;
  t.parent_ = nn;
  t.order_ = order;
  t.root_ = order[0];
  t.rank_.resize(n);
  for (int p = 0; p < n; ++p) t.rank_[order[p]] = p;

  t.child_begin_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (nn[i] != kNone) ++t.child_begin_[nn[i] + 1];
  }
  for (int i = 0; i < n; ++i) t.child_begin_[i + 1] += t.child_begin_[i];

  t.child_arena_.resize(n - 1);
  std::vector<int> cursor(t.child_begin_.begin(), t.child_begin_.end() - 1);
  for (int p = 1; p < n; ++p) {
    const int child = order[p];
    t.child_arena_[cursor[nn[child]]++] = child;
  }
  return t;
}

int ClusterForest::center_label(int i) const {
  auto it = std::lower_bound(sorted_centers_.begin(), sorted_centers_.end(),
                             std::make_pair(i, 0));
  if (it == sorted_centers_.end() || it->first != i) return 0;
  return it->second;
}

ClusterForest split(const LeadingTree& tree, const CenterSet& centers, SplitMode mode) {
  const int n = tree.size();
  const int m = centers.size();
  if (m < 1 || m > n) throw ParamError("split: center count out of range");
  for (int c : centers.ids) {
    if (c < 0 || c >= n) throw ParamError("split: center index out of range");
  }

  ClusterForest f;
  f.tree_ = &tree;
  f.centers_ = centers.ids;
  f.cuts_.reserve(m - 1);

  if (mode == SplitMode::prefix_fast) {
    for (int i = 0; i < m; ++i) {
      if (centers[i] != tree.order()[i]) {
        throw ModeViolationError(
            "split: prefix_fast requires the top-m gamma prefix as centers");
      }
    }
    // Cut the first remaining child of each parent; every higher-gamma
    // sibling is an earlier center whose edge is already gone.
    std::unordered_map<int, int> cut_lead;  // parent -> leading children removed
    cut_lead.reserve(m * 2);
    for (int i = 1; i < m; ++i) {
      const int c = centers[i];
      const int par = tree.parent(c);
      const int k = cut_lead[par]++;
      const auto kids = tree.children(par);
      if (k >= static_cast<int>(kids.size()) || kids[k] != c) {
        throw StructuralError("split: first remaining child is not the center");
      }
      f.cuts_.push_back({par, c});
    }
  } else {
    std::unordered_set<int> distinct(centers.ids.begin(), centers.ids.end());
    if (distinct.size() != centers.ids.size()) {
      throw ParamError("split: duplicate center");
    }
    if (distinct.find(tree.root()) == distinct.end()) {
      throw StructuralError("split: center set must include the tree root");
    }
    for (int i = 0; i < m; ++i) {
      const int c = centers[i];
      if (c == tree.root()) continue;
      const int par = tree.parent(c);
      const auto kids = tree.children(par);
      if (std::find(kids.begin(), kids.end(), c) == kids.end()) {
        throw StructuralError("split: center not found in its parent's child list");
      }
      f.cuts_.push_back({par, c});
    }
  }

  f.sorted_centers_.reserve(m);
  for (int k = 0; k < m; ++k) f.sorted_centers_.emplace_back(centers[k], k + 1);
  std::sort(f.sorted_centers_.begin(), f.sorted_centers_.end());
  return f;
}

LabelVector forest_labels(const ClusterForest& forest) {
  const LeadingTree& tree = forest.tree();
  const int n = tree.size();
  const auto& centers = forest.centers();

  std::vector<char> is_center(n, 0);
  for (int c : centers) is_center[c] = 1;

  LabelVector cl(n, 0);
  std::vector<int> stack;
  for (int k = 0; k < static_cast<int>(centers.size()); ++k) {
    const int label = k + 1;
    cl[centers[k]] = label;
    stack.push_back(centers[k]);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : tree.children(u)) {
        if (is_center[v]) continue;  // severed edge
        cl[v] = label;
        stack.push_back(v);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (cl[i] == 0) {
      throw StructuralError("forest_labels: node " + std::to_string(i + 1) +
                            " is not reachable from any center");
    }
  }
  return cl;
}

int jump_depth(const ClusterForest& forest, int i) {
  const LeadingTree& tree = forest.tree();
  if (i < 0 || i >= tree.size()) throw ParamError("jump_depth: index out of range");
  int depth = 0;
  int u = i;
  while (!forest.is_center(u)) {
    u = tree.parent(u);
    ++depth;
    if (u == kNone || depth > tree.size()) {
      throw StructuralError("jump_depth: no center on the parent path of " +
                            std::to_string(i + 1));
    }
  }
  return depth;
}

void write_forest_csv(const std::string& path, const ClusterForest& forest) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  const LabelVector cl = forest_labels(forest);
  out << "index,parent,depth,label\n";
  for (int i = 0; i < forest.tree().size(); ++i) {
    const int parent = forest.is_center(i) ? -1 : forest.tree().parent(i) + 1;
    out << (i + 1) << ',' << parent << ',' << jump_depth(forest, i) << ',' << cl[i]
        << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

void write_forest_dot(const std::string& path, const ClusterForest& forest) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  const LeadingTree& tree = forest.tree();
  out << "digraph leading_forest {\n  node [shape=circle];\n";
  for (int c : forest.centers()) {
    out << "  " << (c + 1) << " [shape=doublecircle];\n";
  }
  for (int i = 0; i < tree.size(); ++i) {
    for (int v : tree.children(i)) {
      if (forest.is_center(v)) continue;  // cut edges are not drawn
      out << "  " << (i + 1) << " -> " << (v + 1) << ";\n";
    }
  }
  out << "}\n";
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace ltclus
