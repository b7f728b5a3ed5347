#include "ltclus/hierarchy.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <unordered_map>

namespace ltclus {

namespace {

// Component labeling for a gamma-prefix center set given as a bitmap.
LabelVector prefix_labels(const LeadingTree& tree, const std::vector<char>& is_center,
                          int m, std::vector<int>& stack) {
  const int n = tree.size();
  LabelVector cl(n, 0);
  for (int k = 0; k < m; ++k) {
    const int c = tree.order()[k];
    cl[c] = k + 1;
    stack.push_back(c);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : tree.children(u)) {
        if (is_center[v]) continue;
        cl[v] = k + 1;
        stack.push_back(v);
      }
    }
  }
  return cl;
}

}  // namespace

Hierarchy build_hierarchy(const LeadingTree& tree, const std::vector<int>& layer_counts) {
  const int n = tree.size();
  if (layer_counts.empty()) throw ParamError("build_hierarchy: no layer counts");
  for (std::size_t k = 0; k < layer_counts.size(); ++k) {
    if (layer_counts[k] < 1 || layer_counts[k] > n) {
      throw ParamError("build_hierarchy: layer count out of range");
    }
    if (k > 0 && layer_counts[k] <= layer_counts[k - 1]) {
      throw ParamError("build_hierarchy: layer counts must be strictly ascending");
    }
  }

  Hierarchy h;
  h.tree = &tree;
  h.layers.reserve(layer_counts.size());

  std::vector<char> is_center(n, 0);
  std::vector<CutEdge> cuts;  // grows across layers, never recomputed
  cuts.reserve(layer_counts.back() - 1);
  std::vector<int> stack;
  int prev = 0;
  for (int m : layer_counts) {
    for (int p = prev; p < m; ++p) {
      const int c = tree.order()[p];
      is_center[c] = 1;
      if (c != tree.root()) cuts.push_back({tree.parent(c), c});
    }
    prev = m;
    h.layers.push_back({m, prefix_labels(tree, is_center, m, stack)});
  }
  return h;
}

RefinementResult check_refinement(const Hierarchy& h) {
  if (h.layers.size() < 2) throw ParamError("check_refinement: need at least two layers");
  for (std::size_t k = 0; k + 1 < h.layers.size(); ++k) {
    const LabelVector& coarse = h.layers[k].labels;
    const LabelVector& fine = h.layers[k + 1].labels;
    if (coarse.size() != fine.size()) {
      throw ParamError("check_refinement: layers label different point counts");
    }
    // fine label -> (coarse label, first point seen)
    std::unordered_map<int, std::pair<int, int>> rep;
    rep.reserve(fine.size());
    for (std::size_t i = 0; i < fine.size(); ++i) {
      auto [it, inserted] = rep.try_emplace(fine[i], coarse[i], static_cast<int>(i));
      if (!inserted && it->second.first != coarse[i]) {
        return {false, RefinementViolation{static_cast<int>(k), it->second.second,
                                           static_cast<int>(i)}};
      }
    }
  }
  return {true, std::nullopt};
}

double adjusted_rand_index(const LabelVector& a, const LabelVector& b) {
  if (a.size() != b.size()) throw ParamError("adjusted_rand_index: length mismatch");
  const std::size_t n = a.size();
  if (n < 2) return 1.0;

  std::unordered_map<int, int> amap, bmap;
  std::vector<long long> asum, bsum;
  auto normalize = [](std::unordered_map<int, int>& map, std::vector<long long>& sums,
                      int label) {
    auto [it, inserted] = map.try_emplace(label, static_cast<int>(sums.size()));
    if (inserted) sums.push_back(0);
    ++sums[it->second];
    return it->second;
  };

  std::unordered_map<std::uint64_t, long long> joint;
  joint.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t ua = normalize(amap, asum, a[i]);
    const std::uint64_t ub = normalize(bmap, bsum, b[i]);
    ++joint[(ua << 32) | ub];
  }

  auto pairs2 = [](long long x) { return static_cast<double>(x) * (x - 1) / 2.0; };
  double index = 0.0;
  for (const auto& [key, count] : joint) index += pairs2(count);
  double sum_a = 0.0, sum_b = 0.0;
  for (long long x : asum) sum_a += pairs2(x);
  for (long long x : bsum) sum_b += pairs2(x);
  const double total = pairs2(static_cast<long long>(n));
  const double expected = sum_a * (sum_b / total);
  const double max_index = 0.5 * (sum_a + sum_b);
  const double denom = max_index - expected;
  if (denom == 0.0) return 1.0;  // both partitions trivial and identical in shape
  return (index - expected) / denom;
}

void write_hierarchy_layers(const std::string& dir, const Hierarchy& h) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
  for (const HierarchyLayer& layer : h.layers) {
    const std::string path = dir + "/layer_" + std::to_string(layer.m) + ".csv";
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "index,label\n";
    for (std::size_t i = 0; i < layer.labels.size(); ++i) {
      out << (i + 1) << ',' << layer.labels[i] << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
  }
}

}  // namespace ltclus
