#include "ltclus/peaks.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <string>
#include <unordered_set>

namespace ltclus {

namespace {

void require_permutation(const std::vector<int>& q, std::size_t n, const char* what) {
  if (q.size() != n) throw ParamError(std::string(what) + ": wrong length");
  std::vector<char> seen(n, 0);
  for (int v : q) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) {
      throw ParamError(std::string(what) + ": not a permutation");
    }
    seen[v] = 1;
  }
}

void append_double(std::string& out, double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, p);
}

}  // namespace

std::pair<std::vector<double>, std::vector<int>> delta_nn(
    const CondensedDistanceMatrix& d, const std::vector<int>& q) {
  const int n = d.size();
  require_permutation(q, static_cast<std::size_t>(n), "density order");
  std::vector<double> delta;
  std::vector<int> nn;
  delta_nn_scan(n, q, [&d](int a, int b) { return d(a, b); }, delta, nn);
  return {std::move(delta), std::move(nn)};
}

std::vector<double> gamma_values(const std::vector<double>& rho,
                                 const std::vector<double>& delta) {
  if (rho.size() != delta.size()) {
    throw ParamError("gamma_values: rho and delta lengths differ");
  }
  std::vector<double> g(rho.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = rho[i] * delta[i];
  return g;
}

std::vector<int> gamma_order(const std::vector<double>& gamma) {
  std::vector<int> order(gamma.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&gamma](int a, int b) {
    if (gamma[a] != gamma[b]) return gamma[a] > gamma[b];
    return a < b;
  });
  return order;
}

CenterSet select_centers(const std::vector<int>& gamma_order, int m) {
  const int n = static_cast<int>(gamma_order.size());
  if (m < 1 || m > n) {
    throw ParamError("select_centers: m must lie in [1, " + std::to_string(n) + "]");
  }
  return CenterSet{{gamma_order.begin(), gamma_order.begin() + m}};
}

LabelVector assign_baseline(const std::vector<int>& nn, const std::vector<int>& q,
                            const CenterSet& centers) {
  const std::size_t n = nn.size();
  require_permutation(q, n, "density order");
  if (centers.ids.empty()) throw ParamError("assign_baseline: empty center set");
  std::unordered_set<int> distinct(centers.ids.begin(), centers.ids.end());
  if (distinct.size() != centers.ids.size()) {
    throw ParamError("assign_baseline: duplicate center");
  }

  LabelVector cl(n, -1);
  for (int k = 0; k < centers.size(); ++k) {
    const int c = centers[k];
    if (c < 0 || static_cast<std::size_t>(c) >= n) {
      throw ParamError("assign_baseline: center index out of range");
    }
    cl[c] = k + 1;
  }
  for (std::size_t p = 0; p < n; ++p) {
    const int i = q[p];
    if (cl[i] != -1) continue;
    const int up = nn[i];
    if (up == kNone || cl[up] == -1) {
      throw StructuralError(
          "assign_baseline: point " + std::to_string(i + 1) +
          " cannot reach a center (density root is not a center)");
    }
    cl[i] = cl[up];
  }
  return cl;
}

PeakProfile make_peak_profile(const CondensedDistanceMatrix& d,
                              const DensityVector& density) {
  if (static_cast<int>(density.rho.size()) != d.size()) {
    throw ParamError("make_peak_profile: density length does not match matrix");
  }
  PeakProfile p;
  p.rho = density.rho;
  p.q = density_order(p.rho);
  auto [delta, nn] = delta_nn(d, p.q);
  p.delta = std::move(delta);
  p.nn = std::move(nn);
  p.gamma = gamma_values(p.rho, p.delta);
  p.gamma_order = gamma_order(p.gamma);
  return p;
}

void write_peak_profile_csv(const std::string& path, const PeakProfile& profile) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "index,rho,delta,nn,gamma\n";
  std::string line;
  for (std::size_t i = 0; i < profile.rho.size(); ++i) {
    line.clear();
    line += std::to_string(i + 1);
    line += ',';
    append_double(line, profile.rho[i]);
    line += ',';
    append_double(line, profile.delta[i]);
    line += ',';
    line += std::to_string(profile.nn[i] == kNone ? -1 : profile.nn[i] + 1);
    line += ',';
    append_double(line, profile.gamma[i]);
    line += '\n';
    out << line;
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace ltclus
