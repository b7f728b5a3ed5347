#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ltclus/core.hpp"
#include "ltclus/density.hpp"

namespace ltclus {

/// Everything the pipeline derives from the densities: separation distance
/// delta, nearest higher-density neighbor nn (kNone at the root), the
/// gamma = rho * delta scores, and the two orderings q (density-descending)
/// and gamma_order (gamma-descending).
struct PeakProfile {
  std::vector<double> rho;
  std::vector<double> delta;
  std::vector<int> nn;
  std::vector<double> gamma;
  std::vector<int> q;
  std::vector<int> gamma_order;
};

/// Distinct point indices promoted to cluster centers, ordered by
/// descending gamma when produced by select_centers.
struct CenterSet {
  std::vector<int> ids;

  int size() const { return static_cast<int>(ids.size()); }
  int operator[](int k) const { return ids[k]; }
};

/// Core delta/nn scan over an arbitrary distance source. `dist(i, j)` must
/// be symmetric with dist(i, i) == 0. For every point except the first in
/// q, delta is the distance to the closest point earlier in q and nn that
/// point (ties keep the earliest q position). The first point gets the
/// maximum distance to any other point and nn = kNone. A single point gets
/// delta = 0.
template <class DistFn>
void delta_nn_scan(int n, const std::vector<int>& q, DistFn&& dist,
                   std::vector<double>& delta, std::vector<int>& nn) {
  delta.assign(n, 0.0);
  nn.assign(n, kNone);
  if (n <= 1) return;
  const int root = q[0];
  double dmax = 0.0;
  for (int p = 1; p < n; ++p) {
    const double d = dist(root, q[p]);
    if (d > dmax) dmax = d;
  }
  delta[root] = dmax;
  for (int p = 1; p < n; ++p) {
    const int i = q[p];
    double best = std::numeric_limits<double>::infinity();
    int best_j = kNone;
    for (int s = 0; s < p; ++s) {
      const double d = dist(i, q[s]);
      if (d < best) {  // strict: the earliest q position wins ties
        best = d;
        best_j = q[s];
      }
    }
    delta[i] = best;
    nn[i] = best_j;
  }
}

/// delta/nn from a condensed distance matrix and a density ordering.
std::pair<std::vector<double>, std::vector<int>> delta_nn(
    const CondensedDistanceMatrix& d, const std::vector<int>& q);

/// Elementwise rho * delta.
std::vector<double> gamma_values(const std::vector<double>& rho,
                                 const std::vector<double>& delta);

/// Indices sorted by gamma descending, ties by ascending index. The first
/// entry always equals q[0] for profiles produced by this pipeline.
std::vector<int> gamma_order(const std::vector<double>& gamma);

/// The top-m prefix of a gamma ordering.
CenterSet select_centers(const std::vector<int>& gamma_order, int m);

/// Single-scan assignment: centers get labels 1..m in CenterSet order,
/// every other point inherits the label of its nearest higher-density
/// neighbor while scanning q. Throws StructuralError when a point's
/// neighbor chain cannot reach a center (possible only when the density
/// root is not a center).
LabelVector assign_baseline(const std::vector<int>& nn, const std::vector<int>& q,
                            const CenterSet& centers);

/// Convenience: density ordering, delta/nn, gamma and its ordering in one go.
PeakProfile make_peak_profile(const CondensedDistanceMatrix& d,
                              const DensityVector& density);

/// CSV with columns index,rho,delta,nn,gamma; indices 1-based, nn = -1 at
/// the root.
void write_peak_profile_csv(const std::string& path, const PeakProfile& profile);

}  // namespace ltclus
