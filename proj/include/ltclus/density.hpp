#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ltclus/core.hpp"

namespace ltclus {

/// Upper-triangular storage of all N(N-1)/2 pairwise distances.
/// The accessor handles (i,j) order and the zero diagonal.
class CondensedDistanceMatrix {
 public:
  CondensedDistanceMatrix() = default;
  /// `values` must hold exactly n(n-1)/2 finite nonnegative entries in
  /// row-major (i<j) order.
  CondensedDistanceMatrix(int n, std::vector<double> values);

  int size() const { return n_; }
  std::size_t pair_count() const { return values_.size(); }

  double operator()(int i, int j) const {
    if (i == j) return 0.0;
    if (i > j) {
      const int t = i;
      i = j;
      j = t;
    }
    return values_[offset(i, j)];
  }

  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t offset(int i, int j) const {
    // i < j; one of i, 2n-i-1 is even, so the product halves exactly
    return static_cast<std::size_t>(i) * (2u * n_ - i - 1) / 2 +
           static_cast<std::size_t>(j - i - 1);
  }

  int n_ = 0;
  std::vector<double> values_;
};

enum class Metric { euclidean };
enum class Kernel { cutoff, gaussian };

inline const char* kernel_name(Kernel k) {
  return k == Kernel::cutoff ? "cutoff" : "gaussian";
}

/// Per-point local density together with the kernel and cutoff distance
/// that produced it.
struct DensityVector {
  std::vector<double> rho;
  Kernel kernel = Kernel::gaussian;
  double dc = 0.0;
};

/// Euclidean distances for every pair of points. Deterministic; requires
/// at least two points and finite coordinates.
CondensedDistanceMatrix pairwise_distances(const Dataset& dataset,
                                           Metric metric = Metric::euclidean);

/// Value at rank ceil(percent/100 * M) of the ascending sorted values,
/// rank clamped to [1, M]. Shared by estimate_dc and its tests.
double ascending_rank_value(std::vector<double> values, double percent);

/// Cutoff distance at the given percentile of the ascending pairwise
/// distances. Throws InputError when every distance is zero.
double estimate_dc(const CondensedDistanceMatrix& d, double percent);

/// rho_i = number of other points strictly closer than dc.
DensityVector rho_cutoff(const CondensedDistanceMatrix& d, double dc);

/// rho_i = sum over j != i of exp(-(d_ij/dc)^2).
DensityVector rho_gaussian(const CondensedDistanceMatrix& d, double dc);

/// Point indices sorted by density descending, ties by ascending index.
/// The first entry is the density root of the whole pipeline.
std::vector<int> density_order(const std::vector<double>& rho);
inline std::vector<int> density_order(const DensityVector& d) {
  return density_order(d.rho);
}

/// Reads an N x N distance matrix (CSV), validates symmetry within 1e-9
/// and a zero diagonal, and returns the condensed upper triangle.
CondensedDistanceMatrix read_distance_matrix_csv(const std::string& path);

}  // namespace ltclus
