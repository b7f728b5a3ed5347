#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace ltclus {

/// Sentinel parent/neighbor index: the density root has no predecessor.
inline constexpr int kNone = -1;

// Error taxonomy. The CLI maps each class to a distinct exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// A parameter value outside its documented range.
struct ParamError : Error {
  using Error::Error;
};
/// In-memory data that violates a type invariant (non-finite coordinate, ...).
struct InputError : Error {
  using Error::Error;
};
/// Malformed file content; messages carry path and line where possible.
struct ParseError : Error {
  using Error::Error;
};
/// Inconsistent tree, neighbor array, or center set.
struct StructuralError : Error {
  using Error::Error;
};
/// The fast split path was given a center set it cannot handle.
struct ModeViolationError : StructuralError {
  using StructuralError::StructuralError;
};
struct IoError : Error {
  using Error::Error;
};

/// Cluster ids, 1-based: label k marks the component of the k-th center.
using LabelVector = std::vector<int>;

/// N points by `dims` numeric attributes, row-major, with optional
/// ground-truth labels (one per point, empty when absent).
struct Dataset {
  std::vector<double> points;
  int dims = 0;
  std::vector<int> labels;

  int size() const {
    return dims == 0 ? 0 : static_cast<int>(points.size() / static_cast<std::size_t>(dims));
  }
  double at(int i, int k) const {
    return points[static_cast<std::size_t>(i) * dims + k];
  }
  std::span<const double> row(int i) const {
    return {points.data() + static_cast<std::size_t>(i) * dims,
            static_cast<std::size_t>(dims)};
  }
  bool has_labels() const { return !labels.empty(); }
};

}  // namespace ltclus
