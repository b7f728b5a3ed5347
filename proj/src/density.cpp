#include "ltclus/density.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

namespace ltclus {

CondensedDistanceMatrix::CondensedDistanceMatrix(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1) throw ParamError("distance matrix needs at least one point");
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (values_.size() != expected) {
    throw InputError("condensed distance matrix: expected " +
                     std::to_string(expected) + " entries, got " +
                     std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InputError("condensed distance matrix: entries must be finite and nonnegative");
    }
  }
}

CondensedDistanceMatrix pairwise_distances(const Dataset& dataset, Metric metric) {
  (void)metric;  // euclidean is the only built-in metric
  const int n = dataset.size();
  if (n < 2) throw ParamError("pairwise_distances: need at least two points");
  if (dataset.dims < 1) throw InputError("pairwise_distances: dataset has no attributes");
  for (std::size_t k = 0; k < dataset.points.size(); ++k) {
    if (!std::isfinite(dataset.points[k])) {
      throw InputError("pairwise_distances: non-finite coordinate at row " +
                       std::to_string(k / dataset.dims + 1));
    }
  }

  const int dims = dataset.dims;
  std::vector<double> values(static_cast<std::size_t>(n) * (n - 1) / 2);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    const double* a = dataset.points.data() + static_cast<std::size_t>(i) * dims;
    for (int j = i + 1; j < n; ++j, ++k) {
      const double* b = dataset.points.data() + static_cast<std::size_t>(j) * dims;
      double s = 0.0;
      for (int c = 0; c < dims; ++c) {
        const double diff = a[c] - b[c];
        s += diff * diff;
      }
      values[k] = std::sqrt(s);
    }
  }
  return CondensedDistanceMatrix(n, std::move(values));
}

double ascending_rank_value(std::vector<double> values, double percent) {
  if (!(percent > 0.0 && percent < 100.0)) {
    throw ParamError("percentile must lie in (0, 100)");
  }
  if (values.empty()) throw ParamError("percentile of an empty set");
  const std::size_t m = values.size();
  std::size_t rank = static_cast<std::size_t>(std::ceil(percent / 100.0 * static_cast<double>(m)));
  rank = std::clamp<std::size_t>(rank, 1, m);
  std::nth_element(values.begin(), values.begin() + (rank - 1), values.end());
  return values[rank - 1];
}

double estimate_dc(const CondensedDistanceMatrix& d, double percent) {
  if (d.pair_count() == 0) throw ParamError("estimate_dc: need at least one pair");
  const double dc = ascending_rank_value(d.values(), percent);
  if (dc == 0.0) {
    const double dmax = *std::max_element(d.values().begin(), d.values().end());
    if (dmax == 0.0) throw InputError("estimate_dc: all pairwise distances are zero");
  }
  return dc;
}

DensityVector rho_cutoff(const CondensedDistanceMatrix& d, double dc) {
  if (!(dc > 0.0)) throw ParamError("cutoff distance must be positive");
  const int n = d.size();
  std::vector<double> rho(n, 0.0);
  const std::vector<double>& v = d.values();
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (v[k] < dc) {  // strict: a pair exactly at dc does not count
        rho[i] += 1.0;
        rho[j] += 1.0;
      }
    }
  }
  return DensityVector{std::move(rho), Kernel::cutoff, dc};
}

DensityVector rho_gaussian(const CondensedDistanceMatrix& d, double dc) {
  if (!(dc > 0.0)) throw ParamError("cutoff distance must be positive");
  const int n = d.size();
  std::vector<double> rho(n, 0.0);
  const std::vector<double>& v = d.values();
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const double r = v[k] / dc;
      const double w = std::exp(-r * r);
      rho[i] += w;
      rho[j] += w;
    }
  }
  return DensityVector{std::move(rho), Kernel::gaussian, dc};
}

std::vector<int> density_order(const std::vector<double>& rho) {
  std::vector<int> q(rho.size());
  std::iota(q.begin(), q.end(), 0);
  std::sort(q.begin(), q.end(), [&rho](int a, int b) {
    if (rho[a] != rho[b]) return rho[a] > rho[b];
    return a < b;
  });
  return q;
}

namespace {

std::vector<double> parse_csv_row(const std::string& line, const std::string& path,
                                  std::size_t lineno) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) comma = line.size();
    const char* begin = line.data() + pos;
    const char* end = line.data() + comma;
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t')) --end;
    double value = 0.0;
    auto [p, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || p != end || !std::isfinite(value)) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": bad numeric field");
    }
    out.push_back(value);
    if (comma == line.size()) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

CondensedDistanceMatrix read_distance_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(parse_csv_row(line, path, lineno));
  }
  if (rows.empty()) throw ParseError(path + ": empty distance matrix");
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ParseError(path + ": row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " columns, expected " +
                       std::to_string(n));
    }
  }
  constexpr double kSymTol = 1e-9;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(rows[i][i]) > kSymTol) {
      throw ParseError(path + ": nonzero diagonal at row " + std::to_string(i + 1));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > kSymTol) {
        throw ParseError(path + ": asymmetric at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
      }
      if (rows[i][j] < 0.0) {
        throw ParseError(path + ": negative distance at (" + std::to_string(i + 1) +
                         "," + std::to_string(j + 1) + ")");
      }
    }
  }
  std::vector<double> values;
  values.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) values.push_back(rows[i][j]);
  }
  return CondensedDistanceMatrix(static_cast<int>(n), std::move(values));
}

}  // namespace ltclus
