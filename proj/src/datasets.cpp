#include "ltclus/datasets.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace ltclus {

namespace {

// 53-bit uniform in [0, 1); keeps generated datasets identical across
// standard libraries (distribution classes are not portable).
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// points per class, as even as possible, earlier classes first
std::array<int, 5> class_counts(int n) {
  std::array<int, 5> counts{};
  for (int k = 0; k < 5; ++k) counts[k] = n / 5 + (k < n % 5 ? 1 : 0);
  return counts;
}

void validate_spec(const GeneratorSpec& spec) {
  if (spec.n_points < 1) throw ParamError("generator: n_points must be positive");
  if (spec.kind == GeneratorKind::five_spherical) {
    if (!(spec.sphere_radius > 0.0)) throw ParamError("generator: sphere radius must be positive");
  } else {
    if (!(spec.spiral_t_max > spec.spiral_t_min)) {
      throw ParamError("generator: spiral t range is empty");
    }
  }
}

}  // namespace

GeneratorSpec default_spec(GeneratorKind kind) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.n_points = kind == GeneratorKind::five_spherical ? 2200 : 1060;
  return spec;
}

Dataset gen_five_spherical(const GeneratorSpec& spec) {
  validate_spec(spec);
  std::mt19937_64 rng(spec.seed);
  const double r = spec.sphere_radius;
  const auto counts = class_counts(spec.n_points);

  Dataset ds;
  ds.dims = 2;
  ds.points.reserve(static_cast<std::size_t>(spec.n_points) * 2);
  ds.labels.reserve(spec.n_points);
  for (int k = 0; k < 5; ++k) {
    const double angle = spec.sphere_angles_deg[k] * std::numbers::pi / 180.0;
    const double cx = spec.circumradius * std::cos(angle);
    const double cy = spec.circumradius * std::sin(angle);
    for (int i = 0; i < counts[k]; ++i) {
      const double z = (2.0 * uniform01(rng) - 1.0) * r;
      const double phi = 2.0 * std::numbers::pi * uniform01(rng);
      const double s = std::sqrt(r * r - z * z);
      // orthogonal projection: the z coordinate is dropped
      ds.points.push_back(cx + s * std::cos(phi));
      ds.points.push_back(cy + s * std::sin(phi));
      ds.labels.push_back(k + 1);
    }
  }
  return ds;
}

std::pair<double, double> spiral_point(double t, double theta) {
  return {-t / 8.0 * std::cos(t + theta), -t / 8.0 * std::sin(t + theta)};
}

Dataset gen_five_spiral(const GeneratorSpec& spec) {
  validate_spec(spec);
  std::mt19937_64 rng(spec.seed);
  const auto counts = class_counts(spec.n_points);

  Dataset ds;
  ds.dims = 2;
  ds.points.reserve(static_cast<std::size_t>(spec.n_points) * 2);
  ds.labels.reserve(spec.n_points);
  for (int k = 0; k < 5; ++k) {
    const double theta = spec.spiral_thetas[k];
    for (int i = 0; i < counts[k]; ++i) {
      const double t =
          spec.spiral_t_min + uniform01(rng) * (spec.spiral_t_max - spec.spiral_t_min);
      const auto [x, y] = spiral_point(t, theta);
      ds.points.push_back(x);
      ds.points.push_back(y);
      ds.labels.push_back(k + 1);
    }
  }
  return ds;
}

Dataset load_ecoli(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  Dataset ds;
  ds.dims = 7;
  std::vector<std::string> class_names;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream row(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (row >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 9) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected 9 fields, got " +
                       std::to_string(tokens.size()));
    }
    for (int a = 0; a < 7; ++a) {
      const std::string& field = tokens[a + 1];
      double value = 0.0;
      auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc{} || p != field.data() + field.size() || !std::isfinite(value)) {
        throw ParseError(path + ":" + std::to_string(lineno) + ": bad numeric field '" +
                         field + "'");
      }
      ds.points.push_back(value);
    }
    const std::string& cls = tokens[8];
    int label = 0;
    for (std::size_t c = 0; c < class_names.size(); ++c) {
      if (class_names[c] == cls) {
        label = static_cast<int>(c) + 1;
        break;
      }
    }
    if (label == 0) {
      class_names.push_back(cls);
      label = static_cast<int>(class_names.size());
    }
    ds.labels.push_back(label);
  }
  if (ds.labels.empty()) throw ParseError(path + ": no data rows");
  return ds;
}

Ds1Fixture ds1_fixture() {
  Ds1Fixture f;
  f.nneigh = {12, 13, 12, 6, 6, 13, 8, 6, 11, 11, 12, 13, 0};
  f.ord_rho = {13, 12, 11, 10, 9, 6, 3, 2, 4, 8, 1, 7, 5};
  f.sort_gamma_ind = {13, 6, 11, 3, 12, 1, 8, 4, 2, 7, 10, 5, 9};
  f.cl = {1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 1, 1};
  return f;
}

std::vector<int> Ds1Fixture::parents() const {
  std::vector<int> out(nneigh.size());
  for (std::size_t i = 0; i < nneigh.size(); ++i) {
    out[i] = nneigh[i] == 0 ? kNone : nneigh[i] - 1;
  }
  return out;
}

std::vector<int> Ds1Fixture::rho_order() const {
  std::vector<int> out(ord_rho.size());
  for (std::size_t i = 0; i < ord_rho.size(); ++i) out[i] = ord_rho[i] - 1;
  return out;
}

std::vector<int> Ds1Fixture::gamma_order_ids() const {
  std::vector<int> out(sort_gamma_ind.size());
  for (std::size_t i = 0; i < sort_gamma_ind.size(); ++i) out[i] = sort_gamma_ind[i] - 1;
  return out;
}

LabelVector Ds1Fixture::labels() const {
  return LabelVector(cl.begin(), cl.end());
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) comma = line.size();
    std::size_t begin = pos, end = comma;
    while (begin < end && (line[begin] == ' ' || line[begin] == '\t')) ++begin;
    while (end > begin && (line[end - 1] == ' ' || line[end - 1] == '\t')) --end;
    fields.push_back(line.substr(begin, end - begin));
    if (comma == line.size()) break;
    pos = comma + 1;
  }
  return fields;
}

double parse_double_field(const std::string& field, const std::string& path,
                          std::size_t lineno) {
  double value = 0.0;
  auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || p != field.data() + field.size() || !std::isfinite(value)) {
    throw ParseError(path + ":" + std::to_string(lineno) + ": bad numeric field '" +
                     field + "'");
  }
  return value;
}

int parse_int_field(const std::string& field, const std::string& path,
                    std::size_t lineno) {
  int value = 0;
  auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || p != field.data() + field.size()) {
    throw ParseError(path + ":" + std::to_string(lineno) + ": bad label field '" +
                     field + "'");
  }
  return value;
}

void append_shortest(std::string& out, double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, p);
}

}  // namespace

Dataset read_points_csv(const std::string& path, bool expect_header) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  Dataset ds;
  bool has_label_col = false;
  int n_cols = -1;
  std::string line;
  std::size_t lineno = 0;

  if (expect_header) {
    if (!std::getline(in, line)) throw ParseError(path + ": empty file");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_fields(line);
    if (header.empty()) throw ParseError(path + ": empty header");
    has_label_col = header.back() == "label";
    n_cols = static_cast<int>(header.size());
    ds.dims = n_cols - (has_label_col ? 1 : 0);
    if (ds.dims < 1) throw ParseError(path + ": no numeric columns");
  }

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (n_cols == -1) {  // headerless: first row fixes the width
      n_cols = static_cast<int>(fields.size());
      ds.dims = n_cols;
    }
    if (static_cast<int>(fields.size()) != n_cols) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(n_cols) + " fields, got " +
                       std::to_string(fields.size()));
    }
    for (int c = 0; c < ds.dims; ++c) {
      ds.points.push_back(parse_double_field(fields[c], path, lineno));
    }
    if (has_label_col) {
      ds.labels.push_back(parse_int_field(fields.back(), path, lineno));
    }
  }
  if (ds.points.empty()) throw ParseError(path + ": no data rows");
  return ds;
}

void write_points_csv(const std::string& path, const Dataset& dataset, bool with_header) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  const int n = dataset.size();
  std::string line;
  if (with_header) {
    line.clear();
    for (int c = 0; c < dataset.dims; ++c) {
      if (c) line += ',';
      line += 'x';
      line += std::to_string(c + 1);
    }
    if (dataset.has_labels()) line += ",label";
    line += '\n';
    out << line;
  }
  for (int i = 0; i < n; ++i) {
    line.clear();
    for (int c = 0; c < dataset.dims; ++c) {
      if (c) line += ',';
      append_shortest(line, dataset.at(i, c));
    }
    if (dataset.has_labels()) {
      line += ',';
      line += std::to_string(dataset.labels[i]);
    }
    line += '\n';
    out << line;
  }
  if (!out) throw IoError("write failed: " + path);
}

void write_manifest(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& entries) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  for (const auto& [key, value] : entries) out << key << ": " << value << '\n';
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace ltclus
