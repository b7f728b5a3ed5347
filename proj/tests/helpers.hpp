#pragma once

#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ltclus/core.hpp"

namespace testutil {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double normal01(std::mt19937_64& rng) {
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// 2-D gaussian mixture; with_duplicates copies earlier points verbatim to
// force rho/delta ties.
inline ltclus::Dataset random_mixture(std::mt19937_64& rng, int n, bool with_duplicates = true) {
  const int k = 1 + static_cast<int>(rng() % 6);
  std::vector<double> cx(k), cy(k), sd(k);
  for (int b = 0; b < k; ++b) {
    cx[b] = (uniform01(rng) * 2.0 - 1.0) * 20.0;
    cy[b] = (uniform01(rng) * 2.0 - 1.0) * 20.0;
    sd[b] = 0.3 + uniform01(rng) * 1.7;
  }
  ltclus::Dataset ds;
  ds.dims = 2;
  for (int i = 0; i < n; ++i) {
    if (with_duplicates && i > 0 && i % 9 == 0) {
      const int j = static_cast<int>(rng() % i);
      ds.points.push_back(ds.at(j, 0));
      ds.points.push_back(ds.at(j, 1));
      continue;
    }
    const int b = static_cast<int>(rng() % k);
    ds.points.push_back(cx[b] + sd[b] * normal01(rng));
    ds.points.push_back(cy[b] + sd[b] * normal01(rng));
  }
  return ds;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::uint64_t counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("ltclus_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace testutil
