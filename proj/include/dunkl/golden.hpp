#pragma once

// Reference value files: kernel_a2.csv, rank1.csv and heat_ck.csv.

#include <string>
#include <vector>

namespace dunkl {

struct GoldenEntry {
  std::string file;
  std::string label;
  double stored = 0.0;
  double oracle = 0.0;      // recomputed by the brute-force oracle
  double production = 0.0;  // recomputed by the library
  int oracle_nodes = 0;
  double oracle_rel = 0.0;
  double production_rel = 0.0;
  bool pass = false;
};

struct GoldenReport {
  std::vector<GoldenEntry> entries;
  bool passed() const;
};

inline constexpr double kGoldenRelTol = 1e-8;

// $DUNKL_GOLDEN_DIR when set, `fallback` otherwise.
std::string golden_dir(const std::string& fallback);

// Recomputes every reference value with the oracles and rewrites the three files.
GoldenReport regenerate_golden(const std::string& dir);

// Recomputes every stored value with both the oracles and the library and
// compares at relative tolerance `rel_tol`. Throws IoError for missing or
// malformed files.
GoldenReport check_golden(const std::string& dir, double rel_tol = kGoldenRelTol);

}  // namespace dunkl
