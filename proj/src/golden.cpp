#include "dunkl/golden.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

#include "dunkl/csv.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/heat.hpp"
#include "dunkl/kernel_a2.hpp"
#include "dunkl/oracles.hpp"

namespace dunkl {

namespace {

constexpr double kKernelOracleTol = 1e-12;
constexpr double kCkOracleTol = 1e-13;

struct KernelCase {
  APoint x, lambda;
  double k;
};

const std::vector<KernelCase>& kernel_cases() {
  static const std::vector<KernelCase> cases = {
      {{1.0, 0.0, -1.0}, {2.0, 1.0, -3.0}, 1.0},   {{1.0, 0.0, -1.0}, {2.0, 1.0, -3.0}, 0.5},
      {{-1.0, 0.0, 1.0}, {2.0, 1.0, -3.0}, 1.0},   {{0.3, 0.8, -1.1}, {2.0, 1.0, -3.0}, 2.0},
      {{2.0, -0.5, -1.5}, {1.5, 0.3, -1.8}, 1.5},  {{3.0, 1.0, -4.0}, {4.0, -1.0, -3.0}, 1.0},
      {{-2.0, 3.5, -1.5}, {2.5, -3.0, 0.5}, 0.3},
  };
  return cases;
}

struct Rank1Case {
  double x, v, k;
};

const std::vector<Rank1Case>& rank1_cases() {
  static const std::vector<Rank1Case> cases = {
      {1.0, 2.0, 1.0}, {1.0, 2.0, 0.5}, {-1.5, 2.0, 2.0}, {0.7, -3.0, 0.3}, {2.5, 4.0, 1.5},
  };
  return cases;
}

const std::vector<double>& ck_cases() {
  static const std::vector<double> cases = {0.5, 1.0, 2.0};
  return cases;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

KernelOptions tight_kernel() {
  KernelOptions opt;
  opt.rel_tol = 1e-11;
  return opt;
}

struct FileSpec {
  std::string name;
  std::string header;
  std::vector<std::string> provenance;
};

const FileSpec kKernelFile{"kernel_a2.csv",
                           "X,lambda,k,value,rel_tol,oracle_nodes",
                           {"# E_k(X, lambda) for A2",
                            "# oracle: plain tensor Gauss-Jacobi quadrature of the alpha-expansion double integral,",
                            "#   rank-one kernel from the Bessel route, 4x the production starting order, node-doubled"}};
const FileSpec kRank1File{"rank1.csv",
                          "x,v,k,value,rel_tol,oracle_nodes",
                          {"# rank-one kernel E_k(x, v)",
                           "# oracle: power series of the normalized Bessel functions in long double",
                           "#   (oracle_nodes is 0: no quadrature involved)"}};
const FileSpec kCkFile{"heat_ck.csv",
                       "k,value,rel_tol,oracle_nodes",
                       {"# c_k = integral over the plane of exp(-|x|^2/2) prod |<rho, x>|^{2k}",
                        "# oracle: tensor Gauss-Jacobi quadrature in skew chamber coordinates, node-doubled"}};

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw IoError("cannot write " + p.string());
  return out;
}

void write_file(const std::string& dir, const FileSpec& spec, const std::vector<std::string>& rows) {
  auto out = open_out(std::filesystem::path(dir) / spec.name);
  for (const auto& line : spec.provenance) out << line << '\n';
  out << spec.header << '\n';
  for (const auto& r : rows) out << r << '\n';
  if (!out) throw IoError("write failed for " + spec.name);
}

std::vector<std::vector<std::string>> read_file(const std::string& dir, const FileSpec& spec, std::size_t columns) {
  const auto path = std::filesystem::path(dir) / spec.name;
  std::ifstream in(path);
  if (!in) throw IoError("cannot open golden file " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != spec.header) throw IoError(spec.name + ": unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.size() != columns) throw IoError(spec.name + ": malformed row '" + line + "'");
    rows.push_back(std::move(fields));
  }
  if (!header_seen) throw IoError(spec.name + ": missing header");
  return rows;
}

double to_double(const std::string& s, const std::string& file) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw IoError(file + ": bad number '" + s + "'");
  return v;
}

GoldenEntry make_entry(const std::string& file, std::string label, double stored, double oracle, double production,
                       int nodes, double rel_tol) {
  GoldenEntry e;
  e.file = file;
  e.label = std::move(label);
  e.stored = stored;
  e.oracle = oracle;
  e.production = production;
  e.oracle_nodes = nodes;
  e.oracle_rel = rel_diff(oracle, stored);
  e.production_rel = rel_diff(production, stored);
  e.pass = e.oracle_rel <= rel_tol && e.production_rel <= rel_tol;
  return e;
}

std::string kernel_label(const APoint& x, const APoint& l, double k) {
  return "X=(" + x.to_string() + ") lambda=(" + l.to_string() + ") k=" + format_double(k);
}

}  // namespace

bool GoldenReport::passed() const {
  if (entries.empty()) return false;
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

std::string golden_dir(const std::string& fallback) {
  const char* env = std::getenv("DUNKL_GOLDEN_DIR");
  return env && *env ? std::string(env) : fallback;
}

GoldenReport regenerate_golden(const std::string& dir) {
  std::filesystem::create_directories(dir);
  GoldenReport rep;
  std::vector<std::string> rows;
  for (const auto& c : kernel_cases()) {
    const Multiplicity k(c.k);
    const OracleValue o = oracle_kernel(c.x, c.lambda, k, kKernelOracleTol);
    const double v = std::exp(o.log_value);
    rows.push_back(csv_field(c.x.to_string()) + ',' + csv_field(c.lambda.to_string()) + ',' + format_double(c.k) +
                   ',' + format_double(v) + ',' + format_double(kKernelOracleTol) + ',' + std::to_string(o.nodes));
    rep.entries.push_back(make_entry(kKernelFile.name, kernel_label(c.x, c.lambda, c.k), v, v,
                                     ek(c.x, c.lambda, k, tight_kernel()).value, o.nodes, kGoldenRelTol));
  }
  write_file(dir, kKernelFile, rows);

  rows.clear();
  for (const auto& c : rank1_cases()) {
    const Multiplicity k(c.k);
    const double v = oracle_rank1(c.x, c.v, k);
    rows.push_back(format_double(c.x) + ',' + format_double(c.v) + ',' + format_double(c.k) + ',' + format_double(v) +
                   ",0,0");
    rep.entries.push_back(make_entry(kRank1File.name,
                                     "x=" + format_double(c.x) + " v=" + format_double(c.v) + " k=" + format_double(c.k),
                                     v, v, rank1_kernel(c.x, c.v, k), 0, kGoldenRelTol));
  }
  write_file(dir, kRank1File, rows);

  rows.clear();
  for (double kv : ck_cases()) {
    const Multiplicity k(kv);
    const OracleValue o = oracle_ck(k, kCkOracleTol);
    const double v = std::exp(o.log_value);
    rows.push_back(format_double(kv) + ',' + format_double(v) + ',' + format_double(kCkOracleTol) + ',' +
                   std::to_string(o.nodes));
    rep.entries.push_back(make_entry(kCkFile.name, "k=" + format_double(kv), v, v, compute_ck(k), o.nodes,
                                     kGoldenRelTol));
  }
  write_file(dir, kCkFile, rows);
  return rep;
}

GoldenReport check_golden(const std::string& dir, double rel_tol) {
  GoldenReport rep;
  for (const auto& f : read_file(dir, kKernelFile, 6)) {
    const APoint x = APoint::parse(f[0]), l = APoint::parse(f[1]);
    const double kv = to_double(f[2], kKernelFile.name);
    const Multiplicity k(kv);
    const OracleValue o = oracle_kernel(x, l, k, to_double(f[4], kKernelFile.name));
    rep.entries.push_back(make_entry(kKernelFile.name, kernel_label(x, l, kv), to_double(f[3], kKernelFile.name),
                                     std::exp(o.log_value), ek(x, l, k, tight_kernel()).value, o.nodes, rel_tol));
  }
  for (const auto& f : read_file(dir, kRank1File, 6)) {
    const double x = to_double(f[0], kRank1File.name), v = to_double(f[1], kRank1File.name);
    const Multiplicity k(to_double(f[2], kRank1File.name));
    rep.entries.push_back(make_entry(kRank1File.name, "x=" + f[0] + " v=" + f[1] + " k=" + f[2],
                                     to_double(f[3], kRank1File.name), oracle_rank1(x, v, k), rank1_kernel(x, v, k), 0,
                                     rel_tol));
  }
  for (const auto& f : read_file(dir, kCkFile, 4)) {
    const Multiplicity k(to_double(f[0], kCkFile.name));
    const OracleValue o = oracle_ck(k, to_double(f[2], kCkFile.name));
    rep.entries.push_back(make_entry(kCkFile.name, "k=" + f[0], to_double(f[1], kCkFile.name), std::exp(o.log_value),
                                     compute_ck(k), o.nodes, rel_tol));
  }
  return rep;
}

}  // namespace dunkl
