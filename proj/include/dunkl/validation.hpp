#pragma once

// Finite-difference Dunkl operators and the kernel/estimate ratio sweeps.

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dunkl/estimates.hpp"
#include "dunkl/heat.hpp"
#include "dunkl/kernel_a2.hpp"

namespace dunkl {

struct EvalReport {
  APoint x;
  APoint lambda;
  double k = 0.0;
  double t = 0.0;  // 0 for plain kernel reports
  double kernel_log = 0.0;
  double estimate_log = 0.0;
  double log_ratio = 0.0;  // kernel_log - estimate_log
  Chamber chamber = Chamber::C123;
  EstimateBranch branch;
  int quad_nodes = 0;
  double quad_delta = 0.0;
  std::string error;  // non-empty when the point failed

  bool ok() const { return error.empty(); }
};

// Kernel, estimate and their log ratio at one point; lambda must be interior to C+.
EvalReport evaluate_report(const APoint& x, const APoint& lambda, Multiplicity k, const KernelOptions& opt = {});

// Same for the heat kernel against heat_estimate (X in C+, Y arbitrary). The
// report stores Y in `lambda`.
EvalReport evaluate_heat_report(double t, const APoint& x, const APoint& y, Multiplicity k,
                                const KernelOptions& opt = {});

using PointFunction = std::function<double(const APoint&)>;

inline constexpr double kMinStep = 1e-7;
inline constexpr double kMaxStep = 1e-3;

// Default finite-difference step 1e-5 (1 + |X|).
double default_step(const APoint& x);

// T_xi f(X) = d_xi f(X) + k sum_rho rho(xi) (f(X) - f(s_rho X)) / <rho, X>,
// with a centered difference of step h. Throws DomainError when X lies on a
// wall and InvalidArgument when h is outside [1e-7, 1e-3].
double dunkl_apply(const PointFunction& f, const APoint& xi, const APoint& x, Multiplicity k, double h);

// |T_xi E(., lambda)(X) - <xi, lambda> E(X, lambda)| / (|<xi, lambda> E(X, lambda)| + 1).
// E is evaluated at a single fixed quadrature order across the stencil.
double eigen_residual(const APoint& x, const APoint& lambda, Multiplicity k, const APoint& xi, double h);

// Direction vectors of the positive roots: (1,-1,0), (0,1,-1), (1,0,-1).
APoint root_vector(Root r);

struct EigenCase {
  APoint x;
  APoint lambda;
  double k;
  APoint xi;
};

// 30 points, five per chamber, k cycling through 0.5, 1 and 2.
const std::vector<EigenCase>& eigen_validation_set();

// Log-value gaps across a wall: X+- = X_wall +- eps rho / |rho|, where rho is
// the root vanishing at X_wall. The kernel is evaluated at one fixed order.
struct WallGap {
  double eps = 0.0;
  double kernel_gap = 0.0;
  double estimate_gap = 0.0;
};

std::vector<WallGap> wall_gaps(const APoint& x_wall, Root wall, const APoint& lambda, Multiplicity k,
                               const std::vector<double>& eps);

// The six wall rays: permutations of (1,1,-2) and (2,-1,-1), each with the root vanishing on it.
std::vector<std::pair<APoint, Root>> wall_rays();

struct SweepSpec {
  Chamber chamber = Chamber::C123;
  double radius = 5.0;
  int grid_n = 8;
  double k = 1.0;
  double rel_tol = 1e-7;
  int threads = 0;  // 0: hardware concurrency
};

struct SweepSummary {
  std::size_t count = 0;  // successful points
  std::size_t failures = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  std::array<std::size_t, 3> branch_counts{0, 0, 0};

  double spread() const { return max - min; }
  // More than 1% of the points failed.
  bool failed() const;
};

struct SweepResult {
  std::vector<EvalReport> rows;
  SweepSummary summary;
};

// Deterministic grid: X = w X+ with X+ on grid_n log-spaced shells in
// [0.05, radius] times three angles of C+, and lambda on grid_n shells times
// two angles placed on either side of alpha = beta. Rows come out in grid order.
SweepResult ratio_sweep(const SweepSpec& spec);

// Heat version: X in C+, Y in the requested chamber, both on the same shells.
SweepResult heat_sweep(const SweepSpec& spec, double t);

SweepSummary summarize(const std::vector<EvalReport>& rows);

// Point of C+ with norm r at angular fraction f in (0, 1) across the chamber;
// f -> 0 approaches the wall beta = 0 and f -> 1 the wall alpha = 0.
APoint chamber_point(double r, double f);

// Maps X+ in C+ into chamber c.
APoint place_in_chamber(const APoint& xp, Chamber c);

// Runs fn(i) for i in [0, n) on `threads` workers.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

// Invariant suites behind `validate`.
struct SuiteResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> details;
};

const std::vector<std::string>& suite_names();
// `name` is one of suite_names() or "all". Throws InvalidArgument for unknown names.
std::vector<SuiteResult> run_suites(const std::string& name, int threads = 0);

}  // namespace dunkl
