#pragma once

// Gauss-Jacobi rules, tensorization and node-doubling convergence control.

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace dunkl {

inline constexpr int kMaxNodes = 512;
inline constexpr double kDefaultRelTol = 1e-9;

// n-point Gauss rule for the weight (1 - z)^a (1 + z)^b on (-1, 1).
// Nodes are strictly increasing and all weights are positive.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = 0.0;
  double b = 0.0;
  int order = 0;

  // \int_{-1}^{1} (1-z)^a (1+z)^b dz
  double weight_mass() const;
};

// Throws InvalidArgument unless 1 <= n <= 512 and a, b > -1.
QuadRule gauss_jacobi(int n, double a, double b);
inline QuadRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

// Process-wide memoized rules. Rules are immutable once built, so the
// returned pointer can be shared freely across threads.
std::shared_ptr<const QuadRule> cached_gauss_jacobi(int n, double a, double b);

// Jacobi polynomial P_n^{(a,b)}(x) and P_{n-1}^{(a,b)}(x) by the three-term
// recurrence.
void jacobi_p(int n, double a, double b, double x, double& pn, double& pn_minus_1);

// 2^{a+b+1} B(a+1, b+1).
double jacobi_mass(double a, double b);

// \int_lo^hi (hi - u)^a (u - lo)^b f(u) du. The Jacobi weight is implicit; f is
// the smooth residual. Throws DomainError naming the node if f is non-finite.
double integrate_1d(const std::function<double(double)>& f, double lo, double hi, const QuadRule& rule);

struct Box {
  double lo1, hi1, lo2, hi2;
};

struct QuadDiagnostics {
  int nodes = 0;        // final order per axis
  double delta = 0.0;   // last relative change between successive orders
  int refinements = 0;  // number of doublings performed
};

struct QuadResult {
  double value = 0.0;
  QuadDiagnostics diag;
};

// Generic doubling driver: evaluates `at_order(n)` for n = n0, 2 n0, ...
// until |v(2n) - v(n)| <= rel_tol |v(2n)| or n reaches 512 (then throws
// NonConvergence with the last two values).
QuadResult refine_until_converged(const std::function<double(int)>& at_order, int n0, double rel_tol);

// Same driver for quantities evaluated in log space: `at_order` returns
// log(value) and convergence is judged on |exp(l_2n - l_n) - 1|.
QuadResult refine_log_until_converged(const std::function<double(int)>& log_at_order, int n0, double rel_tol);

// Tensor Gauss-Jacobi integration of f over `box`; rule_axis1 / rule_axis2
// supply the starting order and the Jacobi exponents of each axis. Both axes
// are doubled together.
QuadResult adaptive_tensor_integrate(const std::function<double(double, double)>& f, const Box& box,
                                     const QuadRule& rule_axis1, const QuadRule& rule_axis2,
                                     double rel_tol = kDefaultRelTol);

// Smallest power of two >= max(32, x), capped at 512.
int initial_order(double x);

}  // namespace dunkl
