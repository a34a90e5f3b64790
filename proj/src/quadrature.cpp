#include "dunkl/quadrature.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

constexpr long double kNewtonTol = 1e-17L;
constexpr int kNewtonMaxIter = 100;

// Rule generation runs in extended precision: near the endpoints the nodes
// cluster at distance ~1/n^2 from +-1, and double rounding of x would cost
// several digits in the weights there.
using Ext = long double;

void jacobi_p_ext(int n, Ext a, Ext b, Ext x, Ext& pn, Ext& pn_minus_1) {
  Ext p0 = 1.0L;
  if (n == 0) {
    pn = p0;
    pn_minus_1 = 0.0L;
    return;
  }
  Ext p1 = 0.5L * ((a + b + 2.0L) * x + (a - b));
  const Ext ab = a + b;
  const Ext a2b2 = a * a - b * b;
  for (int m = 2; m <= n; ++m) {
    const Ext c = 2.0L * m + ab;
    const Ext num1 = (c - 1.0L) * (c * (c - 2.0L) * x + a2b2);
    const Ext num2 = 2.0L * (m + a - 1.0L) * (m + b - 1.0L) * c;
    const Ext den = 2.0L * m * (m + ab) * (c - 2.0L);
    const Ext p2 = (num1 * p1 - num2 * p0) / den;
    p0 = p1;
    p1 = p2;
  }
  pn = p1;
  pn_minus_1 = p0;
}

// Derivative of P_n at x from P_n and P_{n-1}.
Ext jacobi_derivative(int n, Ext a, Ext b, Ext x, Ext pn, Ext pm1) {
  const Ext c = 2.0L * n + a + b;
  return (n * ((a - b) - c * x) * pn + 2.0L * (n + a) * (n + b) * pm1) / (c * (1.0L - x) * (1.0L + x));
}

// Root of P_n in [lo, hi] (sign change guaranteed). Newton steps that leave
// the bracket are replaced by bisection.
Ext refine_root(int n, Ext a, Ext b, Ext lo, Ext hi, Ext plo) {
  Ext x = 0.5L * (lo + hi);
  for (int it = 0; it < kNewtonMaxIter; ++it) {
    Ext pn, pm1;
    jacobi_p_ext(n, a, b, x, pn, pm1);
    if (pn == 0.0L) return x;
    if ((pn < 0.0L) == (plo < 0.0L)) {
      lo = x;
      plo = pn;
    } else {
      hi = x;
    }
    const Ext dp = jacobi_derivative(n, a, b, x, pn, pm1);
    Ext next = x - pn / dp;
    if (!(next > lo && next < hi)) next = 0.5L * (lo + hi);
    const Ext step = std::fabs(next - x);
    x = next;
    // Relative to the distance from the nearer endpoint, where nodes cluster.
    if (step <= kNewtonTol * std::min(1.0L - std::fabs(x), 1.0L)) break;
  }
  return x;
}

}  // namespace

void jacobi_p(int n, double a, double b, double x, double& pn, double& pn_minus_1) {
  Ext p, q;
  jacobi_p_ext(n, a, b, x, p, q);
  pn = static_cast<double>(p);
  pn_minus_1 = static_cast<double>(q);
}

double jacobi_mass(double a, double b) {
  return std::exp((a + b + 1.0) * std::numbers::ln2 + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
}

double QuadRule::weight_mass() const { return jacobi_mass(a, b); }

QuadRule gauss_jacobi(int n, double a, double b) {
  if (n < 1 || n > kMaxNodes) {
    throw InvalidArgument("gauss_jacobi: order must lie in [1, 512], got " + std::to_string(n));
  }
  if (!(a > -1.0) || !(b > -1.0)) {
    throw InvalidArgument("gauss_jacobi: exponents must exceed -1");
  }
  QuadRule rule;
  rule.a = a;
  rule.b = b;
  rule.order = n;

  // Bracket the roots by sampling on a uniform grid in theta = acos(x), where
  // roots are roughly equispaced; refine if any bracket is missed.
  std::vector<Ext> roots;
  for (int density = 8; roots.empty() || static_cast<int>(roots.size()) != n; density *= 2) {
    if (density > 256) throw Error(ErrorCode::NonConvergence, "gauss_jacobi: failed to bracket all roots");
    roots.clear();
    const int samples = density * n + 8;
    Ext x_prev = -1.0L;
    Ext p_prev, dummy;
    jacobi_p_ext(n, a, b, x_prev, p_prev, dummy);
    for (int j = samples - 1; j >= 0; --j) {
      const Ext x = std::cos(std::numbers::pi_v<Ext> * j / samples);
      Ext p;
      jacobi_p_ext(n, a, b, x, p, dummy);
      if (p == 0.0L) {
        roots.push_back(x);
      } else if ((p < 0.0L) != (p_prev < 0.0L) && p_prev != 0.0L) {
        roots.push_back(refine_root(n, a, b, x_prev, x, p_prev));
      }
      x_prev = x;
      p_prev = p;
    }
  }

  const Ext log_const = std::lgamma(Ext(n) + a + 1.0L) + std::lgamma(Ext(n) + b + 1.0L) -
                        std::lgamma(Ext(n) + a + b + 1.0L) - std::lgamma(Ext(n) + 1.0L) +
                        (a + b + 1.0L) * std::numbers::ln2_v<Ext>;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Ext x = roots[static_cast<std::size_t>(i)];
    Ext pn, pm1;
    jacobi_p_ext(n, a, b, x, pn, pm1);
    const Ext dp = jacobi_derivative(n, a, b, x, 0.0L, pm1);
    rule.nodes[static_cast<std::size_t>(i)] = static_cast<double>(x);
    rule.weights[static_cast<std::size_t>(i)] =
        static_cast<double>(std::exp(log_const) / ((1.0L - x) * (1.0L + x) * dp * dp));
  }
  return rule;
}

std::shared_ptr<const QuadRule> cached_gauss_jacobi(int n, double a, double b) {
  using Key = std::tuple<int, double, double>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const QuadRule>> cache;
  const Key key{n, a, b};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadRule>(gauss_jacobi(n, a, b));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(rule));
  return it->second;
}

double integrate_1d(const std::function<double(double)>& f, double lo, double hi, const QuadRule& rule) {
  if (!(lo < hi)) throw InvalidArgument("integrate_1d: requires lo < hi");
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = mid + half * rule.nodes[i];
    const double fu = f(u);
    if (!std::isfinite(fu)) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "integrate_1d: non-finite integrand at node u = %.17g", u);
      throw DomainError(buf);
    }
    sum += rule.weights[i] * fu;
  }
  return sum * std::pow(half, rule.a + rule.b + 1.0);
}

int initial_order(double x) {
  int n = 32;
  while (n < x && n < kMaxNodes) n *= 2;
  return n;
}

namespace {

// Shared doubling loop; `change(prev, cur)` is the relative change between
// successive orders.
template <class Change>
QuadResult refine(const std::function<double(int)>& at_order, int n0, double rel_tol, Change change) {
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-2)) {
    throw InvalidArgument("rel_tol must lie in [1e-14, 1e-2]");
  }
  if (n0 < 1 || n0 > kMaxNodes) throw InvalidArgument("initial order must lie in [1, 512]");
  QuadResult res;
  int n = n0;
  double prev = at_order(n);
  if (n >= kMaxNodes) {
    // Started at the cap: nothing to compare against.
    res.value = prev;
    res.diag.nodes = n;
    return res;
  }
  while (true) {
    const int next_n = std::min(2 * n, kMaxNodes);
    const double cur = at_order(next_n);
    const double delta = change(prev, cur);
    ++res.diag.refinements;
    n = next_n;
    if (delta <= rel_tol) {
      res.value = cur;
      res.diag.nodes = n;
      res.diag.delta = delta;
      return res;
    }
    if (n >= kMaxNodes) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "quadrature did not converge at %d nodes (last values %.17g, %.17g)", n, prev,
                    cur);
      throw NonConvergence(buf, prev, cur);
    }
    prev = cur;
  }
}

}  // namespace

QuadResult refine_until_converged(const std::function<double(int)>& at_order, int n0, double rel_tol) {
  return refine(at_order, n0, rel_tol, [](double prev, double cur) {
    return std::abs(cur - prev) / std::max(std::abs(cur), std::numeric_limits<double>::min());
  });
}

QuadResult refine_log_until_converged(const std::function<double(int)>& log_at_order, int n0, double rel_tol) {
  return refine(log_at_order, n0, rel_tol, [](double prev, double cur) {
    if (!std::isfinite(prev) || !std::isfinite(cur)) return std::numeric_limits<double>::infinity();
    return std::abs(std::expm1(cur - prev));
  });
}

QuadResult adaptive_tensor_integrate(const std::function<double(double, double)>& f, const Box& box,
                                     const QuadRule& rule_axis1, const QuadRule& rule_axis2, double rel_tol) {
  if (!(box.lo1 < box.hi1) || !(box.lo2 < box.hi2)) throw InvalidArgument("adaptive_tensor_integrate: empty box");
  const double a1 = rule_axis1.a, b1 = rule_axis1.b, a2 = rule_axis2.a, b2 = rule_axis2.b;
  const double h1 = 0.5 * (box.hi1 - box.lo1), m1 = 0.5 * (box.hi1 + box.lo1);
  const double h2 = 0.5 * (box.hi2 - box.lo2), m2 = 0.5 * (box.hi2 + box.lo2);
  const double scale = std::pow(h1, a1 + b1 + 1.0) * std::pow(h2, a2 + b2 + 1.0);
  auto at_order = [&](int n) {
    const auto r1 = cached_gauss_jacobi(n, a1, b1);
    const auto r2 = cached_gauss_jacobi(n, a2, b2);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double u = m1 + h1 * r1->nodes[static_cast<std::size_t>(i)];
      double row = 0.0;
      for (int j = 0; j < n; ++j) {
        const double v = m2 + h2 * r2->nodes[static_cast<std::size_t>(j)];
        const double fv = f(u, v);
        if (!std::isfinite(fv)) {
          char buf[160];
          std::snprintf(buf, sizeof buf, "adaptive_tensor_integrate: non-finite integrand at (%.17g, %.17g)", u, v);
          throw DomainError(buf);
        }
        row += r2->weights[static_cast<std::size_t>(j)] * fv;
      }
      sum += r1->weights[static_cast<std::size_t>(i)] * row;
    }
    return sum * scale;
  };
  const int n0 = std::max(rule_axis1.order, rule_axis2.order);
  return refine_until_converged(at_order, n0, rel_tol);
}

}  // namespace dunkl
