#include "dunkl/kernel_a2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl {

std::string_view formula_name(Formula f) {
  switch (f) {
    case Formula::Alpha: return "alpha";
    case Formula::Beta: return "beta";
    case Formula::Both: return "both";
    case Formula::Auto: return "auto";
  }
  return "?";
}

Formula parse_formula(std::string_view name) {
  if (name == "alpha") return Formula::Alpha;
  if (name == "beta") return Formula::Beta;
  if (name == "both") return Formula::Both;
  if (name == "auto") return Formula::Auto;
  throw InvalidArgument("unknown formula '" + std::string(name) + "' (expected alpha, beta, both or auto)");
}

double wk_weight(const APoint& lambda, double nu1, double nu2, Multiplicity k) {
  const double l1 = lambda.x1(), l2 = lambda.x2(), l3 = lambda.x3();
  if (!(nu1 <= l1)) throw DomainError("wk_weight: requires nu1 <= lambda1");
  if (!(nu1 >= l2)) throw DomainError("wk_weight: requires nu1 >= lambda2");
  if (!(nu2 <= l2)) throw DomainError("wk_weight: requires nu2 <= lambda2");
  if (!(nu2 >= l3)) throw DomainError("wk_weight: requires nu2 >= lambda3");
  const double prod = (l1 - nu1) * (l1 - nu2) * (nu1 - l2) * (l2 - nu2) * (nu1 - l3) * (nu2 - l3);
  if (k == 1.0) return 1.0;
  return std::pow(prod, k - 1.0);
}

double log_kernel_prefactor(const APoint& lambda, Multiplicity k) {
  // The normalizing constant carries Gamma(k)^3: with it the integral at X = 0
  // reduces to a Dixon-Anderson integral equal to exactly 1.
  return std::log(3.0) + std::lgamma(3.0 * k) - 2.0 * k * std::log(vandermonde(lambda)) - 3.0 * std::lgamma(k.value());
}

void require_interior_spectral(const APoint& lambda, double wall_rel) {
  const RootValues r = root_values(lambda);
  const double threshold = wall_rel * lambda.norm();
  if (!(r.alpha > threshold && r.beta > threshold)) {
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "spectral parameter (%s) lies within %.3g of a chamber wall (alpha = %.3g, beta = %.3g)",
                  lambda.to_string().c_str(), threshold, r.alpha, r.beta);
    throw DegenerateSpectral(buf);
  }
}

int kernel_initial_order(const APoint& x, const APoint& lambda) {
  const double gx = root_values(project_plus(x)).gamma;
  const double gl = root_values(project_plus(lambda)).gamma;
  return initial_order(std::ceil(2.0 * std::sqrt(1.0 + gx * gl)));
}

namespace {

// s * (nu - lambda[index]) with s = +1 or -1.
struct LinearFactor {
  double sign;
  int index;
  double operator()(const APoint& l, double nu) const { return sign * (nu - l[index]); }
};

constexpr LinearFactor nu_minus(int i) { return {1.0, i}; }
constexpr LinearFactor minus_nu(int i) { return {-1.0, i}; }

// Both expansions have the shape
//   \int\int { P1(n1) Q1(n2) R(a s) + P2(n1) Q2(n2) R(-a s) } M1(n1) M2(n2) e^{b (n1 + n2)} W_k dn
// with s = n1 - n2 and R(y) = E_k^{rk1}(1, y).
struct Expansion {
  double a;
  double b;
  LinearFactor p1, q1, p2, q2, m1, m2;
};

Expansion alpha_expansion(const APoint& x) {
  return {(x.x1() - x.x2()) / 2.0, (x.x1() + x.x2() - 2.0 * x.x3()) / 2.0,
          nu_minus(1),  minus_nu(0),
          minus_nu(0),  minus_nu(1),
          nu_minus(2),  nu_minus(2)};
}

Expansion beta_expansion(const APoint& x) {
  return {(x.x2() - x.x3()) / 2.0, (x.x2() + x.x3() - 2.0 * x.x1()) / 2.0,
          nu_minus(2),  minus_nu(1),
          nu_minus(1),  nu_minus(2),
          minus_nu(0),  minus_nu(0)};
}

double log_sum_exp(const std::vector<double>& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double t : v) m = std::max(m, t);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double t : v) s += std::exp(t - m);
  return m + std::log(s);
}

// One axis of the box with its nodes and log-weights (Jacobi weight, the
// residual power of W_k and the affine scaling folded in).
struct Axis {
  std::vector<double> nu;
  std::vector<double> log_w;
  double lo, hi;
};

Axis make_axis(const QuadRule& rule, double lo, double hi, const std::function<double(double)>& log_residual) {
  Axis ax;
  ax.lo = lo;
  ax.hi = hi;
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  const double log_scale = (rule.a + rule.b + 1.0) * std::log(half);
  ax.nu.resize(rule.nodes.size());
  ax.log_w.resize(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    ax.nu[i] = mid + half * rule.nodes[i];
    ax.log_w[i] = std::log(rule.weights[i]) + log_residual(ax.nu[i]) + log_scale;
  }
  return ax;
}

// log \int poly(nu) e^{c nu} dmu(nu) along one axis, where poly > 0 is given
// by its log at the nodes. The exponential is damped at its maximum endpoint.
double log_axis_integral(const Axis& ax, const std::vector<double>& log_poly, double c) {
  const double shift = c >= 0.0 ? c * ax.hi : c * ax.lo;
  double sum = 0.0;
  for (std::size_t i = 0; i < ax.nu.size(); ++i) sum += std::exp(ax.log_w[i] + log_poly[i] + c * ax.nu[i] - shift);
  return shift + std::log(sum);
}

// log of the double integral (without prefactor) at a fixed order n on all
// three axes (nu_1, nu_2 and the rank-one variable z).
double log_expansion_at_order(const Expansion& e, const APoint& l, Multiplicity k, int n) {
  const double km1 = k - 1.0;
  const auto box_rule = cached_gauss_jacobi(n, km1, km1);
  const auto z_rule = cached_gauss_jacobi(n, km1, k.value());

  // W_k = [(l1-n1)(n1-l2)]^{k-1}[(l2-n2)(n2-l3)]^{k-1} (n1-l3)^{k-1} (l1-n2)^{k-1};
  // the bracketed pairs are the Jacobi weights of the two axes.
  const Axis ax1 = make_axis(*box_rule, l[1], l[0], [&](double nu) { return km1 * std::log(nu - l[2]); });
  const Axis ax2 = make_axis(*box_rule, l[2], l[1], [&](double nu) { return km1 * std::log(l[0] - nu); });

  auto log_factor = [&](const Axis& ax, LinearFactor f, LinearFactor m) {
    std::vector<double> out(ax.nu.size());
    for (std::size_t i = 0; i < ax.nu.size(); ++i) out[i] = std::log(f(l, ax.nu[i]) * m(l, ax.nu[i]));
    return out;
  };
  const auto lp1 = log_factor(ax1, e.p1, e.m1);
  const auto lp2 = log_factor(ax1, e.p2, e.m1);
  const auto lq1 = log_factor(ax2, e.q1, e.m2);
  const auto lq2 = log_factor(ax2, e.q2, e.m2);

  // For fixed z, R(+-a s) = C e^{+-z a n1} e^{-+z a n2}, so each term factors
  // into a product of two single-axis integrals.
  std::vector<double> terms;
  terms.reserve(2 * static_cast<std::size_t>(n));
  for (std::size_t m = 0; m < z_rule->nodes.size(); ++m) {
    const double z = z_rule->nodes[m];
    const double lwz = std::log(z_rule->weights[m]);
    const double c_plus = e.b + e.a * z;
    const double c_minus = e.b - e.a * z;
    terms.push_back(lwz + log_axis_integral(ax1, lp1, c_plus) + log_axis_integral(ax2, lq1, c_minus));
    terms.push_back(lwz + log_axis_integral(ax1, lp2, c_minus) + log_axis_integral(ax2, lq2, c_plus));
  }
  const double log_rank1_norm = std::lgamma(k + 0.5) - 0.5 * std::log(std::numbers::pi) - std::lgamma(k.value());
  return log_rank1_norm + log_sum_exp(terms);
}

KernelValue evaluate_expansion(const Expansion& e, const APoint& lambda, Multiplicity k, const KernelOptions& opt,
                               Formula which, int n0) {
  require_a2_multiplicity(k);
  require_interior_spectral(lambda, opt.wall_rel);
  const double log_pref = log_kernel_prefactor(lambda, k);
  auto log_at = [&](int n) { return log_pref + log_expansion_at_order(e, lambda, k, n); };

  KernelValue kv;
  kv.formula_used = which;
  if (opt.fixed_order) {
    const int n = *opt.fixed_order;
    if (n < 1 || n > kMaxNodes) throw InvalidArgument("fixed quadrature order must lie in [1, 512]");
    kv.log_value = log_at(n);
    kv.diag.nodes = n;
  } else {
    const QuadResult r = refine_log_until_converged(log_at, n0, opt.rel_tol);
    kv.log_value = r.value;
    kv.diag = r.diag;
  }
  if (!std::isfinite(kv.log_value)) throw DomainError("kernel integral evaluated to a non-finite value");
  kv.scaled = kv.log_value > kLogScaleThreshold;
  kv.value = kv.scaled ? std::numeric_limits<double>::infinity() : std::exp(kv.log_value);
  return kv;
}

}  // namespace

KernelValue ek_amri_alpha(const APoint& x, const APoint& lambda, Multiplicity k, const KernelOptions& opt) {
  return evaluate_expansion(alpha_expansion(x), lambda, k, opt, Formula::Alpha, kernel_initial_order(x, lambda));
}

KernelValue ek_amri_beta(const APoint& x, const APoint& lambda, Multiplicity k, const KernelOptions& opt) {
  return evaluate_expansion(beta_expansion(x), lambda, k, opt, Formula::Beta, kernel_initial_order(x, lambda));
}

KernelValue ek(const APoint& x, const APoint& lambda, Multiplicity k, const KernelOptions& opt, Formula formula) {
  require_a2_multiplicity(k);
  if (lambda.norm() == 0.0) {
    // E_k(X, 0) = 1 for every X.
    KernelValue one;
    one.formula_used = formula == Formula::Auto ? Formula::Alpha : formula;
    return one;
  }
  const auto perm = sorting_permutation(lambda);
  const APoint wl = permute(lambda, perm);
  const APoint wx = permute(x, perm);
  switch (formula) {
    case Formula::Alpha: return ek_amri_alpha(wx, wl, k, opt);
    case Formula::Beta: return ek_amri_beta(wx, wl, k, opt);
    case Formula::Auto:
      return wx.x1() >= wx.x2() ? ek_amri_alpha(wx, wl, k, opt) : ek_amri_beta(wx, wl, k, opt);
    case Formula::Both: {
      KernelValue a = ek_amri_alpha(wx, wl, k, opt);
      const KernelValue b = ek_amri_beta(wx, wl, k, opt);
      a.formula_used = Formula::Both;
      a.cross_delta = std::abs(std::expm1(b.log_value - a.log_value));
      a.diag.nodes = std::max(a.diag.nodes, b.diag.nodes);
      a.diag.delta = std::max(a.diag.delta, b.diag.delta);
      return a;
    }
  }
  return {};
}

}  // namespace dunkl
