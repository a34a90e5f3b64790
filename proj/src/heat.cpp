#include "dunkl/heat.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

// \int over one chamber (theta in [pi/6, pi/2] in an orthonormal frame of a)
// of |alpha beta gamma|^{2k} restricted to the unit circle. The factors
// vanishing at the walls are absorbed into Jacobi weights of exponent 2k.
double angular_integral(double k, double rel_tol) {
  constexpr double half_width = std::numbers::pi / 6.0;
  const double e = 2.0 * k;
  auto at_order = [&](int n) {
    const auto rule = cached_gauss_jacobi(n, e, e);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
      const double u = rule->nodes[i];
      const double d_lo = half_width * (1.0 + u);  // theta - pi/6
      const double d_hi = half_width * (1.0 - u);  // pi/2 - theta
      const double theta = std::numbers::pi / 6.0 + d_lo;
      // alpha beta gamma = 2 sqrt(2) cos(theta) sin(theta - pi/6) sin(theta + pi/6) on |x| = 1
      const double smooth = 2.0 * std::numbers::sqrt2 * (std::sin(d_hi) / d_hi) * (std::sin(d_lo) / d_lo) *
                            std::sin(theta + std::numbers::pi / 6.0);
      sum += rule->weights[i] * std::exp(e * std::log(smooth));
    }
    return sum * std::pow(half_width, 2.0 * e + 1.0);
  };
  return refine_until_converged(at_order, 32, rel_tol).value;
}

}  // namespace

double compute_ck(Multiplicity k, double rel_tol) {
  static std::mutex mu;
  static std::map<std::pair<double, double>, double> cache;
  const std::pair key{k.value(), rel_tol};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  // Six congruent chambers; radial part \int_0^inf r^{6k+1} e^{-r^2/2} dr = 2^{3k} Gamma(3k+1).
  const double radial = std::exp(3.0 * k * std::numbers::ln2 + std::lgamma(3.0 * k + 1.0));
  const double value = 6.0 * angular_integral(k, rel_tol) * radial;
  std::lock_guard lock(mu);
  cache.emplace(key, value);
  return value;
}

double mehta_ck(double k) {
  return 2.0 * std::numbers::pi *
         std::exp(std::lgamma(1.0 + 2.0 * k) + std::lgamma(1.0 + 3.0 * k) - 2.0 * std::lgamma(1.0 + k));
}

HeatParams heat_params(double t, Multiplicity k) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("heat kernel requires t > 0");
  require_a2_multiplicity(k);
  return {t, compute_ck(k), 3.0 * k};
}

namespace {

double log_normalization(const HeatParams& hp) {
  return -(hp.gamma_sum + 1.0) * std::numbers::ln2 - std::log(hp.c_k);
}

}  // namespace

double log_heat_from_kernel(double t, const APoint& x, const APoint& y, Multiplicity k, double log_ek) {
  const HeatParams hp = heat_params(t, k);
  return log_normalization(hp) - (1.0 + hp.gamma_sum) * std::log(t) - (x.dot(x) + y.dot(y)) / (4.0 * t) + log_ek;
}

HeatValue heat_kernel(double t, const APoint& x, const APoint& y, Multiplicity k, const KernelOptions& opt) {
  heat_params(t, k);
  HeatValue hv;
  hv.kernel = ek(x, y * (1.0 / (2.0 * t)), k, opt);
  hv.log_value = log_heat_from_kernel(t, x, y, k, hv.kernel.log_value);
  hv.value = std::exp(hv.log_value);
  return hv;
}

HeatEstimate heat_estimate(double t, const APoint& x, const APoint& y, Multiplicity k, HeatExponent variant) {
  const HeatParams hp = heat_params(t, k);
  if (chamber_of(x) != Chamber::C123) throw InvalidArgument("heat_estimate requires X in the closed positive chamber");
  HeatEstimate he;
  he.branch = select_branch_closed(y, x, k);
  const ExponentTriple& e = he.branch.exponents;
  const APoint yp = project_plus(y);
  const RootValues rx = root_values(x);
  const RootValues ry = root_values(yp);
  const double t_power = variant == HeatExponent::Derived ? -1.0 - hp.gamma_sum + e.sum() : -4.0 + e.sum();
  const APoint diff = x - yp;
  he.log_value = log_normalization(hp) + t_power * std::log(t) - diff.dot(diff) / (4.0 * t) -
                 e.k_alpha * std::log(t + 0.5 * rx.alpha * ry.alpha) -
                 e.k_beta * std::log(t + 0.5 * rx.beta * ry.beta) - e.k_gamma * std::log(t + 0.5 * rx.gamma * ry.gamma);
  he.value = std::exp(he.log_value);
  return he;
}

}  // namespace dunkl
