#include "dunkl/rank1.hpp"

#include <limits>
#include <numbers>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl {

Multiplicity::Multiplicity(double k) : k_(k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw InvalidArgument("multiplicity k must be a positive finite number, got " + std::to_string(k));
  }
}

void require_a2_multiplicity(double k) {
  if (!(k > 0.0 && k <= Multiplicity::kMax)) {
    throw InvalidArgument("multiplicity k must lie in (0, 8], got " + std::to_string(k));
  }
}

ScaledValue ScaledValue::from_log(double log_value, QuadDiagnostics diag) {
  ScaledValue s;
  s.log_value = log_value;
  s.scaled = log_value > kLogScaleThreshold;
  s.value = s.scaled ? std::numeric_limits<double>::infinity() : std::exp(log_value);
  s.diag = diag;
  return s;
}

namespace {

// log( \int_{-1}^{1} e^{y z} (1-z)^a (1+z)^b dz ), refined by node doubling.
// The exponential is damped by e^{-|y|} so no term exceeds the weight.
double log_jacobi_exponential(double y, double a, double b, double rel_tol, QuadDiagnostics* diag) {
  const double ay = std::abs(y);
  auto at_order = [&](int n) {
    const auto rule = cached_gauss_jacobi(n, a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) sum += rule->weights[i] * std::exp(y * rule->nodes[i] - ay);
    return sum;
  };
  // The damped integrand lives in a boundary layer of width ~1/|y|; Gauss
  // nodes resolve it once n^2 exceeds a multiple of |y|.
  const int n0 = initial_order(8.0 * std::sqrt(ay) + 16.0);
  QuadResult r = refine_until_converged(at_order, n0, rel_tol);
  if (diag) *diag = r.diag;
  return ay + std::log(r.value);
}

double log_bessel_norm_const(double a) {
  return std::lgamma(a + 1.0) - 0.5 * std::log(std::numbers::pi) - std::lgamma(a + 0.5);
}

}  // namespace

ScaledValue bessel_norm_scaled(double a, double x, double rel_tol) {
  if (!(a > -0.5)) throw InvalidArgument("bessel_norm: index must exceed -1/2");
  if (!std::isfinite(x)) throw InvalidArgument("bessel_norm: argument must be finite");
  if (x == 0.0) return ScaledValue::from_log(0.0);
  QuadDiagnostics diag;
  const double s = log_jacobi_exponential(x, a - 0.5, a - 0.5, rel_tol, &diag);
  return ScaledValue::from_log(log_bessel_norm_const(a) + s, diag);
}

double bessel_norm(double a, double x, double rel_tol) { return bessel_norm_scaled(a, x, rel_tol).value; }

ScaledValue rank1_kernel_scaled(double x, double v, Multiplicity k, Rank1Method method, double rel_tol) {
  if (!std::isfinite(x) || !std::isfinite(v)) throw InvalidArgument("rank1_kernel: arguments must be finite");
  const double y = x * v;
  if (y == 0.0) return ScaledValue::from_log(0.0);
  if (method == Rank1Method::Quadrature) {
    QuadDiagnostics diag;
    const double log_c = std::lgamma(k + 0.5) - 0.5 * std::log(std::numbers::pi) - std::lgamma(k.value());
    const double s = log_jacobi_exponential(y, k - 1.0, k.value(), rel_tol, &diag);
    return ScaledValue::from_log(log_c + s, diag);
  }
  const ScaledValue j_lo = bessel_norm_scaled(k - 0.5, y, rel_tol);
  const ScaledValue j_hi = bessel_norm_scaled(k + 0.5, y, rel_tol);
  // E = J_{k-1/2} (1 + y/(2k+1) J_{k+1/2}/J_{k-1/2}); the bracket is positive.
  const double ratio = std::exp(j_hi.log_value - j_lo.log_value);
  const double bracket = 1.0 + y / (2.0 * k + 1.0) * ratio;
  QuadDiagnostics diag = j_lo.diag;
  diag.nodes = std::max(j_lo.diag.nodes, j_hi.diag.nodes);
  diag.delta = std::max(j_lo.diag.delta, j_hi.diag.delta);
  return ScaledValue::from_log(j_lo.log_value + std::log(bracket), diag);
}

double rank1_kernel(double x, double v, Multiplicity k, Rank1Method method, double rel_tol) {
  return rank1_kernel_scaled(x, v, k, method, rel_tol).value;
}

double rank1_log_estimate(double x, double v, Multiplicity k) {
  const double y = x * v;
  const double p = y >= 0.0 ? 0.0 : 1.0;
  return std::abs(y) - (k + p) * std::log1p(std::abs(y));
}

double rank1_estimate(double x, double v, Multiplicity k) { return std::exp(rank1_log_estimate(x, v, k)); }

}  // namespace dunkl
