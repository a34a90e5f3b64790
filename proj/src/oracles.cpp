#include "dunkl/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dunkl/errors.hpp"
#include "dunkl/kernel_a2.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

OracleValue oracle_kernel(const APoint& x, const APoint& lambda, Multiplicity k, double rel_tol) {
  require_a2_multiplicity(k);
  const auto perm = sorting_permutation(lambda);
  const APoint l = permute(lambda, perm);
  const APoint wx = permute(x, perm);
  require_interior_spectral(l, 1e-6);
  const double l1 = l[0], l2 = l[1], l3 = l[2];
  const double a = (wx[0] - wx[1]) / 2.0;
  const double b = (wx[0] + wx[1] - 2.0 * wx[2]) / 2.0;
  const double km1 = k - 1.0;
  const double shift = std::max(b * (l1 + l2), b * (l2 + l3)) + std::abs(a) * (l1 - l3);

  auto f = [&](double nu1, double nu2) {
    const double s = nu1 - nu2;
    const double lp = rank1_kernel_scaled(a, s, k, Rank1Method::Bessel, 1e-13).log_value;
    const double lm = rank1_kernel_scaled(-a, s, k, Rank1Method::Bessel, 1e-13).log_value;
    const double base = b * (nu1 + nu2) - shift;
    const double bracket =
        (nu1 - l2) * (l1 - nu2) * std::exp(lp + base) + (l1 - nu1) * (l2 - nu2) * std::exp(lm + base);
    double residual = (nu1 - l3) * (nu2 - l3);
    if (k != 1.0) residual *= std::pow((nu1 - l3) * (l1 - nu2), km1);
    return bracket * residual;
  };

  const int n0 = std::min(256, 4 * kernel_initial_order(wx, l));
  const QuadRule axis = gauss_jacobi(n0, km1, km1);
  const QuadResult r = adaptive_tensor_integrate(f, {l2, l1, l3, l2}, axis, axis, rel_tol);
  if (!(r.value > 0.0)) throw DomainError("oracle_kernel: non-positive integral");
  return {log_kernel_prefactor(l, k) + shift + std::log(r.value), r.diag.nodes, r.diag.delta};
}

double oracle_rank1(double x, double v, Multiplicity k) {
  const long double y = static_cast<long double>(x) * v;
  const long double kk = k.value();
  // j_a(iy) = sum_m Gamma(a+1) (y/2)^{2m} / (m! Gamma(m+a+1))
  auto j = [&](long double a) {
    long double term = 1.0L, sum = 1.0L;
    const long double q = y * y / 4.0L;
    for (int m = 1; m < 2000; ++m) {
      term *= q / (m * (m + a));
      sum += term;
      if (term < 1e-21L * sum) break;
    }
    return sum;
  };
  return static_cast<double>(j(kk - 0.5L) + y / (2.0L * kk + 1.0L) * j(kk + 0.5L));
}

OracleValue oracle_ck(Multiplicity k, double rel_tol) {
  require_a2_multiplicity(k);
  constexpr double cutoff = 14.0;
  // Unit rays p = (2,-1,-1)/sqrt6 and q = (1,1,-2)/sqrt6: alpha(p) = beta(q) = 3/sqrt6,
  // beta(p) = alpha(q) = 0 and <p, q> = 1/2.
  const double c = 3.0 / std::sqrt(6.0);
  const double e = 2.0 * k;
  auto f = [&](double s, double u) {
    const double r2 = s * s + u * u + s * u;
    double w = std::exp(-0.5 * r2);
    w *= std::pow(c * c, e);
    return w * std::pow(c * (s + u), e);
  };
  // (s - 0)^{2k} and (u - 0)^{2k} are carried by the Jacobi weights.
  const QuadRule axis = gauss_jacobi(64, 0.0, e);
  const QuadResult r = adaptive_tensor_integrate(f, {0.0, cutoff, 0.0, cutoff}, axis, axis, rel_tol);
  const double jacobian = std::sin(std::numbers::pi / 3.0);
  return {std::log(6.0 * jacobian * r.value), r.diag.nodes, r.diag.delta};
}

}  // namespace dunkl
