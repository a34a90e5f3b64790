#pragma once

// Rank-one (A1) Dunkl kernel and the normalized modified Bessel function.

#include <cmath>

#include "dunkl/quadrature.hpp"

namespace dunkl {

// Multiplicity parameter k > 0 (a single value for all roots of A2).
class Multiplicity {
 public:
  static constexpr double kMax = 8.0;

  // Throws InvalidArgument unless k > 0 and finite.
  explicit Multiplicity(double k);
  double value() const { return k_; }
  operator double() const { return k_; }

 private:
  double k_;
};

// Throws InvalidArgument unless k lies in (0, 8], the range accepted by the A2 kernel.
void require_a2_multiplicity(double k);

// Beyond this |log value| results are reported in log form only.
inline constexpr double kLogScaleThreshold = 700.0;

// A positive quantity carried in log space. `scaled` is set when the plain
// value would exceed the double range comfortably (log_value > 700); `value`
// is then left at +inf.
struct ScaledValue {
  double log_value = 0.0;
  bool scaled = false;
  double value = 1.0;
  QuadDiagnostics diag;

  static ScaledValue from_log(double log_value, QuadDiagnostics diag = {});
};

// Normalized modified Bessel function
//   J_a(x) = Gamma(a+1) / (sqrt(pi) Gamma(a+1/2)) \int_{-1}^{1} e^{xz} (1-z^2)^{a-1/2} dz,
// so that J_a(0) = 1. Defined for a > -1/2.
double bessel_norm(double a, double x, double rel_tol = 1e-12);
ScaledValue bessel_norm_scaled(double a, double x, double rel_tol = 1e-12);

enum class Rank1Method { Quadrature, Bessel };

// E_k^{rk1}(x, v). Quadrature integrates e^{zxv} against (1-z)^{k-1}(1+z)^k;
// Bessel combines J_{k-1/2}(xv) + xv/(2k+1) J_{k+1/2}(xv).
ScaledValue rank1_kernel_scaled(double x, double v, Multiplicity k, Rank1Method method = Rank1Method::Quadrature,
                                double rel_tol = 1e-12);
double rank1_kernel(double x, double v, Multiplicity k, Rank1Method method = Rank1Method::Quadrature,
                    double rel_tol = 1e-12);

// e^{|xv|} / (1 + |xv|)^{k+p}, p = 0 if xv >= 0 and p = 1 otherwise.
double rank1_estimate(double x, double v, Multiplicity k);
double rank1_log_estimate(double x, double v, Multiplicity k);

}  // namespace dunkl
