#pragma once

// Dunkl heat kernel on A2 (intrinsic dimension d = 2, gamma_sum = 3k):
//   p_t(X, Y) = t^{-1-3k} e^{-(|X|^2 + |Y|^2)/4t} E_k(X, Y/2t) / (2^{3k+1} c_k).

#include "dunkl/estimates.hpp"
#include "dunkl/kernel_a2.hpp"

namespace dunkl {

struct HeatParams {
  double t;
  double c_k;
  double gamma_sum;  // 3k
};

// c_k = \int_a e^{-|x|^2/2} prod_{rho>0} |<rho, x>|^{2k} dx, cached per k.
double compute_ck(Multiplicity k, double rel_tol = 1e-13);

// Macdonald-Mehta closed form 2 pi Gamma(1+2k) Gamma(1+3k) / Gamma(1+k)^2
// for the same integral; kept separate from compute_ck as a cross-check.
double mehta_ck(double k);

HeatParams heat_params(double t, Multiplicity k);

struct HeatValue {
  double log_value = 0.0;
  double value = 0.0;
  KernelValue kernel;  // E_k(X, Y/2t)
};

// Throws InvalidArgument for t <= 0; kernel errors propagate.
HeatValue heat_kernel(double t, const APoint& x, const APoint& y, Multiplicity k, const KernelOptions& opt = {});

// Re-composes the heat kernel from an already evaluated log E_k(X, Y/2t).
double log_heat_from_kernel(double t, const APoint& x, const APoint& y, Multiplicity k, double log_ek);

enum class HeatExponent {
  Derived,  // t^{-1-3k+k_alpha+k_beta+k_gamma}
  Printed,  // t^{-4+k_alpha+k_beta+k_gamma}; agrees with Derived only at k = 1
};

struct HeatEstimate {
  double log_value = 0.0;
  double value = 0.0;
  EstimateBranch branch;
};

// X in the closure of C+, Y arbitrary; exponents follow the chamber of Y with
// X playing the spectral role. The constant in front is 1/(2^{3k+1} c_k).
HeatEstimate heat_estimate(double t, const APoint& x, const APoint& y, Multiplicity k,
                           HeatExponent variant = HeatExponent::Derived);

}  // namespace dunkl
