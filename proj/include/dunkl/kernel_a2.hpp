#pragma once

// Dunkl kernel E_k(X, lambda) of the root system A2 through its positive
// double-integral representations over the interlacing box
//   lambda_2 <= nu_1 <= lambda_1,  lambda_3 <= nu_2 <= lambda_2.

#include <optional>

#include "dunkl/geometry.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/rank1.hpp"

namespace dunkl {

enum class Formula { Alpha, Beta, Both, Auto };

std::string_view formula_name(Formula f);
Formula parse_formula(std::string_view name);

struct KernelValue {
  double log_value = 0.0;
  bool scaled = false;  // value not representable; use log_value
  double value = 1.0;
  Formula formula_used = Formula::Alpha;
  QuadDiagnostics diag;
  // Relative difference between the two formulas when formula_used == Both.
  double cross_delta = 0.0;
};

struct KernelOptions {
  double rel_tol = kDefaultRelTol;
  // Relative wall tolerance: lambda is rejected when min(alpha, beta) <= wall_rel * |lambda|.
  double wall_rel = 1e-6;
  // When set, evaluate at exactly this order on every axis (no refinement).
  // Used where the same rule must be applied at nearby points.
  std::optional<int> fixed_order;
};

// ((l1-n1)(l1-n2)(n1-l2)(l2-n2)(n1-l3)(n2-l3))^{k-1}. Throws DomainError
// naming the violated inequality outside the interlacing box.
double wk_weight(const APoint& lambda, double nu1, double nu2, Multiplicity k);

// Expansion in which the rank-one kernel carries the alpha (resp. beta) root of X.
// lambda must be interior to C+; throws DegenerateSpectral otherwise.
KernelValue ek_amri_alpha(const APoint& x, const APoint& lambda, Multiplicity k, const KernelOptions& opt = {});
KernelValue ek_amri_beta(const APoint& x, const APoint& lambda, Multiplicity k, const KernelOptions& opt = {});

// General placement: maps lambda to the closed positive chamber by a Weyl
// element w, applies the same w to X and evaluates there.
KernelValue ek(const APoint& x, const APoint& lambda, Multiplicity k, const KernelOptions& opt = {},
               Formula formula = Formula::Auto);

// log of 3 Gamma(3k) / (V(lambda)^{2k} Gamma(k)^3).
double log_kernel_prefactor(const APoint& lambda, Multiplicity k);

// Starting order for the kernel integrals at (X, lambda).
int kernel_initial_order(const APoint& x, const APoint& lambda);

// Throws DegenerateSpectral when lambda (assumed sorted) is within
// wall_rel * |lambda| of a wall.
void require_interior_spectral(const APoint& lambda, double wall_rel);

}  // namespace dunkl
