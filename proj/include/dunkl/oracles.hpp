#pragma once

// Brute-force reference evaluations, kept apart from the production paths.

#include "dunkl/geometry.hpp"
#include "dunkl/rank1.hpp"

namespace dunkl {

struct OracleValue {
  double log_value = 0.0;
  int nodes = 0;  // final order per axis
  double delta = 0.0;
};

// Plain tensor quadrature of the alpha-expansion double integral over the
// interlacing box, with the rank-one kernel taken from the Bessel route. The
// starting order is four times the production starting order (at most 256)
// and is doubled until rel_tol is met.
OracleValue oracle_kernel(const APoint& x, const APoint& lambda, Multiplicity k, double rel_tol = 1e-12);

// Power series of j_{k-1/2}(iy) + y/(2k+1) j_{k+1/2}(iy), y = xv, summed in
// long double. Accurate for |xv| up to about 40.
double oracle_rank1(double x, double v, Multiplicity k);

// c_k by tensor Gauss-Jacobi quadrature over one chamber in the skew
// coordinates X = s p + u q (p, q the unit wall rays), truncated at s, u <= 14.
OracleValue oracle_ck(Multiplicity k, double rel_tol = 1e-13);

}  // namespace dunkl
