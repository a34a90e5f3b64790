#pragma once

// Piecewise sharp envelope of E_k(X, lambda) over the six Weyl chambers.

#include <string>

#include "dunkl/geometry.hpp"
#include "dunkl/rank1.hpp"

namespace dunkl {

// Exponents (k_alpha, k_beta, k_gamma) of the rational factors; each is k or k + 1.
struct ExponentTriple {
  double k_alpha = 0.0;
  double k_beta = 0.0;
  double k_gamma = 0.0;

  double sum() const { return k_alpha + k_beta + k_gamma; }
  // Compact label relative to k, e.g. "(k+1,k,k)".
  std::string label(double k) const;
  bool operator==(const ExponentTriple&) const = default;
};

// Which printed branch of the chamber's estimate was selected. Chambers with
// a single formula always report branch 0; C231 and C312 use 0, 1, 2 in
// listing order.
struct EstimateBranch {
  Chamber chamber = Chamber::C123;
  int branch = 0;
  ExponentTriple exponents;
};

// Requires lambda interior to C+ (DegenerateSpectral otherwise).
ExponentTriple exponent_triple(const APoint& x, const APoint& lambda, Multiplicity k);
EstimateBranch select_branch(const APoint& x, const APoint& lambda, Multiplicity k);

// Same selection with lambda allowed on the closure of C+; used by the heat
// estimate, where the roles of the arguments are exchanged.
EstimateBranch select_branch_closed(const APoint& x, const APoint& lambda, Multiplicity k);

// log of e^{<lambda, X+>} / prod_rho (1 + rho(lambda) rho(X+))^{k_rho}.
double log_envelope(const APoint& x, const APoint& lambda, const ExponentTriple& e);

double log_sharp_estimate(const APoint& x, const APoint& lambda, Multiplicity k);
double sharp_estimate(const APoint& x, const APoint& lambda, Multiplicity k);

// Estimate attached to a shortest realization S of the chamber of X: the
// exponent of root rho is k + 1 when s_rho occurs in S and k otherwise.
// Throws InvalidArgument if `word` is not in shortest_realizations(chamber_of(X)).
double log_conjecture_estimate(const APoint& x, const APoint& lambda, Multiplicity k, const Word& word);
double conjecture_estimate(const APoint& x, const APoint& lambda, Multiplicity k, const Word& word);

}  // namespace dunkl
