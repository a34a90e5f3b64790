#include "dunkl/estimates.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/kernel_a2.hpp"

namespace dunkl {

std::string ExponentTriple::label(double k) const {
  auto one = [k](double e) { return e == k ? std::string("k") : std::string("k+1"); };
  return "(" + one(k_alpha) + "," + one(k_beta) + "," + one(k_gamma) + ")";
}

EstimateBranch select_branch_closed(const APoint& x, const APoint& lambda, Multiplicity k) {
  const double kk = k.value();
  const double k1 = kk + 1.0;
  EstimateBranch b;
  b.chamber = chamber_of(x);
  const RootValues rl = root_values(lambda);
  const RootValues rx = root_values(project_plus(x));
  const double a_prod = rl.alpha * rx.alpha;
  const double b_prod = rl.beta * rx.beta;
  switch (b.chamber) {
    case Chamber::C123: b.exponents = {kk, kk, kk}; break;
    case Chamber::C213: b.exponents = {k1, kk, kk}; break;
    case Chamber::C132: b.exponents = {kk, k1, kk}; break;
    case Chamber::C321: b.exponents = {kk, kk, k1}; break;
    case Chamber::C231:
      if (rl.alpha <= rl.beta) {
        b.branch = 0;
        b.exponents = {k1, k1, kk};
      } else if (a_prod >= b_prod) {
        b.branch = 1;
        b.exponents = {kk, k1, k1};
      } else {
        b.branch = 2;
        b.exponents = {k1, kk, k1};
      }
      break;
    case Chamber::C312:
      if (rl.beta <= rl.alpha) {
        b.branch = 0;
        b.exponents = {k1, k1, kk};
      } else if (a_prod >= b_prod) {
        b.branch = 1;
        b.exponents = {kk, k1, k1};
      } else {
        b.branch = 2;
        b.exponents = {k1, kk, k1};
      }
      break;
  }
  return b;
}

EstimateBranch select_branch(const APoint& x, const APoint& lambda, Multiplicity k) {
  if (chamber_of(lambda) != Chamber::C123) throw DegenerateSpectral("estimate requires lambda in the positive chamber");
  require_interior_spectral(lambda, 0.0);
  return select_branch_closed(x, lambda, k);
}

ExponentTriple exponent_triple(const APoint& x, const APoint& lambda, Multiplicity k) {
  return select_branch(x, lambda, k).exponents;
}

double log_envelope(const APoint& x, const APoint& lambda, const ExponentTriple& e) {
  const APoint xp = project_plus(x);
  const RootValues rl = root_values(lambda);
  const RootValues rx = root_values(xp);
  return lambda.dot(xp) - e.k_alpha * std::log1p(rl.alpha * rx.alpha) - e.k_beta * std::log1p(rl.beta * rx.beta) -
         e.k_gamma * std::log1p(rl.gamma * rx.gamma);
}

double log_sharp_estimate(const APoint& x, const APoint& lambda, Multiplicity k) {
  return log_envelope(x, lambda, exponent_triple(x, lambda, k));
}

double sharp_estimate(const APoint& x, const APoint& lambda, Multiplicity k) {
  return std::exp(log_sharp_estimate(x, lambda, k));
}

double log_conjecture_estimate(const APoint& x, const APoint& lambda, Multiplicity k, const Word& word) {
  const Chamber c = chamber_of(x);
  const auto& realizations = shortest_realizations(c);
  if (std::find(realizations.begin(), realizations.end(), word) == realizations.end()) {
    throw InvalidArgument("word " + word_to_string(word) + " is not a shortest realization of chamber " +
                          std::string(chamber_name(c)));
  }
  if (chamber_of(lambda) != Chamber::C123) throw DegenerateSpectral("estimate requires lambda in the positive chamber");
  auto p = [&](Root r) {
    return std::find(word.begin(), word.end(), r) != word.end() ? k + 1.0 : k.value();
  };
  return log_envelope(x, lambda, {p(Root::Alpha), p(Root::Beta), p(Root::Gamma)});
}

double conjecture_estimate(const APoint& x, const APoint& lambda, Multiplicity k, const Word& word) {
  return std::exp(log_conjecture_estimate(x, lambda, k, word));
}

}  // namespace dunkl
