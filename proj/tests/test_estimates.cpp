#include <cmath>

#include "doctest.h"
#include "dunkl/errors.hpp"
#include "dunkl/estimates.hpp"
#include "dunkl/validation.hpp"

using namespace dunkl;

TEST_SUITE("estimates") {
  TEST_CASE("exponent triples") {
    const Multiplicity k(0.7);
    const double a = 0.7, b = 1.7;
    const APoint l(2, 1, -3);
    CHECK(exponent_triple(APoint(1, 0, -1), l, k) == ExponentTriple{a, a, a});
    CHECK(exponent_triple(APoint(0, 1, -1), l, k) == ExponentTriple{b, a, a});
    CHECK(exponent_triple(APoint(1, -1, 0), l, k) == ExponentTriple{a, b, a});
    CHECK(exponent_triple(APoint(-1, 0, 1), l, k) == ExponentTriple{a, a, b});
    // C231 with alpha_l <= beta_l.
    CHECK(exponent_triple(APoint(-1.2, 2, -0.8), APoint(3, 1, -4), k) == ExponentTriple{b, b, a});
    CHECK(ExponentTriple{b, a, b}.label(0.7) == "(k+1,k,k+1)");
    CHECK_THROWS_AS(exponent_triple(APoint(1, 0, -1), APoint(1, 1, -2), k), DegenerateSpectral);
  }

  TEST_CASE("branch selection in C231 and C312") {
    const Multiplicity k(1.0);
    // alpha_l > beta_l, then alpha_l alpha_X+ against beta_l beta_X+.
    const APoint l(4, 1, -5);  // alpha 3, beta 6: swap to get alpha > beta
    const APoint lb(5, -1, -4);  // alpha 6, beta 3
    const APoint x231 = place_in_chamber(chamber_point(1.0, 0.5), Chamber::C231);
    CHECK(select_branch(x231, l, k).branch == 0);
    CHECK(select_branch(x231, lb, k).branch != 0);
    const APoint x312 = place_in_chamber(chamber_point(1.0, 0.5), Chamber::C312);
    CHECK(select_branch(x312, lb, k).branch == 0);
    CHECK(select_branch(x312, l, k).branch != 0);
    // Tie alpha_l = beta_l picks the first listed branch.
    CHECK(select_branch(x231, APoint(1, 0, -1), k).branch == 0);
    CHECK(select_branch(x312, APoint(1, 0, -1), k).branch == 0);
  }

  TEST_CASE("sharp estimate examples") {
    for (double kv : {0.5, 1.0, 2.0}) {
      const double expect = std::exp(2.0) / (std::pow(2.0, kv) * std::pow(2.0, kv) * std::pow(5.0, kv));
      CHECK(sharp_estimate(APoint(1, 0, -1), APoint(1, 0, -1), Multiplicity(kv)) ==
            doctest::Approx(expect).epsilon(1e-14));
      CHECK(sharp_estimate(APoint(0, 0, 0), APoint(2, 1, -3), Multiplicity(kv)) == 1.0);
    }
    CHECK(sharp_estimate(APoint(0, 1, -1), APoint(2, 1, -3), Multiplicity(1.0)) ==
          doctest::Approx(std::exp(5.0) / 220.0).epsilon(1e-14));
  }

  TEST_CASE("conjecture estimates") {
    const Multiplicity k(1.3);
    const APoint l(2, 1, -3);
    const APoint xp = chamber_point(1.5, 0.35);
    CHECK(log_conjecture_estimate(xp, l, k, {}) == doctest::Approx(log_sharp_estimate(xp, l, k)).epsilon(1e-15));
    const APoint xb = reflect(xp, Root::Beta);
    const RootValues rl = root_values(l), rx = root_values(xp);
    const double expect = xp.dot(l) - 1.3 * std::log1p(rl.alpha * rx.alpha) - 2.3 * std::log1p(rl.beta * rx.beta) -
                          1.3 * std::log1p(rl.gamma * rx.gamma);
    CHECK(log_conjecture_estimate(xb, l, k, {Root::Beta}) == doctest::Approx(expect).epsilon(1e-14));
    CHECK_THROWS_AS(log_conjecture_estimate(xb, l, k, {Root::Alpha}), InvalidArgument);
    // In C231 the sharp estimate is one of the three word estimates.
    for (double f : {0.2, 0.5, 0.8}) {
      for (const APoint& lam : {APoint(4, 1, -5), APoint(5, -1, -4)}) {
        const APoint x = place_in_chamber(chamber_point(2.0, f), Chamber::C231);
        const double s = log_sharp_estimate(x, lam, k);
        int hits = 0;
        for (const Word& w : shortest_realizations(Chamber::C231))
          if (std::abs(log_conjecture_estimate(x, lam, k, w) - s) < 1e-13) ++hits;
        CHECK(hits >= 1);
      }
    }
  }

  TEST_CASE("property: adjacent branches agree within a factor 8 on the switching sets") {
    const Multiplicity k(1.0);
    const ExponentTriple b0{2, 2, 1}, b1{1, 2, 2}, b2{2, 1, 2};
    for (int i = 1; i <= 30; ++i) {
      const double r = 0.3 * i;
      const APoint x = place_in_chamber(chamber_point(r, 0.03 * i), Chamber::C312);
      const RootValues rx = root_values(project_plus(x));
      const APoint ls = chamber_point(0.2 * i, 0.5);
      CHECK(std::abs(log_envelope(x, ls, b0) - log_envelope(x, ls, rx.alpha >= rx.beta ? b1 : b2)) <= std::log(8.0));
      const double g = rx.beta / rx.alpha;
      const APoint lb = APoint(2 * g + 1, 1 - g, -g - 2) * (0.1 * i);
      CHECK(std::abs(log_envelope(x, lb, b1) - log_envelope(x, lb, b2)) <= std::log(8.0));
    }
  }
}
