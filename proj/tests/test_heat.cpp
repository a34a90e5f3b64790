#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dunkl/errors.hpp"
#include "dunkl/heat.hpp"
#include "dunkl/oracles.hpp"
#include "dunkl/validation.hpp"

using namespace dunkl;

TEST_SUITE("heat") {
  TEST_CASE("normalizing constant") {
    CHECK(compute_ck(Multiplicity(1e-8)) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-7));
    CHECK(compute_ck(Multiplicity(0.5)) == doctest::Approx(10.634723105433089).epsilon(1e-12));
    CHECK(compute_ck(Multiplicity(1.0)) == doctest::Approx(75.398223686154992).epsilon(1e-12));
    CHECK(compute_ck(Multiplicity(2.0)) == doctest::Approx(27143.360527015826).epsilon(1e-12));
    for (double k : {0.3, 0.5, 1.0, 1.7, 2.0, 4.0})
      CHECK(compute_ck(Multiplicity(k)) == doctest::Approx(mehta_ck(k)).epsilon(1e-12));
    CHECK(oracle_ck(Multiplicity(1.0)).log_value == doctest::Approx(std::log(75.398223686154992)).epsilon(1e-12));
    double prev = 0.0;
    for (double k = 0.25; k <= 3.0; k += 0.25) {
      CHECK(compute_ck(Multiplicity(k)) > prev);
      prev = compute_ck(Multiplicity(k));
    }
  }

  TEST_CASE("Y = 0 closed form and argument checks") {
    const double t = 0.7, k = 1.5;
    const APoint x(0.4, 0.3, -0.7);
    const double expect = std::pow(t, -1 - 3 * k) * std::exp(-x.dot(x) / (4 * t)) /
                          (std::pow(2.0, 3 * k + 1) * compute_ck(Multiplicity(k)));
    CHECK(heat_kernel(t, x, APoint(0, 0, 0), Multiplicity(k)).value == doctest::Approx(expect).epsilon(1e-13));
    CHECK_THROWS_AS(heat_kernel(0.0, x, x, Multiplicity(1.0)), InvalidArgument);
    CHECK_THROWS_AS(heat_kernel(-1.0, x, x, Multiplicity(1.0)), InvalidArgument);
    CHECK_THROWS_AS(heat_estimate(1.0, APoint(0, 1, -1), x, Multiplicity(1.0)), InvalidArgument);
  }

  TEST_CASE("property: composition and symmetry") {
    const double f[] = {0.2, 0.5, 0.8};
    for (int i = 0; i < 6; ++i) {
      const double t = 0.5 + 0.3 * i;
      const APoint x = chamber_point(0.4 + 0.3 * i, f[i % 3]);
      const APoint y = place_in_chamber(chamber_point(1.5 - 0.2 * i, f[(i + 1) % 3]), kAllChambers[static_cast<std::size_t>(i)]);
      const Multiplicity k(1.0);
      const HeatValue h = heat_kernel(t, x, y, k);
      CHECK(h.log_value == doctest::Approx(log_heat_from_kernel(t, x, y, k, h.kernel.log_value)).epsilon(1e-12));
      CHECK(std::abs(std::expm1(h.log_value - heat_kernel(t, y, x, k).log_value)) <= 1e-7);
    }
  }

  TEST_CASE("estimate exponents and variants") {
    const APoint x = chamber_point(1.0, 0.4);
    const Multiplicity k(1.5);
    const HeatEstimate id = heat_estimate(1.0, x, x, k);
    CHECK(id.branch.chamber == Chamber::C123);
    CHECK(id.branch.exponents == ExponentTriple{1.5, 1.5, 1.5});
    const HeatEstimate sa = heat_estimate(1.0, x, reflect(x, Root::Alpha), k);
    CHECK(sa.branch.chamber == Chamber::C213);
    CHECK(sa.branch.exponents == ExponentTriple{2.5, 1.5, 1.5});
    // The printed time exponent exceeds the derived one by 3k - 3.
    const double t = 3.0;
    CHECK(heat_estimate(t, x, x, k, HeatExponent::Printed).log_value -
              heat_estimate(t, x, x, k, HeatExponent::Derived).log_value ==
          doctest::Approx((4.5 - 3.0) * std::log(t)).epsilon(1e-12));
    CHECK(heat_estimate(t, x, x, Multiplicity(1.0), HeatExponent::Printed).log_value ==
          doctest::Approx(heat_estimate(t, x, x, Multiplicity(1.0)).log_value).epsilon(1e-15));
  }

  TEST_CASE("estimate decays like t^{-1-3k}") {
    const APoint x = chamber_point(1.0, 0.4);
    for (double kv : {0.5, 1.0, 2.0}) {
      const Multiplicity k(kv);
      auto scaled = [&](double t) { return std::pow(t, 1.0 + 3.0 * kv) * heat_estimate(t, x, x, k).value; };
      const double limit = 1.0 / (std::pow(2.0, 3.0 * kv + 1.0) * compute_ck(k));
      CHECK(std::abs(scaled(1e4) / limit - 1.0) < std::abs(scaled(1e3) / limit - 1.0));
      CHECK(std::abs(scaled(1e3) / limit - 1.0) < std::abs(scaled(1e2) / limit - 1.0));
      CHECK(scaled(1e4) == doctest::Approx(limit).epsilon(1e-3));
    }
  }
}
