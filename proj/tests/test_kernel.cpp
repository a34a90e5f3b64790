#include <cmath>

#include "doctest.h"
#include "dunkl/errors.hpp"
#include "dunkl/kernel_a2.hpp"
#include "dunkl/validation.hpp"

using namespace dunkl;

namespace {

const APoint kL(2, 1, -3);

}  // namespace

TEST_SUITE("kernel_a2") {
  TEST_CASE("weight") {
    CHECK(wk_weight(APoint(1, 0, -1), 0.5, -0.5, Multiplicity(1.0)) == 1.0);
    CHECK(wk_weight(APoint(1, 0, -1), 0.5, -0.5, Multiplicity(2.0)) == doctest::Approx(0.140625).epsilon(1e-15));
    CHECK(wk_weight(APoint(1, 0, -1), 1.0, -0.5, Multiplicity(2.0)) == 0.0);
    CHECK_THROWS_AS(wk_weight(APoint(1, 0, -1), 1.5, -0.5, Multiplicity(2.0)), DomainError);
    CHECK_THROWS_AS(wk_weight(APoint(1, 0, -1), 0.5, 0.5, Multiplicity(2.0)), DomainError);
  }

  TEST_CASE("normalization at X = 0") {
    for (double k : {0.3, 1.0, 2.5}) {
      CHECK(ek_amri_alpha(APoint(0, 0, 0), kL, Multiplicity(k)).value == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(ek_amri_beta(APoint(0, 0, 0), kL, Multiplicity(k)).value == doctest::Approx(1.0).epsilon(1e-9));
      for (Chamber c : kAllChambers)
        CHECK(ek(APoint(0, 0, 0), place_in_chamber(kL, c), Multiplicity(k)).value ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(ek(APoint(1, 0, -1), APoint(0, 0, 0), Multiplicity(1.0)).value == 1.0);
  }

  TEST_CASE("reference values") {
    // Independent tensor-quadrature oracle at four times the production order.
    struct Case {
      APoint x, l;
      double k, value;
    };
    const Case cases[] = {
        {APoint(1, 0, -1), kL, 1.0, 10.866562647484663},
        {APoint(1, 0, -1), kL, 0.5, 25.42797188598767},
        {APoint(-1, 0, 1), kL, 1.0, 1.4750179304824884},
        {APoint(0.3, 0.8, -1.1), kL, 2.0, 4.6348696380235461},
        {APoint(2, -0.5, -1.5), APoint(1.5, 0.3, -1.8), 1.5, 8.661587370302712},
        {APoint(3, 1, -4), APoint(4, -1, -3), 1.0, 18931333.431324519},
        {APoint(-2, 3.5, -1.5), APoint(2.5, -3, 0.5), 0.3, 1847.5528029043703},
    };
    KernelOptions opt;
    opt.rel_tol = 1e-11;
    for (const Case& c : cases) CHECK(ek(c.x, c.l, Multiplicity(c.k), opt).value == doctest::Approx(c.value).epsilon(1e-9));
    const KernelValue b = ek(APoint(1, 0, -1), kL, Multiplicity(0.5), {}, Formula::Both);
    CHECK(b.formula_used == Formula::Both);
    CHECK(b.cross_delta <= 1e-8);
  }

  TEST_CASE("degenerate spectral parameter") {
    CHECK_THROWS_AS(ek_amri_alpha(APoint(1, 0, -1), APoint(1, 1, -2), Multiplicity(1.0)), DegenerateSpectral);
    CHECK_THROWS_AS(ek_amri_beta(APoint(1, 0, -1), APoint(2, -1, -1), Multiplicity(1.0)), DegenerateSpectral);
    CHECK_THROWS_AS(ek(APoint(1, 0, -1), APoint(1, 1, -2), Multiplicity(1.0)), DegenerateSpectral);
    CHECK_THROWS_AS(ek(APoint(1, 0, -1), kL, Multiplicity(9.0)), InvalidArgument);
  }

  TEST_CASE("fixed order evaluation") {
    KernelOptions opt;
    opt.fixed_order = 64;
    const KernelValue v = ek(APoint(1, 0, -1), kL, Multiplicity(1.0), opt);
    CHECK(v.diag.nodes == 64);
    CHECK(v.value == doctest::Approx(10.866562647484663).epsilon(1e-9));
  }

  TEST_CASE("large arguments switch to log form") {
    const KernelValue v = ek(APoint(40, 0, -40), APoint(30, 0, -30.0) + APoint(0, 1, -1), Multiplicity(1.0));
    CHECK(v.scaled);
    CHECK(v.log_value > 700.0);
  }

  TEST_CASE("property: symmetry, equivariance and formula agreement") {
    const double tol = 10.0 * kDefaultRelTol;
    const double f[] = {0.15, 0.4, 0.6, 0.85};
    for (double k : {0.5, 1.0, 2.0}) {
      for (int i = 0; i < 4; ++i) {
        const APoint xp = chamber_point(0.5 + 0.7 * i, f[i]);
        const APoint l = chamber_point(1.0 + 0.5 * i, f[3 - i]);
        const Multiplicity m(k);
        CHECK(std::abs(std::expm1(ek(xp, l, m).log_value - ek(l, xp, m).log_value)) <= tol);
        for (Chamber c : kAllChambers) {
          const APoint x = place_in_chamber(xp, c);
          const double base = ek(x, l, m).log_value;
          CHECK(ek(x, l, m, {}, Formula::Both).cross_delta <= tol);
          for (Root r : {Root::Alpha, Root::Beta, Root::Gamma})
            CHECK(std::abs(std::expm1(ek(reflect(x, r), reflect(l, r), m).log_value - base)) <= tol);
        }
      }
    }
  }

  TEST_CASE("property: positivity and growth bound") {
    for (Chamber c : kAllChambers) {
      const APoint x = place_in_chamber(chamber_point(2.0, 0.3), c);
      const APoint l = chamber_point(1.5, 0.7);
      const KernelValue v = ek(x, l, Multiplicity(1.2));
      CHECK(v.value > 0.0);
      CHECK(v.log_value <= project_plus(x).dot(l) + 1e-9);
    }
  }
}
