#include <cmath>

#include "doctest.h"
#include "dunkl/errors.hpp"
#include "dunkl/oracles.hpp"
#include "dunkl/rank1.hpp"

using namespace dunkl;

TEST_SUITE("rank1") {
  TEST_CASE("normalized Bessel function") {
    for (double a : {0.0, 0.5, 1.3}) CHECK(bessel_norm(a, 0.0) == 1.0);
    CHECK(bessel_norm(0.5, 2.0) == doctest::Approx(std::sinh(2.0) / 2.0).epsilon(1e-13));
    CHECK(bessel_norm(0.2, -3.5) == doctest::Approx(bessel_norm(0.2, 3.5)).epsilon(1e-13));
    CHECK_THROWS_AS(bessel_norm(-0.5, 1.0), InvalidArgument);
    const ScaledValue big = bessel_norm_scaled(1.0, 2000.0);
    CHECK(big.scaled);
    CHECK(std::isinf(big.value));
    CHECK(big.log_value == doctest::Approx(2000.0 - 1.5 * std::log(2000.0)).epsilon(1e-3));
  }

  TEST_CASE("derivative identity J'_a = x/(2(a+1)) J_{a+1}") {
    for (double a : {0.0, 0.5, 1.5}) {
      for (double x : {-4.0, 0.7, 3.0}) {
        const double h = 1e-5;
        const double d = (bessel_norm(a, x + h) - bessel_norm(a, x - h)) / (2 * h);
        CHECK(d == doctest::Approx(x / (2 * (a + 1)) * bessel_norm(a + 1, x)).epsilon(1e-6));
      }
    }
  }

  TEST_CASE("rank-one kernel examples") {
    for (double k : {0.3, 1.0, 2.0}) CHECK(rank1_kernel(0.0, 3.0, Multiplicity(k)) == 1.0);
    const double closed = 0.5 * (std::sinh(2.0) + std::exp(2.0) / 4.0 + 0.75 * std::exp(-2.0));
    CHECK(rank1_kernel(1.0, 2.0, Multiplicity(1.0)) == doctest::Approx(closed).epsilon(1e-13));
    CHECK(rank1_kernel(1.0, 2.0, Multiplicity(1.0)) == doctest::Approx(2.7878129475035704).epsilon(1e-12));
    CHECK(rank1_kernel(1.0, 2.0, Multiplicity(0.5)) == doctest::Approx(3.8702221569733961).epsilon(1e-12));
    CHECK(rank1_kernel(2.5, 4.0, Multiplicity(1.5)) == doctest::Approx(990.50145428545159).epsilon(1e-12));
    CHECK_THROWS_AS(Multiplicity(0.0), InvalidArgument);
    CHECK_THROWS_AS(Multiplicity(-1.0), InvalidArgument);
    CHECK_THROWS_AS(Multiplicity(std::nan("")), InvalidArgument);
  }

  TEST_CASE("property: even part is the Bessel function") {
    for (double k : {0.4, 1.0, 2.2}) {
      for (double y : {0.5, 2.0, 9.0}) {
        const Multiplicity m(k);
        const double s = rank1_kernel(y, 1.0, m) + rank1_kernel(-y, 1.0, m);
        CHECK(s == doctest::Approx(2.0 * bessel_norm(k - 0.5, y)).epsilon(1e-11));
      }
    }
  }

  TEST_CASE("property: quadrature and Bessel routes agree, and agree with the series") {
    for (double k : {0.3, 0.5, 1.0, 1.7, 2.5}) {
      for (double y = -30.0; y <= 30.0; y += 2.5) {
        const Multiplicity m(k);
        const double q = rank1_kernel(1.0, y, m, Rank1Method::Quadrature);
        CHECK(q > 0.0);
        CHECK(q == doctest::Approx(rank1_kernel(1.0, y, m, Rank1Method::Bessel)).epsilon(1e-10));
        CHECK(q == doctest::Approx(oracle_rank1(1.0, y, m)).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("estimate examples") {
    const Multiplicity h(0.5);
    CHECK(rank1_estimate(0.0, 5.0, h) == 1.0);
    CHECK(rank1_estimate(1.0, 3.0, h) == doctest::Approx(std::exp(3.0) / 2.0).epsilon(1e-15));
    CHECK(rank1_estimate(-1.0, 3.0, h) == doctest::Approx(std::exp(3.0) / 8.0).epsilon(1e-15));
    CHECK(rank1_log_estimate(-1.0, 3.0, h) == doctest::Approx(3.0 - 1.5 * std::log(4.0)).epsilon(1e-15));
  }

  TEST_CASE("property: kernel/estimate ratio stays bounded") {
    for (double k : {0.5, 1.0, 2.0}) {
      const Multiplicity m(k);
      auto spread = [&](double r) {
        double lo = 1e300, hi = -1e300;
        for (int i = -40; i <= 40; ++i) {
          const double y = r * i / 40.0;
          const double l = rank1_kernel_scaled(1.0, y, m).log_value - rank1_log_estimate(1.0, y, m);
          lo = std::min(lo, l);
          hi = std::max(hi, l);
        }
        return hi - lo;
      };
      CHECK(spread(50.0) - spread(25.0) <= 0.1);
    }
  }
}
