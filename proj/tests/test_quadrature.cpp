#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"

using namespace dunkl;

TEST_SUITE("quadrature") {
  TEST_CASE("gauss_jacobi basics") {
    const QuadRule r1 = gauss_jacobi(1, 0.0, 0.0);
    REQUIRE(r1.nodes.size() == 1);
    CHECK(r1.nodes[0] == doctest::Approx(0.0));
    CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

    const QuadRule ch = gauss_jacobi(16, -0.5, -0.5);
    double sum = 0.0;
    for (double w : ch.weights) sum += w;
    CHECK(sum == doctest::Approx(std::numbers::pi).epsilon(1e-14));

    for (int n : {2, 7, 64, 512}) {
      const QuadRule r = gauss_jacobi(n, 0.3, 1.7);
      for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        CHECK(r.weights[i] > 0.0);
        if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
      }
    }
    CHECK_THROWS_AS(gauss_jacobi(0, 0, 0), InvalidArgument);
    CHECK_THROWS_AS(gauss_jacobi(513, 0, 0), InvalidArgument);
    CHECK_THROWS_AS(gauss_jacobi(4, -1.0, 0), InvalidArgument);
    CHECK(cached_gauss_jacobi(8, 0.5, 0.5) == cached_gauss_jacobi(8, 0.5, 0.5));
  }

  TEST_CASE("property: exact on polynomials of degree 2n-1") {
    for (double a : {-0.5, 0.0, 0.7}) {
      for (double b : {-0.3, 1.0, 2.5}) {
        const int n = 10;
        const QuadRule r = gauss_jacobi(n, a, b);
        for (int j = 0; j <= 2 * n - 1; ++j) {
          double approx = 0.0;
          for (std::size_t i = 0; i < r.nodes.size(); ++i) approx += r.weights[i] * std::pow(1.0 + r.nodes[i], j);
          CHECK(approx == doctest::Approx(jacobi_mass(a, b + j)).epsilon(1e-12));
        }
      }
    }
  }

  TEST_CASE("integrate_1d examples") {
    const QuadRule r = gauss_legendre(5);
    CHECK(integrate_1d([](double) { return 1.0; }, -1.0, 1.0, r) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(integrate_1d([](double) { return 1.0; }, 0.0, 1.0, r) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(integrate_1d([](double u) { return u; }, 0.0, 2.0, r) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(integrate_1d([](double) { return std::nan(""); }, 0.0, 1.0, r), DomainError);
    // Weighted: \int_0^1 (1-u)^0.5 du = 2/3.
    CHECK(integrate_1d([](double) { return 1.0; }, 0.0, 1.0, gauss_jacobi(3, 0.5, 0.0)) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  }

  TEST_CASE("adaptive tensor examples") {
    const QuadRule leg = gauss_legendre(4);
    const Box unit{0.0, 1.0, 0.0, 1.0};
    CHECK(adaptive_tensor_integrate([](double, double) { return 1.0; }, unit, leg, leg).value ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(adaptive_tensor_integrate([](double u, double v) { return u * v; }, unit, leg, leg).value ==
          doctest::Approx(0.25).epsilon(1e-14));
    const QuadResult e =
        adaptive_tensor_integrate([](double u, double v) { return std::exp(u + v); }, unit, leg, leg, 1e-13);
    CHECK(e.value == doctest::Approx(std::pow(std::numbers::e - 1.0, 2)).epsilon(1e-13));
    CHECK(e.diag.nodes >= 4);
    CHECK(e.diag.delta <= 1e-13);
  }

  TEST_CASE("refinement driver") {
    int calls = 0;
    const QuadResult r = refine_until_converged(
        [&](int n) {
          ++calls;
          return 1.0 + 1.0 / (n * n * n);
        },
        32, 1e-6);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(r.diag.refinements == calls - 1);
    CHECK_THROWS_AS(refine_until_converged([](int n) { return static_cast<double>(n); }, 32, 1e-9), NonConvergence);
    CHECK_THROWS_AS(refine_until_converged([](int) { return 1.0; }, 32, 1e-20), InvalidArgument);
    CHECK(initial_order(3.0) == 32);
    CHECK(initial_order(33.0) == 64);
    CHECK(initial_order(1e6) == 512);
  }
}
