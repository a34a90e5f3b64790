#include <random>

#include "doctest.h"
#include "dunkl/errors.hpp"
#include "dunkl/geometry.hpp"

using namespace dunkl;

namespace {

bool near(const APoint& a, const APoint& b, double tol = 1e-14) { return (a - b).norm() <= tol; }

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("re-centering and trace check") {
    const APoint p(1.0, 2.0, -3.0 + 5e-10);
    CHECK(p.x1() + p.x2() + p.x3() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(APoint(1.0, 1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(APoint::parse("1,2"), InvalidArgument);
    CHECK_THROWS_AS(APoint::parse("1,x,3"), InvalidArgument);
    CHECK(APoint::parse(" 2, 1 ,-3") == APoint(2, 1, -3));
    CHECK(APoint::parse(APoint(0.1, 0.2, -0.3).to_string()) == APoint(0.1, 0.2, -0.3));
  }

  TEST_CASE("project_plus examples") {
    CHECK(project_plus(APoint(0, 1, -1)) == APoint(1, 0, -1));
    CHECK(project_plus(APoint(1, 0, -1)) == APoint(1, 0, -1));
    CHECK(near(project_plus(APoint(0.2, 0.5, -0.7)), APoint(0.5, 0.2, -0.7)));
  }

  TEST_CASE("chamber_of examples and precedence") {
    CHECK(chamber_of(APoint(1, 0, -1)) == Chamber::C123);
    CHECK(chamber_of(APoint(0, 1, -1)) == Chamber::C213);
    CHECK(chamber_of(APoint(-1, 0, 1)) == Chamber::C321);
    CHECK(chamber_of(APoint(1, 1, -2)) == Chamber::C123);
    CHECK(chamber_of(APoint(0, 0, 0)) == Chamber::C123);
    CHECK(chamber_of(APoint(-1, 2, -1)) == Chamber::C213);
    for (Chamber c : kAllChambers) CHECK(parse_chamber(chamber_name(c)) == c);
    CHECK_THROWS_AS(parse_chamber("C111"), InvalidArgument);
  }

  TEST_CASE("root values and Vandermonde") {
    const RootValues a = root_values(APoint(1, 0, -1));
    CHECK(a.alpha == 1.0);
    CHECK(a.beta == 1.0);
    CHECK(a.gamma == 2.0);
    const RootValues z = root_values(APoint(0, 0, 0));
    CHECK(z.gamma == 0.0);
    const RootValues b = root_values(APoint(2, 1, -3));
    CHECK(b.alpha == 1.0);
    CHECK(b.beta == 4.0);
    CHECK(b.gamma == 5.0);
    CHECK(vandermonde(APoint(1, 0, -1)) == 2.0);
    CHECK(vandermonde(APoint(2, 0, -2)) == 16.0);
    CHECK(vandermonde(APoint(1, 1, -2)) == 0.0);
  }

  TEST_CASE("reflections") {
    CHECK(reflect(APoint(1, 0, -1), Root::Alpha) == APoint(0, 1, -1));
    CHECK(reflect(APoint(1, 0, -1), Root::Gamma) == APoint(-1, 0, 1));
    const APoint z(0.3, -1.7, 1.4);
    for (Root r : {Root::Alpha, Root::Beta, Root::Gamma}) CHECK(near(reflect(reflect(z, r), r), z));
  }

  TEST_CASE("shortest realizations") {
    CHECK(shortest_realizations(Chamber::C123) == std::vector<Word>{Word{}});
    CHECK(shortest_realizations(Chamber::C213) == std::vector<Word>{Word{Root::Alpha}});
    const std::vector<Word> c231 = {{Root::Alpha, Root::Beta}, {Root::Beta, Root::Gamma}, {Root::Gamma, Root::Alpha}};
    CHECK(shortest_realizations(Chamber::C231) == c231);
    const APoint inner(0.9, 0.2, -1.1);
    for (Chamber c : kAllChambers) {
      REQUIRE(!shortest_realizations(c).empty());
      for (const Word& w : shortest_realizations(c)) CHECK(chamber_of(apply_word(w, inner)) == c);
    }
  }

  TEST_CASE("property: projection is W-invariant and lands in C+") {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g(0.0, 3.0);
    for (int i = 0; i < 500; ++i) {
      const double a = g(rng), b = g(rng);
      const APoint z(a, b, -a - b);
      const APoint zp = project_plus(z);
      CHECK(chamber_of(zp) == Chamber::C123);
      CHECK(zp.norm() == doctest::Approx(z.norm()).epsilon(1e-14));
      for (Root r : {Root::Alpha, Root::Beta, Root::Gamma})
        CHECK(near(project_plus(reflect(z, r)), zp, 1e-14 * (1.0 + z.norm())));
      CHECK(near(permute(z, sorting_permutation(z)), zp, 0.0));
    }
  }
}
