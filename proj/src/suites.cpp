#include <cmath>
#include <cstdio>
#include <random>

#include "dunkl/errors.hpp"
#include "dunkl/validation.hpp"

namespace dunkl {

namespace {

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// Random interior point of C+ with norm in [r_lo, r_hi].
APoint random_plus(std::mt19937_64& rng, double r_lo, double r_hi) {
  std::uniform_real_distribution<double> r(r_lo, r_hi), f(0.05, 0.95);
  return chamber_point(r(rng), f(rng));
}

SuiteResult geometry_suite(int) {
  SuiteResult s{"geometry", true, {}};
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    const double a = g(rng), b = g(rng);
    const APoint z(a, b, -a - b);
    const APoint zp = project_plus(z);
    if (chamber_of(zp) != Chamber::C123) ++bad;
    for (Root r : {Root::Alpha, Root::Beta, Root::Gamma})
      if ((project_plus(reflect(z, r)) - zp).norm() > 1e-14 * (1.0 + z.norm())) ++bad;
  }
  const APoint interior = chamber_point(1.0, 0.4);
  for (Chamber c : kAllChambers)
    for (const Word& w : shortest_realizations(c))
      if (chamber_of(apply_word(w, interior)) != c) ++bad;
  s.passed = bad == 0;
  s.details.push_back(fmt("%.0f violations over 200 random points and all shortest realizations", bad));
  return s;
}

SuiteResult quadrature_suite(int) {
  SuiteResult s{"quadrature", true, {}};
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  double worst = 0.0;
  const double exps[][2] = {{0.0, 0.0}, {-0.5, 0.5}, {-0.7, 0.3}, {1.5, 2.0}};
  for (const auto& e : exps) {
    for (int n : {4, 16, 64}) {
      const QuadRule rule = gauss_jacobi(n, e[0], e[1]);
      // Exact on polynomials of degree <= 2n - 1, written in powers of (1 + z).
      std::vector<double> c(static_cast<std::size_t>(2 * n));
      double exact = 0.0, scale = 0.0;
      for (std::size_t j = 0; j < c.size(); ++j) {
        c[j] = coef(rng) / std::pow(2.0, static_cast<double>(j));
        const double m = jacobi_mass(e[0], e[1] + static_cast<double>(j));
        exact += c[j] * m;
        scale += std::abs(c[j]) * m;
      }
      double approx = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double p = 0.0;
        for (std::size_t j = c.size(); j-- > 0;) p = p * (1.0 + rule.nodes[i]) + c[j];
        approx += rule.weights[i] * p;
      }
      worst = std::max(worst, std::abs(approx - exact) / scale);
    }
  }
  s.passed = worst <= 1e-11;
  s.details.push_back(fmt("max relative error on random polynomials %.3g (limit 1e-11)", worst));
  return s;
}

SuiteResult rank1_suite(int) {
  SuiteResult s{"rank1", true, {}};
  double worst = 0.0;
  for (double kv : {0.3, 0.5, 1.0, 1.7, 2.5}) {
    const Multiplicity k(kv);
    for (int i = 0; i <= 100; ++i) {
      const double y = -50.0 + i;
      const double a = rank1_kernel(1.0, y, k, Rank1Method::Quadrature);
      const double b = rank1_kernel(1.0, y, k, Rank1Method::Bessel);
      worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
  }
  s.passed = worst <= 1e-10;
  s.details.push_back(fmt("quadrature vs Bessel route on 5 x 101 grid: max rel %.3g (limit 1e-10)", worst));
  return s;
}

SuiteResult kernel_suite(int) {
  SuiteResult s{"kernel", true, {}};
  std::mt19937_64 rng(3);
  double norm = 0.0, cross = 0.0, sym = 0.0, equi = 0.0;
  for (double kv : {0.5, 1.0, 2.0}) {
    const Multiplicity k(kv);
    for (int i = 0; i < 6; ++i) {
      const APoint l = random_plus(rng, 0.5, 4.0);
      norm = std::max(norm, std::abs(ek(APoint(0, 0, 0), l, k).value - 1.0));
      const APoint x = place_in_chamber(random_plus(rng, 0.2, 3.0), kAllChambers[static_cast<std::size_t>(i)]);
      cross = std::max(cross, ek(x, l, k, {}, Formula::Both).cross_delta);
      const APoint xp = random_plus(rng, 0.5, 3.0);
      sym = std::max(sym, std::abs(std::expm1(ek(xp, l, k).log_value - ek(l, xp, k).log_value)));
      equi = std::max(equi, std::abs(std::expm1(ek(reflect(x, Root::Alpha), reflect(l, Root::Alpha), k).log_value -
                                                ek(x, l, k).log_value)));
    }
  }
  const double lim = 10.0 * kDefaultRelTol;
  s.passed = norm <= lim && cross <= lim && sym <= lim && equi <= lim;
  s.details.push_back(fmt("normalization |E(0,lambda)-1| max %.3g", norm));
  s.details.push_back(fmt("alpha/beta formula agreement max %.3g", cross));
  s.details.push_back(fmt("symmetry max %.3g, W-equivariance max %.3g", sym, equi));
  return s;
}

SuiteResult estimates_suite(int) {
  SuiteResult s{"estimates", true, {}};
  const double k = 1.5, k1 = 2.5;
  const APoint l = chamber_point(2.0, 0.3);
  const APoint xp = chamber_point(1.0, 0.4);
  int bad = 0;
  const std::pair<Chamber, ExponentTriple> table[] = {{Chamber::C123, {k, k, k}},
                                                     {Chamber::C213, {k1, k, k}},
                                                     {Chamber::C132, {k, k1, k}},
                                                     {Chamber::C321, {k, k, k1}}};
  for (const auto& [c, e] : table)
    if (!(exponent_triple(place_in_chamber(xp, c), l, Multiplicity(k)) == e)) ++bad;
  s.details.push_back(fmt("exponent table mismatches: %.0f", bad));
  // Adjacent branch formulas on the equality sets alpha_l = beta_l and alpha_l alpha_X = beta_l beta_X.
  double worst = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double f = 0.04 * i + 0.05;
    const APoint x = place_in_chamber(chamber_point(1.0 + 0.2 * i, f), Chamber::C231);
    const APoint lsym = chamber_point(0.5 + 0.3 * i, 0.5);
    const ExponentTriple b0{k1, k1, k}, b1{k, k1, k1}, b2{k1, k, k1};
    const RootValues rx = root_values(project_plus(x));
    const ExponentTriple& adjacent = rx.alpha >= rx.beta ? b1 : b2;
    worst = std::max(worst, std::abs(log_envelope(x, lsym, b0) - log_envelope(x, lsym, adjacent)));
    // lambda with alpha_l / beta_l = beta_X / alpha_X.
    const double g = rx.beta / rx.alpha;
    const APoint lb = APoint(2.0 * g + 1.0, 1.0 - g, -g - 2.0) * (1.0 / 3.0);
    worst = std::max(worst, std::abs(log_envelope(x, lb, b1) - log_envelope(x, lb, b2)));
  }
  s.details.push_back(fmt("branch-boundary max |log ratio| %.3g (limit log 8 = %.3g)", worst, std::log(8.0)));
  s.passed = bad == 0 && worst <= std::log(8.0);
  return s;
}

SuiteResult heat_suite(int) {
  SuiteResult s{"heat", true, {}};
  double ck = 0.0;
  for (double k : {1e-8, 0.5, 1.0, 2.0}) ck = std::max(ck, std::abs(compute_ck(Multiplicity(k)) / mehta_ck(k) - 1.0));
  const bool monotone =
      compute_ck(Multiplicity(0.5)) < compute_ck(Multiplicity(1.0)) && compute_ck(Multiplicity(1.0)) < compute_ck(Multiplicity(2.0));
  double sym = 0.0;
  std::mt19937_64 rng(17);
  for (int i = 0; i < 5; ++i) {
    const APoint x = random_plus(rng, 0.3, 2.0);
    const APoint y = place_in_chamber(random_plus(rng, 0.3, 2.0), kAllChambers[static_cast<std::size_t>(i)]);
    const double t = 0.25 * (i + 1);
    sym = std::max(sym, std::abs(std::expm1(heat_kernel(t, x, y, Multiplicity(1.0)).log_value -
                                            heat_kernel(t, y, x, Multiplicity(1.0)).log_value)));
  }
  s.passed = ck <= 1e-12 && monotone && sym <= 1e-7;
  s.details.push_back(fmt("c_k vs closed form max rel %.3g", ck) + (monotone ? ", increasing in k" : ", NOT increasing in k"));
  s.details.push_back(fmt("symmetry p_t(X,Y) = p_t(Y,X) max rel %.3g", sym));
  return s;
}

SuiteResult eigen_suite(int) {
  SuiteResult s{"eigen", true, {}};
  double worst = 0.0;
  for (const EigenCase& c : eigen_validation_set())
    worst = std::max(worst, eigen_residual(c.x, c.lambda, Multiplicity(c.k), c.xi, default_step(c.x)));
  s.passed = worst <= 1e-4;
  s.details.push_back(fmt("max eigen residual over 30 points %.3g (limit 1e-4)", worst));
  return s;
}

SuiteResult sweep_suite(int threads) {
  SuiteResult s{"sweep", true, {}};
  for (Chamber c : {Chamber::C123, Chamber::C231, Chamber::C312}) {
    SweepSpec spec;
    spec.chamber = c;
    spec.grid_n = 6;
    spec.threads = threads;
    spec.radius = 5.0;
    const SweepResult r5 = ratio_sweep(spec);
    spec.radius = 10.0;
    const SweepResult r10 = ratio_sweep(spec);
    const double growth = r10.summary.spread() - r5.summary.spread();
    bool ok = !r5.summary.failed() && !r10.summary.failed() && growth <= 0.25;
    if (c != Chamber::C123)
      for (auto n : r10.summary.branch_counts) ok = ok && n > 0;
    s.passed = s.passed && ok;
    s.details.push_back(std::string(chamber_name(c)) + fmt(": spread %.3f -> %.3f", r5.summary.spread(), r10.summary.spread()));
  }
  return s;
}

using SuiteFn = SuiteResult (*)(int);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"geometry", geometry_suite}, {"quadrature", quadrature_suite}, {"rank1", rank1_suite},
      {"kernel", kernel_suite},     {"estimates", estimates_suite},   {"heat", heat_suite},
      {"eigen", eigen_suite},       {"sweep", sweep_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& name, int threads) {
  std::vector<SuiteResult> out;
  for (const auto& [n, f] : registry()) {
    if (name != "all" && name != n) continue;
    try {
      out.push_back(f(threads));
    } catch (const std::exception& e) {
      out.push_back({n, false, {std::string("error: ") + e.what()}});
    }
  }
  if (out.empty()) throw InvalidArgument("unknown suite '" + name + "'");
  return out;
}

}  // namespace dunkl
