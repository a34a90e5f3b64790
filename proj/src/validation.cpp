#include "dunkl/validation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "dunkl/errors.hpp"

namespace dunkl {

EvalReport evaluate_report(const APoint& x, const APoint& lambda, Multiplicity k, const KernelOptions& opt) {
  EvalReport r;
  r.x = x;
  r.lambda = lambda;
  r.k = k;
  r.chamber = chamber_of(x);
  r.branch = select_branch(x, lambda, k);
  const KernelValue kv = ek(x, lambda, k, opt);
  r.kernel_log = kv.log_value;
  r.estimate_log = log_envelope(x, lambda, r.branch.exponents);
  r.log_ratio = r.kernel_log - r.estimate_log;
  r.quad_nodes = kv.diag.nodes;
  r.quad_delta = kv.diag.delta;
  return r;
}

EvalReport evaluate_heat_report(double t, const APoint& x, const APoint& y, Multiplicity k, const KernelOptions& opt) {
  EvalReport r;
  r.x = x;
  r.lambda = y;
  r.k = k;
  r.t = t;
  r.chamber = chamber_of(y);
  const HeatEstimate he = heat_estimate(t, x, y, k);
  r.branch = he.branch;
  const HeatValue hv = heat_kernel(t, x, y, k, opt);
  r.kernel_log = hv.log_value;
  r.estimate_log = he.log_value;
  r.log_ratio = r.kernel_log - r.estimate_log;
  r.quad_nodes = hv.kernel.diag.nodes;
  r.quad_delta = hv.kernel.diag.delta;
  return r;
}

double default_step(const APoint& x) { return 1e-5 * (1.0 + x.norm()); }

APoint root_vector(Root r) {
  switch (r) {
    case Root::Alpha: return {1.0, -1.0, 0.0};
    case Root::Beta: return {0.0, 1.0, -1.0};
    case Root::Gamma: return {1.0, 0.0, -1.0};
  }
  return {};
}

double dunkl_apply(const PointFunction& f, const APoint& xi, const APoint& x, Multiplicity k, double h) {
  if (!(h >= kMinStep && h <= kMaxStep)) throw InvalidArgument("finite-difference step must lie in [1e-7, 1e-3]");
  const RootValues rx = root_values(x);
  const double wall_tol = 1e-12 * (1.0 + x.norm());
  for (Root r : {Root::Alpha, Root::Beta, Root::Gamma}) {
    if (std::abs(rx[r]) <= wall_tol) {
      throw DomainError("dunkl_apply: X = (" + x.to_string() + ") lies on the wall of root " +
                        std::string(root_name(r)));
    }
  }
  const double fx = f(x);
  double out = (f(x + xi * h) - f(x - xi * h)) / (2.0 * h);
  for (Root r : {Root::Alpha, Root::Beta, Root::Gamma}) {
    out += k * root_vector(r).dot(xi) * (fx - f(reflect(x, r))) / rx[r];
  }
  return out;
}

double eigen_residual(const APoint& x, const APoint& lambda, Multiplicity k, const APoint& xi, double h) {
  if (chamber_of(lambda) != Chamber::C123) throw DegenerateSpectral("eigen_residual requires lambda in C+");
  require_interior_spectral(lambda, 0.0);
  KernelOptions tight;
  tight.rel_tol = 1e-12;
  const KernelValue centre = ek(x, lambda, k, tight);
  KernelOptions fixed;
  fixed.fixed_order = centre.diag.nodes;
  auto f = [&](const APoint& z) {
    const KernelValue v = ek(z, lambda, k, fixed);
    if (v.scaled) throw DomainError("eigen_residual: kernel value out of double range");
    return v.value;
  };
  const double target = xi.dot(lambda) * f(x);
  return std::abs(dunkl_apply(f, xi, x, k, h) - target) / (std::abs(target) + 1.0);
}

std::vector<WallGap> wall_gaps(const APoint& x_wall, Root wall, const APoint& lambda, Multiplicity k,
                               const std::vector<double>& eps) {
  const RootValues rw = root_values(x_wall);
  if (std::abs(rw[wall]) > 1e-12 * (1.0 + x_wall.norm())) {
    throw InvalidArgument("wall_gaps: X (" + x_wall.to_string() + ") is not on the wall of root " +
                          std::string(root_name(wall)));
  }
  KernelOptions tight;
  tight.rel_tol = 1e-12;
  KernelOptions fixed;
  fixed.fixed_order = ek(x_wall, lambda, k, tight).diag.nodes;
  const APoint n = root_vector(wall) * (1.0 / std::numbers::sqrt2);
  std::vector<WallGap> out;
  for (double e : eps) {
    const APoint xp = x_wall + n * e;
    const APoint xm = x_wall - n * e;
    WallGap g;
    g.eps = e;
    g.kernel_gap = std::abs(ek(xp, lambda, k, fixed).log_value - ek(xm, lambda, k, fixed).log_value);
    g.estimate_gap = std::abs(log_sharp_estimate(xp, lambda, k) - log_sharp_estimate(xm, lambda, k));
    out.push_back(g);
  }
  return out;
}

std::vector<std::pair<APoint, Root>> wall_rays() {
  return {{{1.0, 1.0, -2.0}, Root::Alpha}, {{1.0, -2.0, 1.0}, Root::Gamma}, {{-2.0, 1.0, 1.0}, Root::Beta},
          {{2.0, -1.0, -1.0}, Root::Beta}, {{-1.0, 2.0, -1.0}, Root::Gamma}, {{-1.0, -1.0, 2.0}, Root::Alpha}};
}

APoint chamber_point(double r, double f) {
  // Unit rays of the walls beta = 0 and alpha = 0, 60 degrees apart.
  static const APoint p = APoint(2.0, -1.0, -1.0) * (1.0 / std::sqrt(6.0));
  static const APoint q = APoint(1.0, 1.0, -2.0) * (1.0 / std::sqrt(6.0));
  constexpr double opening = std::numbers::pi / 3.0;
  const double phi = f * opening;
  const double s = std::sin(opening);
  return (p * (std::sin(opening - phi) / s) + q * (std::sin(phi) / s)) * r;
}

APoint place_in_chamber(const APoint& xp, Chamber c) {
  const auto o = chamber_order(c);
  std::array<double, 3> y{};
  for (int m = 0; m < 3; ++m) y[static_cast<std::size_t>(o[static_cast<std::size_t>(m)])] = xp[m];
  return {y[0], y[1], y[2]};
}

const std::vector<EigenCase>& eigen_validation_set() {
  static const std::vector<EigenCase> cases = [] {
    std::vector<EigenCase> out;
    const double ks[3] = {0.5, 1.0, 2.0};
    const Root dirs[3] = {Root::Alpha, Root::Beta, Root::Gamma};
    const double radii[5] = {0.4, 0.8, 1.2, 1.6, 2.0};
    const double fx[5] = {0.2, 0.7, 0.45, 0.9, 0.1};
    const double fl[5] = {0.3, 0.6, 0.15, 0.8, 0.5};
    int i = 0;
    for (Chamber c : kAllChambers) {
      for (int j = 0; j < 5; ++j, ++i) {
        EigenCase ec{place_in_chamber(chamber_point(radii[j], fx[j]), c),
                     chamber_point(1.0 + 0.5 * j, fl[(j + i) % 5]), ks[i % 3], root_vector(dirs[(i + j) % 3])};
        out.push_back(ec);
      }
    }
    return out;
  }();
  return cases;
}

bool SweepSummary::failed() const {
  const std::size_t total = count + failures;
  return total == 0 || static_cast<double>(failures) > 0.01 * static_cast<double>(total);
}

SweepSummary summarize(const std::vector<EvalReport>& rows) {
  SweepSummary s;
  s.min = std::numeric_limits<double>::infinity();
  s.max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (const EvalReport& r : rows) {
    if (!r.ok()) {
      ++s.failures;
      continue;
    }
    ++s.count;
    s.min = std::min(s.min, r.log_ratio);
    s.max = std::max(s.max, r.log_ratio);
    sum += r.log_ratio;
    ++s.branch_counts[static_cast<std::size_t>(r.branch.branch)];
  }
  if (s.count == 0) {
    s.min = s.max = s.mean = std::numeric_limits<double>::quiet_NaN();
  } else {
    s.mean = sum / static_cast<double>(s.count);
  }
  return s;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads) : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

namespace {

constexpr double kInnerRadius = 0.05;
constexpr double kSpaceAngles[3] = {0.1, 0.5, 0.9};
constexpr double kSpectralAngles[2] = {0.15, 0.75};

void check_spec(const SweepSpec& spec) {
  if (spec.grid_n < 1 || spec.grid_n > 64) throw InvalidArgument("grid_n must lie in [1, 64]");
  if (!(spec.radius > 0.0 && spec.radius <= 50.0)) throw InvalidArgument("radius must lie in (0, 50]");
  require_a2_multiplicity(spec.k);
}

std::vector<double> shells(double radius, int n) {
  if (n == 1 || radius <= kInnerRadius) return std::vector<double>(static_cast<std::size_t>(n), radius);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = kInnerRadius * std::pow(radius / kInnerRadius, i / (n - 1.0));
  return out;
}

struct GridPoint {
  APoint a;  // space point placed in the chamber
  APoint b;  // point of C+
};

std::vector<GridPoint> sweep_grid(const SweepSpec& spec) {
  const auto r = shells(spec.radius, spec.grid_n);
  std::vector<GridPoint> pts;
  for (double rx : r)
    for (double fx : kSpaceAngles)
      for (double rl : r)
        for (double fl : kSpectralAngles)
          pts.push_back({place_in_chamber(chamber_point(rx, fx), spec.chamber), chamber_point(rl, fl)});
  return pts;
}

template <class Eval>
SweepResult run_grid(const SweepSpec& spec, Eval eval) {
  check_spec(spec);
  const auto pts = sweep_grid(spec);
  SweepResult out;
  out.rows.resize(pts.size());
  KernelOptions opt;
  opt.rel_tol = spec.rel_tol;
  const Multiplicity k(spec.k);
  parallel_for(pts.size(), spec.threads, [&](std::size_t i) {
    EvalReport& row = out.rows[i];
    try {
      row = eval(pts[i], k, opt);
    } catch (const std::exception& e) {
      row.x = pts[i].a;
      row.lambda = pts[i].b;
      row.k = spec.k;
      row.chamber = spec.chamber;
      row.error = e.what();
      row.kernel_log = row.estimate_log = row.log_ratio = std::numeric_limits<double>::quiet_NaN();
    }
  });
  out.summary = summarize(out.rows);
  return out;
}

}  // namespace

SweepResult ratio_sweep(const SweepSpec& spec) {
  return run_grid(spec, [](const GridPoint& p, Multiplicity k, const KernelOptions& opt) {
    return evaluate_report(p.a, p.b, k, opt);
  });
}

SweepResult heat_sweep(const SweepSpec& spec, double t) {
  heat_params(t, Multiplicity(spec.k));
  return run_grid(spec, [t](const GridPoint& p, Multiplicity k, const KernelOptions& opt) {
    return evaluate_heat_report(t, p.b, p.a, k, opt);
  });
}

}  // namespace dunkl
