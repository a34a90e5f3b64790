#include "dunkl/dunkl_a2.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "dunkl/csv.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/golden.hpp"
#include "dunkl/validation.hpp"

using namespace dunkl;

struct dka2_sweep {
  SweepResult result;
  double t = 0.0;
};

struct dka2_validation {
  std::vector<SuiteResult> suites;
};

struct dka2_golden {
  GoldenReport report;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_golden_dir;

dka2_status fail(dka2_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
dka2_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return DKA2_OK;
  } catch (const Error& e) {
    return fail(static_cast<dka2_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DKA2_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DKA2_ERR_INTERNAL, e.what());
  }
}

APoint to_point(dka2_point p) { return {p.x1, p.x2, p.x3}; }
dka2_point from_point(const APoint& p) { return {p.x1(), p.x2(), p.x3()}; }

void require(const void* p, const char* what) {
  if (!p) throw InvalidArgument(std::string(what) + " must not be NULL");
}

Chamber to_chamber(int c) {
  if (c < 0 || c > 5) throw InvalidArgument("chamber index must lie in [0, 5]");
  return kAllChambers[static_cast<std::size_t>(c)];
}

KernelOptions options(double rel_tol) {
  KernelOptions opt;
  if (rel_tol > 0.0) opt.rel_tol = rel_tol;
  return opt;
}

dka2_report to_report(const EvalReport& r) {
  dka2_report out{};
  out.x = from_point(r.x);
  out.lambda = from_point(r.lambda);
  out.k = r.k;
  out.t = r.t;
  out.kernel_log = r.kernel_log;
  out.estimate_log = r.estimate_log;
  out.log_ratio = r.log_ratio;
  out.chamber = static_cast<int>(r.chamber);
  out.branch = r.branch.branch;
  out.k_alpha = r.branch.exponents.k_alpha;
  out.k_beta = r.branch.exponents.k_beta;
  out.k_gamma = r.branch.exponents.k_gamma;
  out.quad_nodes = r.quad_nodes;
  out.quad_delta = r.quad_delta;
  out.ok = r.ok() ? 1 : 0;
  return out;
}

}  // namespace

extern "C" {

const char* dka2_last_error(void) { return g_last_error.c_str(); }

const char* dka2_version(void) { return "1.0.0"; }

const char* dka2_status_name(dka2_status s) {
  switch (s) {
    case DKA2_OK: return "ok";
    case DKA2_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DKA2_ERR_DEGENERATE_SPECTRAL: return "degenerate spectral parameter";
    case DKA2_ERR_NON_CONVERGENCE: return "non-convergence";
    case DKA2_ERR_DOMAIN: return "domain error";
    case DKA2_ERR_IO: return "i/o error";
    case DKA2_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

dka2_status dka2_parse_point(const char* text, dka2_point* out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = from_point(APoint::parse(text));
  });
}

const char* dka2_chamber_name(int chamber) {
  if (chamber < 0 || chamber > 5) return "";
  return chamber_name(kAllChambers[static_cast<std::size_t>(chamber)]).data();
}

dka2_status dka2_parse_chamber(const char* name, int* out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    *out = static_cast<int>(parse_chamber(name));
  });
}

dka2_status dka2_chamber_of(dka2_point x, int* out) {
  return guard([&] {
    require(out, "out");
    *out = static_cast<int>(chamber_of(to_point(x)));
  });
}

dka2_status dka2_branch_label(const dka2_report* r, char* buf, size_t size) {
  return guard([&] {
    require(r, "report");
    require(buf, "buf");
    const std::string s = ExponentTriple{r->k_alpha, r->k_beta, r->k_gamma}.label(r->k);
    if (s.size() + 1 > size) throw InvalidArgument("label buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

dka2_status dka2_kernel(dka2_point x, dka2_point lambda, double k, double rel_tol, int formula, int nodes,
                        dka2_kernel_value* out) {
  return guard([&] {
    require(out, "out");
    if (formula < 0 || formula > 3) throw InvalidArgument("unknown formula index");
    KernelOptions opt = options(rel_tol);
    if (nodes > 0) opt.fixed_order = nodes;
    const KernelValue v = ek(to_point(x), to_point(lambda), Multiplicity(k), opt, static_cast<Formula>(formula));
    *out = {v.log_value, v.value, v.scaled ? 1 : 0, static_cast<int>(v.formula_used), v.diag.nodes, v.diag.delta,
            v.cross_delta};
  });
}

dka2_status dka2_rank1(double x, double v, double k, int method, double* out) {
  return guard([&] {
    require(out, "out");
    if (method != DKA2_RANK1_QUADRATURE && method != DKA2_RANK1_BESSEL) throw InvalidArgument("unknown rank-one method");
    *out = rank1_kernel(x, v, Multiplicity(k), static_cast<Rank1Method>(method));
  });
}

dka2_status dka2_eval_report(dka2_point x, dka2_point lambda, double k, double rel_tol, dka2_report* out) {
  return guard([&] {
    require(out, "out");
    *out = to_report(evaluate_report(to_point(x), to_point(lambda), Multiplicity(k), options(rel_tol)));
  });
}

dka2_status dka2_ck(double k, double* out) {
  return guard([&] {
    require(out, "out");
    require_a2_multiplicity(k);
    *out = compute_ck(Multiplicity(k));
  });
}

dka2_status dka2_heat(double t, dka2_point x, dka2_point y, double k, double rel_tol, int variant,
                      dka2_heat_value* out) {
  return guard([&] {
    require(out, "out");
    if (variant != DKA2_HEAT_DERIVED && variant != DKA2_HEAT_PRINTED) throw InvalidArgument("unknown heat variant");
    const Multiplicity mk(k);
    const HeatValue hv = heat_kernel(t, to_point(x), to_point(y), mk, options(rel_tol));
    const HeatEstimate he = heat_estimate(t, to_point(x), to_point(y), mk, static_cast<HeatExponent>(variant));
    const ExponentTriple& e = he.branch.exponents;
    *out = {hv.log_value,
            hv.value,
            he.log_value,
            he.value,
            hv.log_value - he.log_value,
            static_cast<int>(he.branch.chamber),
            he.branch.branch,
            e.k_alpha,
            e.k_beta,
            e.k_gamma,
            hv.kernel.diag.nodes};
  });
}

dka2_status dka2_eigen_residual(dka2_point x, dka2_point lambda, double k, dka2_point xi, double h, double* out) {
  return guard([&] {
    require(out, "out");
    const APoint px = to_point(x);
    *out = eigen_residual(px, to_point(lambda), Multiplicity(k), to_point(xi), h > 0.0 ? h : default_step(px));
  });
}

dka2_status dka2_sweep_run(const dka2_sweep_spec* spec, dka2_sweep** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "out");
    *out = nullptr;
    SweepSpec s;
    s.chamber = to_chamber(spec->chamber);
    s.radius = spec->radius;
    s.grid_n = spec->grid_n;
    s.k = spec->k;
    if (spec->rel_tol > 0.0) s.rel_tol = spec->rel_tol;
    s.threads = spec->threads;
    auto h = std::make_unique<dka2_sweep>();
    h->t = spec->t;
    h->result = spec->t > 0.0 ? heat_sweep(s, spec->t) : ratio_sweep(s);
    *out = h.release();
  });
}

size_t dka2_sweep_size(const dka2_sweep* s) { return s ? s->result.rows.size() : 0; }

dka2_status dka2_sweep_row(const dka2_sweep* s, size_t i, dka2_report* out) {
  return guard([&] {
    require(s, "sweep");
    require(out, "out");
    if (i >= s->result.rows.size()) throw InvalidArgument("row index out of range");
    *out = to_report(s->result.rows[i]);
  });
}

const char* dka2_sweep_row_error(const dka2_sweep* s, size_t i) {
  if (!s || i >= s->result.rows.size()) return "";
  return s->result.rows[i].error.c_str();
}

dka2_status dka2_sweep_summary_get(const dka2_sweep* s, dka2_sweep_summary* out) {
  return guard([&] {
    require(s, "sweep");
    require(out, "out");
    const SweepSummary& m = s->result.summary;
    *out = {m.count,
            m.failures,
            m.min,
            m.max,
            m.mean,
            m.spread(),
            {m.branch_counts[0], m.branch_counts[1], m.branch_counts[2]},
            m.failed() ? 1 : 0};
  });
}

dka2_status dka2_sweep_write_csv(const dka2_sweep* s, const char* path) {
  return guard([&] {
    require(s, "sweep");
    require(path, "path");
    auto write = [&](std::ostream& os) {
      if (s->t > 0.0) {
        write_heat_csv(os, s->result.rows);
      } else {
        write_sweep_csv(os, s->result.rows);
      }
      os.flush();
      if (!os) throw IoError(std::string("write failed for ") + path);
    };
    if (std::strcmp(path, "-") == 0) {
      write(std::cout);
      return;
    }
    std::ofstream f(path);
    if (!f) throw IoError(std::string("cannot open ") + path + " for writing");
    write(f);
  });
}

void dka2_sweep_free(dka2_sweep* s) { delete s; }

size_t dka2_suite_count(void) { return suite_names().size(); }

const char* dka2_suite_name(size_t i) { return i < suite_names().size() ? suite_names()[i].c_str() : ""; }

dka2_status dka2_validate(const char* suite, int threads, dka2_validation** out) {
  return guard([&] {
    require(suite, "suite");
    require(out, "out");
    *out = nullptr;
    auto v = std::make_unique<dka2_validation>();
    v->suites = run_suites(suite, threads);
    *out = v.release();
  });
}

size_t dka2_validation_count(const dka2_validation* v) { return v ? v->suites.size() : 0; }

const char* dka2_validation_name(const dka2_validation* v, size_t i) {
  return v && i < v->suites.size() ? v->suites[i].name.c_str() : "";
}

int dka2_validation_passed(const dka2_validation* v, size_t i) {
  return v && i < v->suites.size() && v->suites[i].passed ? 1 : 0;
}

size_t dka2_validation_detail_count(const dka2_validation* v, size_t i) {
  return v && i < v->suites.size() ? v->suites[i].details.size() : 0;
}

const char* dka2_validation_detail(const dka2_validation* v, size_t i, size_t j) {
  if (!v || i >= v->suites.size() || j >= v->suites[i].details.size()) return "";
  return v->suites[i].details[j].c_str();
}

void dka2_validation_free(dka2_validation* v) { delete v; }

const char* dka2_golden_dir(const char* fallback_dir) {
  g_golden_dir = golden_dir(fallback_dir ? fallback_dir : "");
  return g_golden_dir.c_str();
}

dka2_status dka2_golden_run(const char* dir, int regenerate, double rel_tol, dka2_golden** out) {
  return guard([&] {
    require(dir, "dir");
    require(out, "out");
    *out = nullptr;
    auto g = std::make_unique<dka2_golden>();
    g->report = regenerate ? regenerate_golden(dir) : check_golden(dir, rel_tol > 0.0 ? rel_tol : kGoldenRelTol);
    *out = g.release();
  });
}

size_t dka2_golden_count(const dka2_golden* g) { return g ? g->report.entries.size() : 0; }

dka2_status dka2_golden_entry_get(const dka2_golden* g, size_t i, dka2_golden_entry* out) {
  return guard([&] {
    require(g, "golden");
    require(out, "out");
    if (i >= g->report.entries.size()) throw InvalidArgument("entry index out of range");
    const GoldenEntry& e = g->report.entries[i];
    *out = {e.file.c_str(), e.label.c_str(), e.stored,        e.oracle,         e.production,
            e.oracle_rel,   e.production_rel, e.oracle_nodes, e.pass ? 1 : 0};
  });
}

int dka2_golden_passed(const dka2_golden* g) { return g && g->report.passed() ? 1 : 0; }

void dka2_golden_free(dka2_golden* g) { delete g; }

}  // extern "C"
