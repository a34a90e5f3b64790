// dunkl-a2: command-line front end over the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dunkl/dunkl_a2.h"
#include "json.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kValidationFailure = 1, kUsage = 2, kNonConvergence = 3 };

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(dka2_status s) {
  switch (s) {
    case DKA2_OK: return kOk;
    case DKA2_ERR_NON_CONVERGENCE: return kNonConvergence;
    case DKA2_ERR_INTERNAL: return kValidationFailure;
    default: return kUsage;
  }
}

void check(dka2_status s, const std::string& context) {
  if (s != DKA2_OK) throw CliError{exit_code_for(s), context + ": " + dka2_last_error()};
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string point_text(const dka2_point& p) { return num(p.x1) + "," + num(p.x2) + "," + num(p.x3); }

json point_json(const dka2_point& p) { return json::array({p.x1, p.x2, p.x3}); }

// Non-finite doubles become null in JSON.
json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// "x1,x2,x3" with the trace-zero check applied by the library.
CLI::Validator point_validator() {
  return CLI::Validator(
      [](std::string& s) -> std::string {
        dka2_point p;
        if (dka2_parse_point(s.c_str(), &p) != DKA2_OK) return dka2_last_error();
        return {};
      },
      "POINT", "point");
}

dka2_point parse_point(const std::string& s, const char* field) {
  dka2_point p;
  check(dka2_parse_point(s.c_str(), &p), field);
  return p;
}

// Accepts lo < v <= hi (or lo <= v <= hi when closed_lo).
CLI::Validator interval(double lo, double hi, bool closed_lo, const std::string& text) {
  return CLI::Validator(
      [=](std::string& s) -> std::string {
        double v = 0.0;
        if (!CLI::detail::lexical_cast(s, v)) return "'" + s + "' is not a number";
        const bool ok = (closed_lo ? v >= lo : v > lo) && v <= hi;
        return ok ? std::string() : "value " + s + " outside " + text;
      },
      text);
}

const CLI::Validator kMultiplicity = interval(0.0, 8.0, false, "(0, 8]");
const CLI::Validator kRelTol = interval(1e-14, 1e-2, true, "[1e-14, 1e-2]");

struct RunConfig {
  std::string x = "0,0,0";
  std::string y;
  std::string lambda;
  double k = 1.0;
  double t = 1.0;
  double rel_tol = 1e-9;
  double radius = 5.0;
  int grid_n = 8;
  int nodes = 0;
  int threads = 0;
  std::string formula = "auto";
  std::string chamber = "C123";
  std::string variant = "derived";
  std::string suite = "all";
  std::string out = "-";
  std::string summary;
  std::string format = "csv";
  std::string dir;
  bool check = false;
};

int formula_index(const std::string& f) {
  if (f == "alpha") return DKA2_FORMULA_ALPHA;
  if (f == "beta") return DKA2_FORMULA_BETA;
  if (f == "both") return DKA2_FORMULA_BOTH;
  return DKA2_FORMULA_AUTO;
}

std::string branch_label(const dka2_report& r) {
  char buf[32];
  check(dka2_branch_label(&r, buf, sizeof buf), "branch");
  return buf;
}

int run_eval(const RunConfig& c) {
  const dka2_point x = parse_point(c.x, "--X");
  const dka2_point l = parse_point(c.lambda, "--lambda");
  dka2_kernel_value kv;
  check(dka2_kernel(x, l, c.k, c.rel_tol, formula_index(c.formula), c.nodes, &kv), "eval");

  // The estimate needs lambda in C+; elsewhere only the kernel is reported.
  int lc = 0;
  check(dka2_chamber_of(l, &lc), "--lambda");
  std::optional<dka2_report> rep;
  if (lc == DKA2_C123) {
    dka2_report r;
    if (dka2_eval_report(x, l, c.k, c.rel_tol, &r) == DKA2_OK) rep = r;
  }
  int xc = 0;
  check(dka2_chamber_of(x, &xc), "--X");

  if (c.format == "json") {
    json j = {{"X", point_json(x)},
              {"lambda", point_json(l)},
              {"k", c.k},
              {"chamber", dka2_chamber_name(xc)},
              {"value", jnum(kv.value)},
              {"kernel_log", kv.log_value},
              {"scaled", kv.scaled != 0},
              {"quad_nodes", kv.nodes},
              {"quad_delta", kv.delta}};
    if (c.formula == "both") j["cross_delta"] = kv.cross_delta;
    if (rep) {
      j["branch"] = branch_label(*rep);
      j["estimate_log"] = rep->estimate_log;
      j["log_ratio"] = kv.log_value - rep->estimate_log;
    }
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "X,lambda,k,chamber,branch,kernel_log,estimate_log,log_ratio,quad_nodes,quad_delta,value\n";
  std::cout << quoted(point_text(x)) << ',' << quoted(point_text(l)) << ',' << num(c.k) << ','
            << dka2_chamber_name(xc) << ',' << (rep ? quoted(branch_label(*rep)) : "") << ',' << num(kv.log_value)
            << ',' << (rep ? num(rep->estimate_log) : "") << ','
            << (rep ? num(kv.log_value - rep->estimate_log) : "") << ',' << kv.nodes << ',' << num(kv.delta) << ','
            << num(kv.value) << '\n';
  return kOk;
}

json summary_json(const dka2_sweep_summary& s, const RunConfig& c, bool heat) {
  json j = {{"chamber", c.chamber},   {"radius", c.radius},       {"grid_n", c.grid_n},
            {"k", c.k},               {"count", s.count},         {"failures", s.failures},
            {"min", jnum(s.min)},     {"max", jnum(s.max)},       {"mean", jnum(s.mean)},
            {"spread", jnum(s.spread)}, {"failed", s.failed != 0}};
  if (heat) j["t"] = c.t;
  j["branch_counts"] = json::array({s.branch_counts[0], s.branch_counts[1], s.branch_counts[2]});
  return j;
}

int run_sweep(const RunConfig& c, bool heat) {
  dka2_sweep_spec spec{};
  check(dka2_parse_chamber(c.chamber.c_str(), &spec.chamber), "--chamber");
  spec.radius = c.radius;
  spec.grid_n = c.grid_n;
  spec.k = c.k;
  spec.rel_tol = c.rel_tol;
  spec.threads = c.threads;
  spec.t = heat ? c.t : 0.0;
  dka2_sweep* sw = nullptr;
  check(dka2_sweep_run(&spec, &sw), heat ? "heat sweep" : "sweep");
  std::unique_ptr<dka2_sweep, decltype(&dka2_sweep_free)> guard(sw, dka2_sweep_free);
  check(dka2_sweep_write_csv(sw, c.out.c_str()), "--out");
  dka2_sweep_summary s;
  check(dka2_sweep_summary_get(sw, &s), "summary");
  const std::string text = summary_json(s, c, heat).dump(2) + "\n";
  if (c.summary == "-") {
    std::cout << text;
  } else if (!c.summary.empty()) {
    std::ofstream f(c.summary);
    if (!f || !(f << text)) throw CliError{kUsage, "--summary: cannot write " + c.summary};
  } else {
    (c.out == "-" ? std::cerr : std::cout) << text;
  }
  for (std::size_t i = 0; i < dka2_sweep_size(sw); ++i) {
    const char* err = dka2_sweep_row_error(sw, i);
    if (*err) std::cerr << "row " << i << ": " << err << '\n';
  }
  return s.failed ? kValidationFailure : kOk;
}

int run_heat(const RunConfig& c, bool sweep_mode) {
  if (sweep_mode) return run_sweep(c, true);
  const dka2_point x = parse_point(c.x, "--X");
  const dka2_point y = parse_point(c.y, "--Y");
  dka2_heat_value h;
  check(dka2_heat(c.t, x, y, c.k, c.rel_tol, c.variant == "printed" ? DKA2_HEAT_PRINTED : DKA2_HEAT_DERIVED, &h),
        "heat");
  if (c.format == "json") {
    json j = {{"t", c.t},
              {"X", point_json(x)},
              {"Y", point_json(y)},
              {"k", c.k},
              {"p_t", jnum(h.value)},
              {"log_p_t", h.log_value},
              {"estimate", jnum(h.estimate)},
              {"log_estimate", h.log_estimate},
              {"log_ratio", h.log_ratio},
              {"chamber", dka2_chamber_name(h.chamber)},
              {"variant", c.variant}};
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "t,X,Y,k,p_t,estimate,log_ratio\n"
            << num(c.t) << ',' << quoted(point_text(x)) << ',' << quoted(point_text(y)) << ',' << num(c.k) << ','
            << num(h.value) << ',' << num(h.estimate) << ',' << num(h.log_ratio) << '\n';
  return kOk;
}

int run_validate(const RunConfig& c) {
  dka2_validation* v = nullptr;
  check(dka2_validate(c.suite.c_str(), c.threads, &v), "--suite");
  std::unique_ptr<dka2_validation, decltype(&dka2_validation_free)> guard(v, dka2_validation_free);
  bool all = true;
  json j = json::array();
  for (std::size_t i = 0; i < dka2_validation_count(v); ++i) {
    const bool ok = dka2_validation_passed(v, i) != 0;
    all = all && ok;
    json details = json::array();
    for (std::size_t d = 0; d < dka2_validation_detail_count(v, i); ++d) details.push_back(dka2_validation_detail(v, i, d));
    if (c.format == "json") {
      j.push_back({{"suite", dka2_validation_name(v, i)}, {"passed", ok}, {"details", details}});
    } else {
      std::cout << (ok ? "PASS " : "FAIL ") << dka2_validation_name(v, i) << '\n';
      for (const auto& d : details) std::cout << "     " << d.get<std::string>() << '\n';
    }
  }
  if (c.format == "json") std::cout << j.dump(2) << '\n';
  return all ? kOk : kValidationFailure;
}

int run_golden(const RunConfig& c) {
  const std::string dir = c.dir.empty() ? dka2_golden_dir("tests/golden") : c.dir;
  dka2_golden* g = nullptr;
  check(dka2_golden_run(dir.c_str(), c.check ? 0 : 1, 0.0, &g), "golden");
  std::unique_ptr<dka2_golden, decltype(&dka2_golden_free)> guard(g, dka2_golden_free);
  for (std::size_t i = 0; i < dka2_golden_count(g); ++i) {
    dka2_golden_entry e;
    check(dka2_golden_entry_get(g, i, &e), "golden");
    char line[512];
    std::snprintf(line, sizeof line, "%s %-12s %-70s stored=%.17g oracle_rel=%.2e library_rel=%.2e nodes=%d",
                  e.pass ? "PASS" : "FAIL", e.file, e.label, e.stored, e.oracle_rel, e.production_rel,
                  e.oracle_nodes);
    std::cout << line << '\n';
  }
  std::cout << (c.check ? "checked " : "wrote ") << dka2_golden_count(g) << " values in " << dir << '\n';
  return dka2_golden_passed(g) ? kOk : kValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dunkl kernel and heat kernel of the root system A2"};
  app.set_version_flag("--version", dka2_version());
  app.set_config("--config", "", "TOML configuration file; command-line flags take precedence");
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", c.k, "multiplicity k in (0, 8]")->check(kMultiplicity);
    sub->add_option("--rel-tol", c.rel_tol, "quadrature relative tolerance")->check(kRelTol);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--chamber", c.chamber, "chamber of the space variable")
        ->check(CLI::IsMember({"C123", "C213", "C132", "C231", "C312", "C321"}));
    sub->add_option("--radius", c.radius, "grid radius")->check(interval(0.0, 50.0, false, "(0, 50]"));
    sub->add_option("--threads", c.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", c.out, "CSV output path ('-' for stdout)");
    sub->add_option("--summary", c.summary, "summary JSON path, - for stdout (default: stdout, or stderr when CSV goes to stdout)");
  };

  auto* eval = app.add_subcommand("eval", "evaluate E_k(X, lambda) with its sharp estimate");
  eval->add_option("--X", c.x, "space variable x1,x2,x3")->check(point_validator());
  eval->add_option("--lambda", c.lambda, "spectral variable")->required()->check(point_validator());
  eval->add_option("--formula", c.formula, "double-integral formula")
      ->check(CLI::IsMember({"alpha", "beta", "both", "auto"}));
  eval->add_option("--nodes", c.nodes, "fixed quadrature order (no refinement)")->check(CLI::Range(1, 512));
  add_common(eval);
  add_format(eval);

  auto* sweep = app.add_subcommand("sweep", "kernel / estimate ratio sweep over a chamber");
  add_common(sweep);
  add_grid(sweep);
  sweep->add_option("--grid", c.grid_n, "shells per axis")->check(CLI::Range(1, 64));

  auto* validate = app.add_subcommand("validate", "run invariant suites");
  std::vector<std::string> suites{"all"};
  for (std::size_t i = 0; i < dka2_suite_count(); ++i) suites.emplace_back(dka2_suite_name(i));
  validate->add_option("--suite", c.suite, "suite name or 'all'")->check(CLI::IsMember(suites));
  validate->add_option("--threads", c.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  validate->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* heat = app.add_subcommand("heat", "heat kernel p_t(X, Y) and its estimate; with --grid, a heat sweep");
  heat->add_option("--t", c.t, "time t > 0")->check(interval(0.0, HUGE_VAL, false, "(0, inf)"));
  heat->add_option("--X", c.x, "point of the closed positive chamber")->check(point_validator());
  heat->add_option("--Y", c.y, "second point")->check(point_validator());
  heat->add_option("--variant", c.variant, "t-exponent of the estimate")->check(CLI::IsMember({"derived", "printed"}));
  auto* heat_grid = heat->add_option("--grid", c.grid_n, "run a heat sweep with this many shells")->check(CLI::Range(1, 64));
  add_common(heat);
  add_grid(heat);
  add_format(heat);

  auto* golden = app.add_subcommand("golden", "regenerate (default) or --check the reference value files");
  golden->add_option("--dir", c.dir, "golden directory (default: $DUNKL_GOLDEN_DIR, else tests/golden)");
  golden->add_flag("--check", c.check, "recompute and compare instead of rewriting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) return run_eval(c);
    if (*sweep) return run_sweep(c, false);
    if (*validate) {
      if (c.format == "csv") c.format = "text";
      return run_validate(c);
    }
    if (*heat) {
      const bool sweep_mode = heat_grid->count() > 0;
      if (!sweep_mode && c.y.empty()) throw CliError{kUsage, "--Y is required unless --grid is given"};
      return run_heat(c, sweep_mode);
    }
    if (*golden) return run_golden(c);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationFailure;
  }
  return kUsage;
}
