#include "dunkl/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace dunkl {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string sweep_row(const EvalReport& r) {
  std::string s = csv_field(r.x.to_string());
  s += ',' + csv_field(r.lambda.to_string());
  s += ',' + format_double(r.k);
  s += ',' + std::string(chamber_name(r.chamber));
  s += ',' + csv_field(r.ok() ? r.branch.exponents.label(r.k) : "");
  s += ',' + format_double(r.kernel_log);
  s += ',' + format_double(r.estimate_log);
  s += ',' + format_double(r.log_ratio);
  s += ',' + std::to_string(r.quad_nodes);
  s += ',' + format_double(r.quad_delta);
  return s;
}

std::string heat_row(const EvalReport& r) {
  std::string s = format_double(r.t);
  s += ',' + csv_field(r.x.to_string());
  s += ',' + csv_field(r.lambda.to_string());
  s += ',' + format_double(r.k);
  s += ',' + format_double(std::exp(r.kernel_log));
  s += ',' + format_double(std::exp(r.estimate_log));
  s += ',' + format_double(r.log_ratio);
  return s;
}

void write_sweep_csv(std::ostream& out, const std::vector<EvalReport>& rows) {
  out << kSweepHeader << '\n';
  for (const EvalReport& r : rows) out << sweep_row(r) << '\n';
}

void write_heat_csv(std::ostream& out, const std::vector<EvalReport>& rows) {
  out << kHeatHeader << '\n';
  for (const EvalReport& r : rows) out << heat_row(r) << '\n';
}

}  // namespace dunkl
