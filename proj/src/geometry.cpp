#include "dunkl/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "dunkl/errors.hpp"

namespace dunkl {

APoint::APoint(double x1, double x2, double x3) : c_{x1, x2, x3} {
  if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(x3)) {
    throw InvalidArgument("APoint: non-finite coordinate");
  }
  const double trace = x1 + x2 + x3;
  if (std::abs(trace) > kRecenterTolerance) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "APoint: coordinates must sum to zero (sum = %.3g)", trace);
    throw InvalidArgument(buf);
  }
  const double mean = trace / 3.0;
  for (double& x : c_) x -= mean;
}

double APoint::norm() const { return std::sqrt(dot(*this)); }

double APoint::dot(const APoint& o) const { return c_[0] * o.c_[0] + c_[1] * o.c_[1] + c_[2] * o.c_[2]; }

APoint APoint::operator+(const APoint& o) const { return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]}; }

APoint APoint::operator-(const APoint& o) const { return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]}; }

APoint APoint::operator*(double s) const { return {c_[0] * s, c_[1] * s, c_[2] * s}; }

std::string APoint::to_string() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", c_[0], c_[1], c_[2]);
  return buf;
}

APoint APoint::parse(std::string_view text) {
  std::array<double, 3> v{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v[static_cast<std::size_t>(i)]);
    if (ec != std::errc()) {
      throw InvalidArgument("cannot parse point '" + std::string(text) + "': expected x1,x2,x3");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (i < 2) {
      if (pos >= text.size() || text[pos] != ',') {
        throw InvalidArgument("cannot parse point '" + std::string(text) + "': expected x1,x2,x3");
      }
      ++pos;
    }
  }
  if (pos != text.size()) {
    throw InvalidArgument("cannot parse point '" + std::string(text) + "': trailing characters");
  }
  return {v[0], v[1], v[2]};
}

double RootValues::operator[](Root r) const {
  switch (r) {
    case Root::Alpha: return alpha;
    case Root::Beta: return beta;
    case Root::Gamma: return gamma;
  }
  return 0.0;
}

std::string_view chamber_name(Chamber c) {
  static constexpr std::array<std::string_view, 6> names = {"C123", "C213", "C132", "C231", "C312", "C321"};
  return names[static_cast<std::size_t>(c)];
}

Chamber parse_chamber(std::string_view name) {
  for (Chamber c : kAllChambers) {
    if (chamber_name(c) == name) return c;
  }
  throw InvalidArgument("unknown chamber '" + std::string(name) + "' (expected one of C123 C213 C132 C231 C312 C321)");
}

std::string_view root_name(Root r) {
  switch (r) {
    case Root::Alpha: return "alpha";
    case Root::Beta: return "beta";
    case Root::Gamma: return "gamma";
  }
  return "?";
}

std::string word_to_string(const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += "s_";
    out += root_name(w[i]);
  }
  return out + ")";
}

std::array<int, 3> chamber_order(Chamber c) {
  switch (c) {
    case Chamber::C123: return {0, 1, 2};
    case Chamber::C213: return {1, 0, 2};
    case Chamber::C132: return {0, 2, 1};
    case Chamber::C231: return {1, 2, 0};
    case Chamber::C312: return {2, 0, 1};
    case Chamber::C321: return {2, 1, 0};
  }
  return {0, 1, 2};
}

std::array<int, 3> sorting_permutation(const APoint& z) {
  std::array<int, 3> p{0, 1, 2};
  // Stable so that ties keep the identity order.
  std::stable_sort(p.begin(), p.end(), [&](int a, int b) { return z[a] > z[b]; });
  return p;
}

APoint permute(const APoint& z, const std::array<int, 3>& p) { return {z[p[0]], z[p[1]], z[p[2]]}; }

APoint project_plus(const APoint& z) { return permute(z, sorting_permutation(z)); }

Chamber chamber_of(const APoint& z, double wall_tol) {
  if (!(wall_tol >= 0.0)) throw InvalidArgument("chamber_of: wall_tol must be >= 0");
  for (Chamber c : kAllChambers) {
    const auto o = chamber_order(c);
    if (z[o[0]] >= z[o[1]] - wall_tol && z[o[1]] >= z[o[2]] - wall_tol) return c;
  }
  // Unreachable: the decreasing rearrangement always satisfies one ordering.
  return Chamber::C123;
}

RootValues root_values(const APoint& z) {
  RootValues r;
  r.alpha = z.x1() - z.x2();
  r.beta = z.x2() - z.x3();
  r.gamma = r.alpha + r.beta;
  return r;
}

double vandermonde(const APoint& lambda) { return root_values(lambda).product(); }

APoint reflect(const APoint& z, Root r) {
  switch (r) {
    case Root::Alpha: return {z.x2(), z.x1(), z.x3()};
    case Root::Beta: return {z.x1(), z.x3(), z.x2()};
    case Root::Gamma: return {z.x3(), z.x2(), z.x1()};
  }
  return z;
}

APoint apply_word(const Word& w, const APoint& z) {
  APoint out = z;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect(out, *it);
  return out;
}

const std::vector<Word>& shortest_realizations(Chamber c) {
  using R = Root;
  static const std::array<std::vector<Word>, 6> table = {{
      {Word{}},
      {Word{R::Alpha}},
      {Word{R::Beta}},
      {Word{R::Alpha, R::Beta}, Word{R::Beta, R::Gamma}, Word{R::Gamma, R::Alpha}},
      {Word{R::Beta, R::Alpha}, Word{R::Gamma, R::Beta}, Word{R::Alpha, R::Gamma}},
      {Word{R::Gamma}},
  }};
  return table[static_cast<std::size_t>(c)];
}

}  // namespace dunkl
