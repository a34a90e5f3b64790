#pragma once

// Root system A2 on the trace-zero plane a = {x in R^3 : x1 + x2 + x3 = 0}.

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

// Point of the trace-zero plane. Used both for space variables and for
// spectral parameters.
class APoint {
 public:
  static constexpr double kRecenterTolerance = 1e-9;
  static constexpr double kTraceTolerance = 1e-12;

  constexpr APoint() = default;

  // Inputs with |x1 + x2 + x3| <= 1e-9 are re-centered by subtracting the
  // mean; anything larger throws InvalidArgument.
  APoint(double x1, double x2, double x3);

  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double x1() const { return c_[0]; }
  double x2() const { return c_[1]; }
  double x3() const { return c_[2]; }
  const std::array<double, 3>& coords() const { return c_; }

  double norm() const;
  double dot(const APoint& other) const;

  APoint operator+(const APoint& o) const;
  APoint operator-(const APoint& o) const;
  APoint operator*(double s) const;

  bool operator==(const APoint& o) const = default;

  // "x1,x2,x3" with 17 significant digits.
  std::string to_string() const;
  // Parses "x1,x2,x3"; throws InvalidArgument on malformed text.
  static APoint parse(std::string_view text);

 private:
  std::array<double, 3> c_{0.0, 0.0, 0.0};
};

enum class Root { Alpha = 0, Beta = 1, Gamma = 2 };

// (alpha, beta, gamma) = (x1 - x2, x2 - x3, x1 - x3). gamma is computed as
// alpha + beta so the identity holds exactly.
struct RootValues {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  double operator[](Root r) const;
  double product() const { return alpha * beta * gamma; }
};

// The six closed chambers C_ijk = {y_i >= y_j >= y_k}, listed in the
// tie-breaking precedence order used by chamber_of.
enum class Chamber { C123 = 0, C213, C132, C231, C312, C321 };

inline constexpr std::array<Chamber, 6> kAllChambers = {Chamber::C123, Chamber::C213, Chamber::C132,
                                                       Chamber::C231, Chamber::C312, Chamber::C321};

using Word = std::vector<Root>;  // (s_1, ..., s_m) denotes s_1 o ... o s_m

std::string_view chamber_name(Chamber c);
Chamber parse_chamber(std::string_view name);
std::string_view root_name(Root r);
std::string word_to_string(const Word& w);

// Permutation (i, j, k), zero-based: points of the chamber satisfy
// y[i] >= y[j] >= y[k].
std::array<int, 3> chamber_order(Chamber c);

APoint project_plus(const APoint& z);
Chamber chamber_of(const APoint& z, double wall_tol = 0.0);
RootValues root_values(const APoint& z);
double vandermonde(const APoint& lambda);
APoint reflect(const APoint& z, Root r);
APoint apply_word(const Word& w, const APoint& z);

// All minimal-length reflection words w with w C+ = c.
const std::vector<Word>& shortest_realizations(Chamber c);

// Weyl element sending the closed chamber containing z onto the closure of
// C+, returned as a permutation p with (wz)_i = z[p[i]].
std::array<int, 3> sorting_permutation(const APoint& z);
APoint permute(const APoint& z, const std::array<int, 3>& p);

}  // namespace dunkl
