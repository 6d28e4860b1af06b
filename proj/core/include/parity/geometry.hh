#pragma once

// Symbolic verification of the cyclic chart on the degeneration of the
// minuscule Grassmannian: the counterclockwise products p_{j,k}, the lines
// u_k = [p_{k,n} : p_{k,1} : ... : p_{k,n-1}], the embedding
// u = (x_1...x_n, u_1, ..., u_n), its inverse v, and torus equivariance.
//
// Everything is exact integer Laurent algebra in the chart coordinates
// x_1..x_n, the diagonal torus entries y_1..y_n, and the loop weight z.
// Proportionality of projective vectors is decided by vanishing of all
// 2x2 minors, so no denominators ever appear.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "parity/check.hh"

namespace parity {

inline constexpr int kChartMaxN = 12;
// Slots 0..kChartMaxN-1 hold x_1.., then y_1.., last slot holds z.
inline constexpr int kChartSlots = 2 * kChartMaxN + 1;

struct ChartMono {
  std::array<std::int16_t, kChartSlots> e{};

  bool operator==(const ChartMono&) const = default;
};

// Lexicographic with earlier variables dominating, so x1 leads x2^2.
struct ChartMonoLess {
  bool operator()(const ChartMono& a, const ChartMono& b) const { return a.e > b.e; }
};

// Laurent polynomial over Z; absent key means zero coefficient.
struct ChartPoly {
  std::map<ChartMono, long, ChartMonoLess> terms;

  bool operator==(const ChartPoly&) const = default;
};

ChartPoly ch_zero();
ChartPoly ch_one();
ChartPoly ch_x(int i);  // i in [1, kChartMaxN]
ChartPoly ch_y(int i);
ChartPoly ch_z();
ChartPoly ch_add(const ChartPoly& a, const ChartPoly& b);
ChartPoly ch_sub(const ChartPoly& a, const ChartPoly& b);
ChartPoly ch_mul(const ChartPoly& a, const ChartPoly& b);
bool ch_is_zero(const ChartPoly& a);
// Largest total degree in the x variables alone, -1 for the zero polynomial.
int ch_x_degree(const ChartPoly& a);
// "x1*x3^2", "y1*y2^-1*z", "x1 + 2*x2", "0".
std::string ch_text(const ChartPoly& a);

// Homogeneous coordinates of a line, not identically zero.
struct ProjVector {
  std::vector<ChartPoly> coords;

  bool operator==(const ProjVector&) const = default;
};

// Identity matrix except for one diagonal entry.
struct DiagonalMap {
  int index = 1;    // position of the modified entry, in [1, n]
  ChartPoly entry;  // the value placed there
};

// g(L): multiplies the indexed coordinate by the entry.
ProjVector apply_diagonal(const DiagonalMap& g, const ProjVector& L);

// All 2x2 minors of the pair vanish. Vectors must have equal size.
bool proportional(const ProjVector& a, const ProjVector& b);

// Product of the variables from x_j counterclockwise around the cycle to
// x_k, the full product replaced by the empty one.
ChartPoly p_poly(int j, int k, int n);

// u_k = [p_{k,n} : p_{k,1} : ... : p_{k,n-1}].
ProjVector chart_line(int n, int k);

// g_i(x_1...x_n) u_i lands on the cyclically next line, for every i.
bool chart_membership_check(int n, std::string* why = nullptr);

// The displayed quotients a_{i,i+1}/a_{ii} (a_{n1}/a_{nn} at the wrap)
// recover x_i on the image of u; the denominators are the literal unit
// coordinates. For n = 1 the inverse reads the base coordinate instead.
bool inverse_check(int n, std::string* why = nullptr);

// The monomial character scaling x_i: y_{i+1}/y_i for i < n, z y_1/y_n
// for i = n. Their product is the loop weight z.
ChartPoly chart_character(int n, int i);

// Scaling x_i by the character alpha_i (alpha_i = y_{i+1}/y_i, and
// alpha_n = z y_1/y_n) moves each line to its torus translate: the base
// coordinate picks up z and line k picks up y_m (plus z on the first k-1
// coordinates), up to global scale.
bool equivariance_check(int n, std::string* why = nullptr);

// Product rule double-check of p_poly, the degree bound deg < n, unit
// coordinates, membership, inversion, the full-product base, and
// equivariance, as named checks.
std::vector<Check> suite_chart(int n);

}  // namespace parity
