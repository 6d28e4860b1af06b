#pragma once

// Sparse multivariate polynomials over a BaseRing in the "free" variable set
// alpha_1..alpha_n, xi. alpha_n is kept as an explicit variable here; the
// quotient presentation (alpha_n = xi - alpha_1 - ... - alpha_{n-1}) is
// obtained by reduce(). Keeping the free form around is what lets callers
// detect exactly when an identity needs the quotient relation.

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "parity/ring.hh"

namespace parity {

inline constexpr int kMaxN = 16;
// Exponent slots: 0..kMaxN-1 hold alpha_1..alpha_16, slot kMaxN holds xi.
inline constexpr int kXiSlot = kMaxN;
inline constexpr int kSlots = kMaxN + 1;

struct Mono {
  std::array<std::uint8_t, kSlots> e{};

  int total_degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool operator==(const Mono& o) const { return e == o.e; }
};

// Graded lexicographic, alpha_1 > alpha_2 > ... > alpha_16 > xi, compared so
// that map iteration starts at the leading monomial.
struct MonoGradedLexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    for (int i = 0; i < kSlots; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }
};

class Poly {
 public:
  using Terms = std::map<Mono, Coef, MonoGradedLexGreater>;

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly constant(const BaseRing& R, std::int64_t v);
  static Poly from_coef(const Coef& c);  // zero coefficient collapses to zero
  // var slot in [0, kSlots)
  static Poly variable(const BaseRing& R, int slot, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(const BaseRing& R, const Mono& m, const Coef& c);

  friend Poly p_add(const BaseRing& R, const Poly& a, const Poly& b);
  friend Poly p_sub(const BaseRing& R, const Poly& a, const Poly& b);
  friend Poly p_mul(const BaseRing& R, const Poly& a, const Poly& b);
  friend Poly p_neg(const BaseRing& R, const Poly& a);
  friend Poly p_scale(const BaseRing& R, const Coef& c, const Poly& a);

  bool operator==(const Poly& o) const;

  // True when every monomial has the same total degree (alpha_i and xi all
  // carry the same bidegree, so this is the right homogeneity notion).
  // Zero counts as homogeneous of degree 0.
  bool homogeneous(int* degree_out = nullptr) const;

  // Substitutes alpha_n := xi - alpha_1 - ... - alpha_{n-1}; n = 1 maps
  // alpha_1 to xi. The result uses only slots 0..n-2 and xi.
  Poly reduce(const BaseRing& R, int n) const;

 private:
  Terms terms_;
};

}  // namespace parity
