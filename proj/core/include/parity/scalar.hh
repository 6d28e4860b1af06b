#pragma once

// The coefficient algebra A = k[alpha_1..alpha_{n-1}, xi] (x) k[r] (x)
// k[xibar]/(xibar^2), bigraded: alpha_i and xi in degree (2,2), r in (0,-2),
// xibar in (1,2). A Scalar is xibar^e * r^m * poly with poly stored in the
// free ring (alpha_n explicit); the quotient presentation with
// alpha_n = xi - alpha_1 - ... - alpha_{n-1} is the public canonical form and
// drives equality, zero tests, and serialization. A free-nonzero Scalar whose
// reduction vanishes is a multiple of the defining relation; cataloguing such
// cells is how unit-sum usage gets ledgered upstream.

#include <optional>
#include <string>

#include "parity/poly.hh"

namespace parity {

struct Bidegree {
  std::int64_t hom = 0;
  std::int64_t tate = 0;
  bool operator==(const Bidegree& o) const { return hom == o.hom && tate == o.tate; }
  Bidegree operator+(const Bidegree& o) const { return {hom + o.hom, tate + o.tate}; }
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(BaseRing R, int n) : ring_(R), n_(n) {}

  static Scalar zero(BaseRing R, int n) { return Scalar(R, n); }
  static Scalar one(BaseRing R, int n);
  static Scalar integer(BaseRing R, int n, std::int64_t v);
  static Scalar constant(BaseRing R, int n, const Coef& c);
  // i in [1, n]; alpha_n stays an explicit free variable until reduction
  static Scalar alpha(BaseRing R, int n, int i);
  static Scalar xi(BaseRing R, int n);
  static Scalar xibar(BaseRing R, int n);
  static Scalar r(BaseRing R, int n, int power = 1);

  const BaseRing& ring() const { return ring_; }
  int n() const { return n_; }
  int xibar_flag() const { return xibar_; }
  int r_power() const { return r_pow_; }
  const Poly& poly() const { return poly_; }

  // Zero in the quotient algebra (the real coefficient ring).
  bool is_zero() const;
  // Zero already in the free ring, before imposing the relation.
  bool free_is_zero() const { return poly_.is_zero(); }
  // Free-nonzero but quotient-zero: a multiple of alpha_1+...+alpha_n - xi.
  bool is_relation_multiple() const { return !free_is_zero() && is_zero(); }

  // Canonical form: poly reduced to the alpha_1..alpha_{n-1}, xi basis.
  Scalar reduced() const;

  // Same polynomial and r power with the xibar flag cleared.
  Scalar without_xibar() const;

  bool equals(const Scalar& o) const;

  // True if the scalar equals c * xibar^e * r^m * (monomial-free constant 1)
  // with the given parts; convenience for tests.
  bool is_one() const;

  friend Scalar scalar_mul(const Scalar& a, const Scalar& b);
  friend Scalar scalar_add(const Scalar& a, const Scalar& b);
  friend Scalar scalar_neg(const Scalar& a);
  friend Scalar scalar_scale(const Scalar& a, std::int64_t v);

  // Degree of the (free or reduced, they agree) polynomial part; errors on
  // non-homogeneous input. Zero scalar is rejected like any other input
  // without a unique bidegree.
  Bidegree bidegree() const;
  bool homogeneous() const;

  // Canonical text form, e.g. "xb*r^2*(a1^2*x + 3*a2)". Reduced first.
  std::string text() const;
  static Scalar parse(BaseRing R, int n, const std::string& text);

 private:
  void canonicalize();

  BaseRing ring_{};
  int n_ = 1;
  int xibar_ = 0;
  int r_pow_ = 0;
  Poly poly_;
};

// The canonical polynomial for alpha_n in the quotient basis.
Scalar expand_alpha_n(BaseRing R, int n);

Bidegree bidegree_of(const Scalar& a);

}  // namespace parity
