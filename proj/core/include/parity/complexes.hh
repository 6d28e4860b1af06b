#pragma once

// Graded objects, matrix morphisms, and differentials in the three regimes.
//
// A Summand (I, t, h) sits at chain position p = -(t+h) with underlying
// object E(I){-t}; the Tate twist acts by <1> = {-1}[1], so <k> bumps t,
// [m] bumps h, and {s} trades t for h keeping p fixed. Matrices act on
// column vectors: entry (r, c) maps source summand c to target summand r.
// Every entry of a well-formed matrix satisfies the degree equation
//   j = l + tate(scalar) + (t2 - t1)
//   i = (p2 - p1) + l + hom(scalar) + (t2 - t1)
// with l the forced word length; a differential entry must land on (1, 0).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parity/morph.hh"

namespace parity {

struct Summand {
  std::uint32_t stratum = 0;
  int t = 0;
  int h = 0;

  int p() const { return -(t + h); }
  bool operator==(const Summand& o) const {
    return stratum == o.stratum && t == o.t && h == o.h;
  }
};

// Canonical order: p asc, t asc, |I| desc, members lex asc.
bool summand_canonical_less(const Summand& a, const Summand& b);

Summand su_twist(const Summand& s, int k);   // <k>
Summand su_shift(const Summand& s, int m);   // [m]
Summand su_tate(const Summand& s, int sig);  // {sig}

struct GradedObject {
  std::vector<Summand> summands;

  std::size_t size() const { return summands.size(); }
  bool operator==(const GradedObject& o) const {
    return summands == o.summands;
  }
  // Sorted copy plus the permutation taking old indices to new ones.
  GradedObject canonicalized(std::vector<int>* perm = nullptr) const;
};

GradedObject go_twist(const GradedObject& o, int k);
GradedObject go_shift(const GradedObject& o, int m);
GradedObject go_tate(const GradedObject& o, int sig);
GradedObject go_concat(const GradedObject& a, const GradedObject& b);

struct MatrixMorphism {
  GradedObject source;
  GradedObject target;
  std::map<std::pair<int, int>, NormalMorphism> entries;

  void set_entry(int row, int col, const NormalMorphism& nm);
  const NormalMorphism* entry(int row, int col) const;
};

MatrixMorphism mm_zero(const GradedObject& src, const GradedObject& tgt);
MatrixMorphism mm_identity(BaseRing R, int n, const GradedObject& obj);
// Diagonal matrix s * id; the target is retwisted by the scalar's bidegree
// so the result is again a (0,0)-shaped map onto obj[i]<-j>.
MatrixMorphism mm_scalar(BaseRing R, int n, const GradedObject& obj,
                         const Scalar& s);
// Diagonal s * id with source == target == obj; the degree stays in the
// entries (endo shape, like differentials and their products).
MatrixMorphism mm_diag(BaseRing R, int n, const GradedObject& obj,
                       const Scalar& s);

MatrixMorphism mm_add(const MatrixMorphism& a, const MatrixMorphism& b);
MatrixMorphism mm_sub(const MatrixMorphism& a, const MatrixMorphism& b);
MatrixMorphism mm_neg(const MatrixMorphism& a);
// g after f; throws std::logic_error unless f.target == g.source as objects.
MatrixMorphism mm_mul(const MatrixMorphism& g, const MatrixMorphism& f);
// Left-multiply every cell by s and retwist the target (endpoints follow).
MatrixMorphism scalar_mult_map(const Scalar& s, const MatrixMorphism& m);
// Move both endpoints; cells unchanged.
MatrixMorphism map_twist(const MatrixMorphism& m, int k);
MatrixMorphism map_shift(const MatrixMorphism& m, int shift);
MatrixMorphism map_tate(const MatrixMorphism& m, int sig);

bool mm_is_zero(const MatrixMorphism& a);
bool mm_equal(const MatrixMorphism& a, const MatrixMorphism& b);
// Equality that accepts relation-multiple cell differences, recording each
// accepted use of the unit-sum identity against the cell's strata.
bool mm_equal_with_ledger(const MatrixMorphism& a, const MatrixMorphism& b,
                          UsageLedger& ledger);

// The degree (i, j) of one entry per the equation above; throws on zero or
// non-homogeneous scalars.
Bidegree entry_bidegree(const MatrixMorphism& m, int row, int col);
// True when every entry has the given bidegree; first offender reported.
bool entries_have_bidegree(const MatrixMorphism& m, Bidegree expected,
                           std::string* why = nullptr);

enum class Regime { Gm, mix, mon };
std::string regime_name(Regime r);

struct DifferentialComplex {
  int n = 1;
  Regime regime = Regime::Gm;
  GradedObject object;
  MatrixMorphism differential;  // endo-shaped: source == target == object
};

struct ValidationResult {
  bool ok = true;
  std::string message;
};

// Entry degrees are (1,0); the regime condition holds:
//   Gm:  d^2 = 0           (entries free of xibar and r)
//   mix: d^2 + kappa(d) = 0 (entries may use xibar, never r)
//   mon: d^2 = r xi id      (entries may use r, never xibar)
// Relation-multiple discrepancies are accepted and ledgered.
ValidationResult validate(const DifferentialComplex& c, UsageLedger& ledger);

// Entrywise kappa(a + xibar b) = xi b; rejects entries carrying r.
MatrixMorphism kappa(const MatrixMorphism& m);

DifferentialComplex shift(const DifferentialComplex& c, int m);  // d -> -d per step
DifferentialComplex twist(const DifferentialComplex& c, int k);  // d unchanged

// Cone of a bidegree-(0,0) chain map: object Y + X[1], differential
// [[d_Y, phi], [0, -d_X]]. Throws std::invalid_argument if phi is not a
// chain map between the given complexes.
DifferentialComplex cone(const MatrixMorphism& phi,
                         const DifferentialComplex& x,
                         const DifferentialComplex& y);

// mix -> mon: split d = a + xibar c cellwise; object C + C<-2>[1];
// differential [[a, r id + c], [xi id, -a]].
DifferentialComplex mon(const DifferentialComplex& c);

bool is_chain_map(const MatrixMorphism& phi, const DifferentialComplex& x,
                  const DifferentialComplex& y);

// d H + H d == target, all three endo-shaped on one object.
bool homotopy_check(const MatrixMorphism& d, const MatrixMorphism& h,
                    const MatrixMorphism& target);

// Total complex of the two-variable pattern: strata I' u (I''+1), twists and
// shifts add, d' (x) id keeps its sign, id (x) d'' is weighted by (-1)^{p'}.
// Both inputs must be regime Gm with constant matrix coefficients; the first
// factor lives on the 1-variable space.
DifferentialComplex box_product(const DifferentialComplex& c1,
                                const DifferentialComplex& c2);
// Negative control hook: weight id (x) d'' by +1 uniformly instead.
DifferentialComplex box_product_unsigned(const DifferentialComplex& c1,
                                         const DifferentialComplex& c2);

}  // namespace parity
