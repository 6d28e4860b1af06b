#pragma once

// Extended affine symmetric group for PGL_n and its Hecke algebra.
//
// Elements are pairs (perm, coweight) in S_n x (Z^n mod the all-ones
// vector), acting on v by v -> perm(v) + coweight, so that translations
// compose additively and w t_v w^{-1} = t_{wv}. The coweight class is
// stored with minimum entry zero. Generators: s_1..s_{n-1} swap adjacent
// coordinates; s_n is the affine reflection through the highest root,
// s_n = (swap 1,n) followed by translation by (1,0,...,0,-1); omega is
// the length-zero rotation with omega^n = e conjugating s_i to s_{i+1}.
//
// Length is the affine inversion count of the window permutation
// u(i) = perm(i) + n * coweight[perm(i)], cross-checked against a
// breadth-first word-enumeration oracle in the suite. Words are lists of
// generator letters followed by a power of omega; Bruhat comparison uses
// the subword property at equal omega powers.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parity/check.hh"

namespace parity {

// ---------------------------------------------------------------- elements

struct ExtAffineElement {
  int n = 0;
  std::vector<int> perm;       // one-line notation, images in [1, n]
  std::vector<long> coweight;  // class representative, minimum entry zero

  bool operator==(const ExtAffineElement&) const = default;
};

// Lexicographic on (n, perm, coweight); usable as a map key.
bool operator<(const ExtAffineElement& a, const ExtAffineElement& b);

ExtAffineElement wext_identity(int n);
// i in [1, n]; n >= 2. Index n is the affine reflection.
ExtAffineElement simple_reflection(int n, int i);
ExtAffineElement omega_element(int n);
ExtAffineElement translation(const std::vector<long>& coweight);

ExtAffineElement wext_mul(const ExtAffineElement& x, const ExtAffineElement& y);
ExtAffineElement wext_inv(const ExtAffineElement& x);

// Image in the component group <omega> = Z/n: coordinate sum mod n.
int omega_power(const ExtAffineElement& x);
// Affine inversion count; zero exactly on the powers of omega.
long wext_length(const ExtAffineElement& x);

// "{perm: [2,3,1], coweight: [1,0,0], omega: 1}"
std::string element_text(const ExtAffineElement& x);

// ------------------------------------------------------------------- words

struct ReducedWord {
  int n = 0;
  std::vector<int> letters;  // generator indices, each in [1, n]
  int omega = 0;             // trailing power of omega, in [0, n)

  bool operator==(const ReducedWord&) const = default;
};

// s_{i_1} ... s_{i_k} omega^m evaluated left to right.
ExtAffineElement word_element(const ReducedWord& w);
// Leftmost-descent peeling of the finite part, omega power split off first.
ReducedWord reduced_word(const ExtAffineElement& x);

// The index j with omega s_i omega^{-1} = s_j, computed by conjugation and
// verified against the cyclic shift i+1 (n for 0). n >= 2.
int omega_conjugate(int n, int i);

// The translation by the i-th coordinate vector together with its displayed
// word s_{i-1} s_{i-2} ... s_{i+1} omega (letters cyclic mod n, n-1 of
// them). Verifies that the word multiplies out to the translation.
std::pair<ExtAffineElement, ReducedWord> fundamental_translation(int n, int i);

// Subword property at equal omega powers; false on power mismatch.
bool bruhat_leq(const ExtAffineElement& x, const ExtAffineElement& y);

// ------------------------------------------------------------- admissibles

struct AdmissibleElement {
  std::uint32_t subset = 0;  // proper subset of [n], bit i-1 for member i
  ExtAffineElement element;  // s_{i_1} ... s_{i_k} omega over any acceptable order
  ReducedWord word;          // the first acceptable order
};

// The 2^n - 1 admissible elements indexed by proper subsets, sorted by
// subset mask; each uses the acceptable orders of its subset. Verifies
// order-independence of each element, the count, and agreement with the
// set of subexpressions of the n extreme translation words; throws on any
// failure.
std::vector<AdmissibleElement> admissible_elements(int n);

// ------------------------------------------------------------------- hecke

// Dense integer polynomial in q, ascending powers, no trailing zeros.
struct QPoly {
  std::vector<long> c;

  bool operator==(const QPoly&) const = default;
};

QPoly qp_int(long v);
QPoly qp_q();
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
bool qp_is_zero(const QPoly& a);
std::string qp_text(const QPoly& a);

// Finitely supported sum of standard basis elements T_x with coefficients
// in Z[q]; the quadratic relation is (T_s - q)(T_s + 1) = 0.
struct HeckeElement {
  std::map<ExtAffineElement, QPoly> terms;
};

HeckeElement hecke_basis(const ExtAffineElement& x);
HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b);
// T_{s_i} * h via the length dichotomy:
// T_s T_w = T_{sw} when l(sw) > l(w), else (q-1) T_w + q T_{sw}.
HeckeElement hecke_generator_mul(int n, int i, const HeckeElement& h);
// (T_{s_{i_1}} + 1) ... (T_{s_{i_k}} + 1) T_{omega^m}. For a reduced word
// with no repeated letter the coefficients enumerate the subexpressions,
// all equal to 1; repetitions inflate them.
HeckeElement hecke_subexpression_check(const ReducedWord& w);

// ------------------------------------------------------------------ oracle

// Coxeter lengths of every element of the finite-part group within the
// given word-length radius, by breadth-first enumeration.
std::map<ExtAffineElement, int> coxeter_ball(int n, int radius);

// ------------------------------------------------------------------- suite

// Group laws, lengths against the ball, admissible classification with its
// Bruhat-ball cross-check (radius-limited checks gate at n <= 5), and the
// Hecke coefficient criteria.
std::vector<Check> suite_weyl(int n);

}  // namespace parity
