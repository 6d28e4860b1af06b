#pragma once

// Normal-form morphism calculus between the elementary objects E(I) on the
// stratified affine space. A morphism E(I) -> E(J) is determined by its
// endpoints and one Scalar: the letter word is forced (eps_i for
// i in I\J, eta_i for i in J\I; distinct-index letters commute). Composition
// reduces per index by eps_i eta_i = eta_i eps_i = alpha_i id, with the sign
// (-1)^{e_f * parity(g)} accounting for xibar crossing an odd morphism.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parity/scalar.hh"
#include "parity/strata.hh"

namespace parity {

struct NormalMorphism {
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  Scalar coef;
};

NormalMorphism nm_id(BaseRing R, int n, std::uint32_t I);
NormalMorphism nm_eps(BaseRing R, int n, std::uint32_t I, int i);  // i in I
NormalMorphism nm_eta(BaseRing R, int n, std::uint32_t I, int i);  // i not in I
NormalMorphism nm_scaled(const NormalMorphism& f, const Scalar& s);

int nm_word_length(const NormalMorphism& f);
// (word length + xibar count) mod 2: the parity that xibar crossings see.
int nm_parity(const NormalMorphism& f);

// g after f; throws std::logic_error unless f.target == g.source.
NormalMorphism nm_compose(const NormalMorphism& g, const NormalMorphism& f);
// Sum of two morphisms with identical endpoints (same forced word).
NormalMorphism nm_add(const NormalMorphism& a, const NormalMorphism& b);
NormalMorphism nm_neg(const NormalMorphism& a);

bool nm_equal(const NormalMorphism& a, const NormalMorphism& b);
bool nm_is_zero(const NormalMorphism& a);

// (hom, tate) degree as a map E(source) -> E(target); throws on zero scalar.
Bidegree nm_bidegree(const NormalMorphism& f);

// "e1*h3 @ a1", "id @ (a1 + a2)", "0"
std::string nm_word_text(const NormalMorphism& f);
std::string nm_text(const NormalMorphism& f);

// Append-only record of which strata invoked the unit-sum identity.
struct UsageLedger {
  std::set<std::pair<std::string, std::uint32_t>> events;

  void record(const std::string& tag, std::uint32_t stratum) {
    events.insert({tag, stratum});
  }
  void merge(const UsageLedger& other) {
    events.insert(other.events.begin(), other.events.end());
  }
  int max_stratum_size() const;
  bool all_strata_within(int bound) const;
};

inline constexpr const char* kUnitSumTag = "unit-sum";

// Sum_{i not in I} eps_i eta_i + Sum_{i in I} eta_i eps_i = xi id_{E(I)}.
// Always records (unit-sum, I): the identity holds only in the quotient.
bool unit_sum_check(BaseRing R, int n, std::uint32_t I, UsageLedger& ledger);

// eps_j eta_j + Sum_{i in core} eta_i eps_i = (Sum_{b in B} alpha_b) id_{E(I)}
// with j the tail of B. Holds already in the free ring; both the free and
// the quotient comparison are asserted. Preconditions: I n B = core, and I
// admits an acceptable order starting with the core in block order; throws
// std::invalid_argument otherwise.
bool block_unit_sum_check(BaseRing R, int n, const Block& B, std::uint32_t I);

// k-dimension of degree-d morphisms E(I) -> E(J){d}: zero below the word
// length or off parity, else monomials of degree (d-|I^J|)/2 in n variables.
std::int64_t hom_dimension(int n, std::uint32_t I, std::uint32_t J, int d);

}  // namespace parity
