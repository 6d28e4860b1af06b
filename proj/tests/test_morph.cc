#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "parity/morph.hh"

using namespace parity;

namespace {

const BaseRing kZ = BaseRing::Z();

// Oracle: count monomials of degree e in v variables by direct enumeration.
std::int64_t count_monomials(int v, int e) {
  if (v == 1) return 1;
  std::int64_t total = 0;
  for (int k = 0; k <= e; ++k) total += count_monomials(v - 1, e - k);
  return total;
}

Scalar random_pure_scalar(const BaseRing& R, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> var(0, n);
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<int> rpow(0, 2);
  std::uniform_int_distribution<int> flag(0, 1);
  Scalar s = Scalar::integer(R, n, coef(rng));
  int d = deg(rng);
  for (int j = 0; j < d; ++j) {
    int v = var(rng);
    s = scalar_mul(s, v == n ? Scalar::xi(R, n) : Scalar::alpha(R, n, v + 1));
  }
  s = scalar_mul(s, Scalar::r(R, n, rpow(rng)));
  if (flag(rng)) s = scalar_mul(s, Scalar::xibar(R, n));
  return s;
}

NormalMorphism random_morphism(const BaseRing& R, int n, std::uint32_t src,
                               std::uint32_t tgt, std::mt19937& rng) {
  return {src, tgt, random_pure_scalar(R, n, rng)};
}

}  // namespace

TEST_CASE("generator composition relations") {
  int n = 2;
  // eps_1 eta_1 on E({}) -> alpha_1 id
  auto ee = nm_compose(nm_eps(kZ, n, 0b01, 1), nm_eta(kZ, n, 0, 1));
  CHECK(ee.source == 0);
  CHECK(ee.target == 0);
  CHECK(ee.coef.equals(Scalar::alpha(kZ, n, 1)));

  // eta_1 eps_1 on E({1}) -> alpha_1 id
  auto he = nm_compose(nm_eta(kZ, n, 0, 1), nm_eps(kZ, n, 0b01, 1));
  CHECK(he.source == 0b01);
  CHECK(he.target == 0b01);
  CHECK(he.coef.equals(Scalar::alpha(kZ, n, 1)));

  // disjoint indices: no relation fires, word survives
  auto mixed = nm_compose(nm_eps(kZ, n, 0b11, 1), nm_eta(kZ, n, 0b01, 2));
  CHECK(mixed.source == 0b01);
  CHECK(mixed.target == 0b10);
  CHECK(mixed.coef.is_one());
  CHECK(nm_bidegree(mixed) == Bidegree{2, 2});
  CHECK(nm_word_text(mixed) == "e1*h2");

  CHECK_THROWS_AS(nm_compose(nm_eps(kZ, n, 0b01, 1), nm_eps(kZ, n, 0b10, 2)),
                  std::logic_error);
  CHECK_THROWS_AS(nm_eps(kZ, n, 0b10, 1), std::invalid_argument);
  CHECK_THROWS_AS(nm_eta(kZ, n, 0b10, 2), std::invalid_argument);
}

TEST_CASE("identity is neutral and bidegrees add") {
  std::mt19937 rng(11);
  int n = 4;
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::uint32_t> mask(0, full_subset(n));
    std::uint32_t a = mask(rng), b = mask(rng);
    NormalMorphism f = random_morphism(kZ, n, a, b, rng);
    CHECK(nm_equal(nm_compose(nm_id(kZ, n, b), f), f));
    CHECK(nm_equal(nm_compose(f, nm_id(kZ, n, a)), f));

    std::uint32_t c = mask(rng);
    NormalMorphism g = random_morphism(kZ, n, b, c, rng);
    NormalMorphism gf = nm_compose(g, f);
    if (!nm_is_zero(gf) && !f.coef.free_is_zero() && !g.coef.free_is_zero())
      CHECK(nm_bidegree(gf) == nm_bidegree(f) + nm_bidegree(g));
  }
}

TEST_CASE("composition is associative, xibar signs included") {
  std::mt19937 rng(20250819);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<std::uint32_t> mask(0, full_subset(n));
      std::uint32_t a = mask(rng), b = mask(rng), c = mask(rng), d = mask(rng);
      NormalMorphism f = random_morphism(kZ, n, a, b, rng);
      NormalMorphism g = random_morphism(kZ, n, b, c, rng);
      NormalMorphism h = random_morphism(kZ, n, c, d, rng);
      NormalMorphism lhs = nm_compose(nm_compose(h, g), f);
      NormalMorphism rhs = nm_compose(h, nm_compose(g, f));
      CAPTURE(n);
      CHECK(nm_equal(lhs, rhs));
    }
  }
}

TEST_CASE("xibar anticommutes with odd words") {
  int n = 2;
  NormalMorphism eps = nm_eps(kZ, n, 0b01, 1);
  NormalMorphism xb_src = nm_scaled(nm_id(kZ, n, 0b01), Scalar::xibar(kZ, n));
  NormalMorphism xb_tgt = nm_scaled(nm_id(kZ, n, 0), Scalar::xibar(kZ, n));
  // xibar id after eps: no crossing, plus sign
  NormalMorphism a = nm_compose(xb_tgt, eps);
  // eps after xibar id: xibar crosses the odd letter, minus sign
  NormalMorphism b = nm_compose(eps, xb_src);
  CHECK(nm_equal(a, nm_neg(b)));
  CHECK(a.coef.xibar_flag() == 1);
}

TEST_CASE("distinct-index interleavings are confluent") {
  std::mt19937 rng(99);
  int n = 5;
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::uint32_t> mask(0, full_subset(n));
    std::uint32_t start = mask(rng);
    std::uint32_t flips = mask(rng);
    std::vector<int> idx = subset_members(flips);
    if (idx.empty()) continue;

    auto apply_in_order = [&](const std::vector<int>& order) {
      NormalMorphism acc = nm_id(kZ, n, start);
      std::uint32_t cur = start;
      for (int i : order) {
        NormalMorphism letter = ((cur >> (i - 1)) & 1u)
                                    ? nm_eps(kZ, n, cur, i)
                                    : nm_eta(kZ, n, cur, i);
        acc = nm_compose(letter, acc);
        cur ^= 1u << (i - 1);
      }
      return acc;
    };

    NormalMorphism first = apply_in_order(idx);
    std::vector<int> shuffled = idx;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(nm_equal(first, apply_in_order(shuffled)));
    CHECK(first.source == start);
    CHECK(first.target == (start ^ flips));
    CHECK(first.coef.is_one());
  }
}

TEST_CASE("unit-sum identity holds on every stratum and is ledgered") {
  for (int n = 1; n <= 8; ++n) {
    UsageLedger ledger;
    for (std::uint32_t I = 0; I <= full_subset(n); ++I) {
      CAPTURE(n);
      CAPTURE(subset_text(I));
      CHECK(unit_sum_check(kZ, n, I, ledger));
      CHECK(ledger.events.count({kUnitSumTag, I}) == 1);
    }
    CHECK(ledger.events.size() == (1u << n));
    CHECK(ledger.max_stratum_size() == n);
    CHECK(ledger.all_strata_within(n));
    CHECK_FALSE(ledger.all_strata_within(n - 1));
  }

  // worked instances
  UsageLedger l2;
  CHECK(unit_sum_check(kZ, 1, 0, l2));
  CHECK(unit_sum_check(BaseRing::Q(), 2, 0b01, l2));
  CHECK(unit_sum_check(BaseRing::GF(2), 3, full_subset(3), l2));
}

TEST_CASE("ledger merge is set union") {
  UsageLedger a, b;
  a.record(kUnitSumTag, 0b01);
  b.record(kUnitSumTag, 0b01);
  b.record(kUnitSumTag, 0b111);
  a.merge(b);
  CHECK(a.events.size() == 2);
  CHECK(a.max_stratum_size() == 3);
}

TEST_CASE("block identity holds in the free ring") {
  // block {1,2} in n=3 has order (2,1): core {2}, tail 1
  Block b12{{2, 1}};
  CHECK(block_unit_sum_check(kZ, 3, b12, subset_from_members({2})));

  // singleton block: tail only
  Block b3{{3}};
  CHECK(block_unit_sum_check(kZ, 3, b3, 0));
  CHECK(block_unit_sum_check(kZ, 3, b3, subset_from_members({1})));

  // block {3,4} in n=4 has order (4,3): core {4}, tail 3; I = {2,4} admits
  // the acceptable order (4,2) which starts with the core
  Block b43{{4, 3}};
  CHECK(block_unit_sum_check(kZ, 4, b43, subset_from_members({2, 4})));
  // ... but I = {1,4} admits only (1,4), which does not
  CHECK_THROWS_AS(block_unit_sum_check(kZ, 4, b43, subset_from_members({1, 4})),
                  std::invalid_argument);

  // preconditions are enforced
  CHECK_THROWS_AS(block_unit_sum_check(kZ, 3, b12, subset_from_members({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(block_unit_sum_check(kZ, 3, b3, subset_from_members({3})),
                  std::invalid_argument);
}

TEST_CASE("block identities over a decomposition sum to the unit-sum") {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint32_t I = 0; I <= full_subset(n); ++I) {
      if (subset_size(I) > n - 2) continue;
      CAPTURE(n);
      CAPTURE(subset_text(I));
      auto dec = block_decomposition(n, I);
      NormalMorphism acc = {I, I, Scalar::zero(kZ, n)};
      Scalar alpha_total = Scalar::zero(kZ, n);
      for (const auto& B : dec) {
        CHECK(block_unit_sum_check(kZ, n, B, I));
        int j = B.tail();
        NormalMorphism lhs = nm_compose(nm_eps(kZ, n, I | (1u << (j - 1)), j),
                                        nm_eta(kZ, n, I, j));
        for (int i : subset_members(B.core()))
          lhs = nm_add(lhs, nm_compose(nm_eta(kZ, n, I & ~(1u << (i - 1)), i),
                                       nm_eps(kZ, n, I, i)));
        acc = nm_add(acc, lhs);
        for (int bb : B.order)
          alpha_total = scalar_add(alpha_total, Scalar::alpha(kZ, n, bb));
      }
      // free-ring total: all n alphas, one per element of [n]
      CHECK(p_sub(kZ, acc.coef.poly(), alpha_total.poly()).is_zero());
      // quotient total: the unit-sum right-hand side
      CHECK(acc.coef.equals(Scalar::xi(kZ, n)));
    }
  }
}

TEST_CASE("hom dimensions match the monomial count oracle") {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint32_t I = 0; I <= full_subset(n); I += 3) {
      for (std::uint32_t J = 0; J <= full_subset(n); J += 2) {
        for (int d = 0; d <= 12; ++d) {
          int l = subset_size(I ^ J);
          std::int64_t expect =
              (d < l || ((d - l) & 1)) ? 0 : count_monomials(n, (d - l) / 2);
          CAPTURE(n);
          CAPTURE(d);
          CHECK(hom_dimension(n, I, J, d) == expect);
        }
      }
    }
  }
  // spec-level worked values
  CHECK(hom_dimension(2, 0b01, 0b01, 0) == 1);
  CHECK(hom_dimension(2, 0b01, 0, 1) == 1);
  CHECK(hom_dimension(2, 0, 0, 1) == 0);
}

TEST_CASE("morphism text forms") {
  int n = 3;
  CHECK(nm_text(nm_eps(kZ, n, 0b001, 1)) == "e1 @ 1");
  CHECK(nm_text(nm_id(kZ, n, 0b101)) == "id @ 1");
  auto a1id = nm_scaled(nm_id(kZ, n, 0), Scalar::alpha(kZ, n, 1));
  CHECK(nm_text(a1id) == "id @ a1");
  auto sum = nm_scaled(nm_id(kZ, n, 0),
                       scalar_add(Scalar::alpha(kZ, n, 1),
                                  Scalar::alpha(kZ, n, 2)));
  CHECK(nm_text(sum) == "id @ (a1 + a2)");
  auto word = nm_compose(nm_eps(kZ, n, 0b011, 1), nm_eta(kZ, n, 0b001, 2));
  CHECK(nm_text(word) == "e1*h2 @ 1");
  CHECK(nm_text(nm_scaled(word, Scalar::xibar(kZ, n))) == "e1*h2 @ xb");
  NormalMorphism zero = {0, 0, Scalar::zero(kZ, n)};
  CHECK(nm_text(zero) == "0");
}
