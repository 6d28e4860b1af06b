#include "parity/weyl.hh"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "parity/strata.hh"

using namespace parity;

namespace {

void require_all(const std::vector<Check>& checks) {
  for (const Check& c : checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.ok);
  }
}

ExtAffineElement from_word(int n, std::vector<int> letters, int omega) {
  return word_element(ReducedWord{n, std::move(letters), omega});
}

}  // namespace

TEST_CASE("group laws") {
  for (int n = 2; n <= 5; ++n) {
    ExtAffineElement e = wext_identity(n);
    for (int i = 1; i <= n; ++i) {
      ExtAffineElement s = simple_reflection(n, i);
      CHECK(wext_mul(s, s) == e);
      CHECK(wext_inv(s) == s);
      CHECK(wext_length(s) == 1);
    }
  }
  for (int n = 1; n <= 6; ++n) {
    ExtAffineElement e = wext_identity(n);
    ExtAffineElement p = e;
    for (int k = 1; k <= n; ++k) {
      p = wext_mul(p, omega_element(n));
      CHECK(wext_length(p) == 0);
      CHECK((p == e) == (k == n));
    }
    ExtAffineElement prod = e;
    for (int i = 1; i <= n; ++i) prod = wext_mul(prod, fundamental_translation(n, i).first);
    CHECK(prod == e);
  }
}

TEST_CASE("translations compose additively and conjugate by coordinates") {
  CHECK(wext_mul(translation({1, 0, 0}), translation({0, 0, 2})) == translation({1, 0, 2}));
  CHECK(wext_mul(translation({1, -1}), translation({-1, 1})) == wext_identity(2));
  // s_1 t_{(1,0,0)} s_1 = t_{(0,1,0)}
  ExtAffineElement s1 = simple_reflection(3, 1);
  CHECK(wext_mul(wext_mul(s1, translation({1, 0, 0})), s1) == translation({0, 1, 0}));
  ExtAffineElement om = omega_element(4);
  CHECK(wext_mul(wext_mul(om, translation({0, 1, 0, 0})), wext_inv(om)) ==
        translation({0, 0, 1, 0}));
}

TEST_CASE("length by inversion count") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(wext_length(wext_identity(n)) == 0);
    CHECK(wext_length(omega_element(n)) == 0);
    for (int i = 1; i <= n; ++i) CHECK(wext_length(fundamental_translation(n, i).first) == n - 1);
  }
  // Multiples of a fundamental coweight scale its length.
  CHECK(wext_length(translation({2, 0})) == 2);
  CHECK(wext_length(translation({3, 0, 0})) == 6);
}

TEST_CASE("omega conjugation shifts generator indices cyclically") {
  CHECK(omega_conjugate(3, 1) == 2);
  CHECK(omega_conjugate(3, 2) == 3);
  CHECK(omega_conjugate(3, 3) == 1);
  CHECK(omega_conjugate(2, 1) == 2);
  CHECK(omega_conjugate(2, 2) == 1);
  for (int i = 1; i <= 5; ++i) CHECK(omega_conjugate(5, i) == i % 5 + 1);
}

TEST_CASE("fundamental translation words") {
  auto [t3, w3] = fundamental_translation(3, 3);
  CHECK(w3.letters == std::vector<int>{2, 1});
  CHECK(t3 == translation({0, 0, 1}));
  auto [t1, w1] = fundamental_translation(3, 1);
  CHECK(w1.letters == std::vector<int>{3, 2});
  CHECK(t1 == translation({1, 0, 0}));
  auto [t, w] = fundamental_translation(1, 1);
  CHECK(w.letters.empty());
  CHECK(t == wext_identity(1));
  // n=4, i=2 wraps through the affine letter: s_1 s_4 s_3.
  CHECK(fundamental_translation(4, 2).second.letters == std::vector<int>{1, 4, 3});
}

TEST_CASE("reduced words round trip") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      ExtAffineElement t = fundamental_translation(n, i).first;
      ReducedWord w = reduced_word(t);
      CHECK(static_cast<long>(w.letters.size()) == wext_length(t));
      CHECK(word_element(w) == t);
    }
    for (const auto& a : admissible_elements(n)) {
      ReducedWord w = reduced_word(a.element);
      CHECK(word_element(w) == a.element);
      CHECK(w.omega == 1);
    }
  }
}

TEST_CASE("bruhat order by the subword property") {
  for (int n : {3, 4}) {
    ExtAffineElement om = omega_element(n);
    for (int i = 1; i <= n; ++i) CHECK(bruhat_leq(om, fundamental_translation(n, i).first));
  }
  CHECK(bruhat_leq(from_word(4, {1}, 1), from_word(4, {1, 3}, 1)));
  CHECK(bruhat_leq(from_word(4, {3}, 1), from_word(4, {1, 3}, 1)));
  for (int n : {2, 3, 5}) {
    CHECK_FALSE(bruhat_leq(fundamental_translation(n, 1).first,
                           fundamental_translation(n, 2).first));
    // Equal lengths but different omega components never compare.
    CHECK_FALSE(bruhat_leq(wext_identity(n), fundamental_translation(n, 1).first));
  }
}

TEST_CASE("admissible elements are labeled by proper subsets") {
  auto adm2 = admissible_elements(2);
  REQUIRE(adm2.size() == 3);
  std::set<ExtAffineElement> got;
  for (const auto& a : adm2) got.insert(a.element);
  std::set<ExtAffineElement> want{omega_element(2), from_word(2, {1}, 1), from_word(2, {2}, 1)};
  CHECK(got == want);

  CHECK(admissible_elements(3).size() == 7);
  for (int n = 1; n <= 8; ++n)
    CHECK(admissible_elements(n).size() == (1u << n) - 1);

  // Non-adjacent letters commute: both acceptable orders of {1,3} agree.
  std::uint32_t mask = subset_from_members({1, 3});
  auto orders = acceptable_orders(4, mask);
  std::set<std::vector<int>> order_set(orders.begin(), orders.end());
  CHECK(order_set == std::set<std::vector<int>>{{1, 3}, {3, 1}});
  CHECK(from_word(4, {1, 3}, 1) == from_word(4, {3, 1}, 1));
  for (const auto& a : admissible_elements(4))
    if (a.subset == mask) CHECK(a.element == from_word(4, {1, 3}, 1));
}

TEST_CASE("hecke subexpression coefficients") {
  // (T_1 + 1)(T_3 + 1) expands over the four subwords with unit weight.
  HeckeElement h = hecke_subexpression_check(ReducedWord{4, {1, 3}, 0});
  REQUIRE(h.terms.size() == 4);
  const QPoly one = qp_int(1);
  CHECK(h.terms.at(wext_identity(4)) == one);
  CHECK(h.terms.at(simple_reflection(4, 1)) == one);
  CHECK(h.terms.at(simple_reflection(4, 3)) == one);
  CHECK(h.terms.at(from_word(4, {1, 3}, 0)) == one);

  for (int i = 1; i <= 3; ++i) {
    HeckeElement hi = hecke_subexpression_check(fundamental_translation(3, i).second);
    CHECK(hi.terms.size() == 4);
    for (const auto& [w, c] : hi.terms) CHECK(c == one);
  }

  // (T_1 + 1)^2 = (q + 1)(T_1 + 1): the repeated letter is detected.
  HeckeElement rep = hecke_subexpression_check(ReducedWord{4, {1, 1}, 0});
  const QPoly qp1 = qp_add(qp_q(), qp_int(1));
  REQUIRE(rep.terms.size() == 2);
  CHECK(rep.terms.at(simple_reflection(4, 1)) == qp1);
  CHECK(rep.terms.at(wext_identity(4)) == qp1);
}

TEST_CASE("q polynomial arithmetic and text") {
  CHECK(qp_text(qp_int(0)) == "0");
  CHECK(qp_text(qp_int(1)) == "1");
  CHECK(qp_text(qp_add(qp_q(), qp_int(1))) == "q+1");
  CHECK(qp_text(qp_mul(qp_q(), qp_add(qp_q(), qp_int(-1)))) == "q^2-q");
  CHECK(qp_is_zero(qp_add(qp_q(), qp_mul(qp_int(-1), qp_q()))));
}

TEST_CASE("element serialization") {
  CHECK(element_text(omega_element(3)) == "{perm: [2,3,1], coweight: [1,0,0], omega: 1}");
  CHECK(element_text(wext_identity(2)) == "{perm: [1,2], coweight: [0,0], omega: 0}");
  CHECK(element_text(simple_reflection(3, 3)) ==
        "{perm: [3,2,1], coweight: [2,1,0], omega: 0}");
}

TEST_CASE("weyl suite stays green") {
  for (int n = 1; n <= 6; ++n) {
    INFO("n = ", n);
    require_all(suite_weyl(n));
  }
}
