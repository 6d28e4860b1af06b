#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "parity/scalar.hh"

using namespace parity;

namespace {

const BaseRing kZ = BaseRing::Z();
const BaseRing kQ = BaseRing::Q();

Scalar random_poly_scalar(const BaseRing& R, int n, std::mt19937& rng,
                          int max_terms = 4) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<int> var(0, n);  // n means xi
  Scalar out = Scalar::zero(R, n);
  int k = terms(rng);
  for (int t = 0; t < k; ++t) {
    Scalar term = Scalar::integer(R, n, coef(rng));
    int d = deg(rng);
    for (int j = 0; j < d; ++j) {
      int v = var(rng);
      term = scalar_mul(term, v == n ? Scalar::xi(R, n)
                                     : Scalar::alpha(R, n, v + 1));
    }
    out = scalar_add(out, term);
  }
  return out;
}

Scalar random_homogeneous_scalar(const BaseRing& R, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> coef(1, 5);
  std::uniform_int_distribution<int> var(0, n);
  std::uniform_int_distribution<int> rpow(0, 2);
  std::uniform_int_distribution<int> flag(0, 1);
  int d = deg(rng);
  Scalar out = Scalar::zero(R, n);
  int k = terms(rng);
  for (int t = 0; t < k; ++t) {
    Scalar term = Scalar::integer(R, n, coef(rng));
    for (int j = 0; j < d; ++j) {
      int v = var(rng);
      term = scalar_mul(term, v == n ? Scalar::xi(R, n)
                                     : Scalar::alpha(R, n, v + 1));
    }
    out = scalar_add(out, term);
  }
  out = scalar_mul(out, Scalar::r(R, n, rpow(rng)));
  if (flag(rng)) out = scalar_mul(out, Scalar::xibar(R, n));
  return out;
}

}  // namespace

TEST_CASE("coefficient arithmetic over the three base rings") {
  SUBCASE("integers") {
    Coef a = c_from_int(kZ, 7), b = c_from_int(kZ, -3);
    CHECK(c_text(c_add(kZ, a, b)) == "4");
    CHECK(c_text(c_mul(kZ, a, b)) == "-21");
    CHECK(c_text(c_inv(kZ, c_from_int(kZ, -1))) == "-1");
    CHECK_THROWS_AS(c_inv(kZ, c_from_int(kZ, 2)), RingError);
  }
  SUBCASE("rationals reduce and round-trip") {
    Coef h = c_parse(kQ, "2/6");
    CHECK(c_text(h) == "1/3");
    Coef s = c_add(kQ, h, c_parse(kQ, "1/6"));
    CHECK(c_text(s) == "1/2");
    CHECK(c_text(c_inv(kQ, c_parse(kQ, "-2/5"))) == "-5/2");
  }
  SUBCASE("prime fields normalize to [0, p)") {
    BaseRing F7 = BaseRing::GF(7);
    CHECK(c_text(c_from_int(F7, -1)) == "6");
    CHECK(c_text(c_mul(F7, c_from_int(F7, 3), c_from_int(F7, 5))) == "1");
    CHECK(c_text(c_inv(F7, c_from_int(F7, 3))) == "5");
    CHECK_THROWS_AS(BaseRing::GF(4), RingError);
    CHECK_THROWS_AS(BaseRing::GF(1), RingError);
  }
  SUBCASE("overflow is loud, not silent") {
    Coef big = c_from_int(kZ, (std::int64_t{1} << 62));
    CHECK_THROWS_AS(c_mul(kZ, big, c_from_int(kZ, 4)), RingError);
  }
  SUBCASE("ring names and parsing") {
    CHECK(kZ.name() == "z");
    CHECK(kQ.name() == "q");
    CHECK(BaseRing::GF(11).name() == "gf:11");
    CHECK(ring_from_text("gf:11") == BaseRing::GF(11));
    CHECK(ring_from_text("z") == kZ);
    CHECK_THROWS_AS(ring_from_text("gf:9"), RingError);
  }
}

TEST_CASE("generator bidegrees") {
  int n = 3;
  CHECK(Scalar::alpha(kZ, n, 1).bidegree() == Bidegree{2, 2});
  CHECK(Scalar::alpha(kZ, n, 3).bidegree() == Bidegree{2, 2});
  CHECK(Scalar::xi(kZ, n).bidegree() == Bidegree{2, 2});
  CHECK(Scalar::xibar(kZ, n).bidegree() == Bidegree{1, 2});
  CHECK(Scalar::r(kZ, n).bidegree() == Bidegree{0, -2});
  CHECK(Scalar::r(kZ, n, 3).bidegree() == Bidegree{0, -6});

  // products
  Scalar rxi = scalar_mul(Scalar::r(kZ, n), Scalar::xi(kZ, n));
  CHECK(rxi.bidegree() == Bidegree{2, 0});
  Scalar xbr = scalar_mul(Scalar::xibar(kZ, n), Scalar::r(kZ, n));
  CHECK(xbr.bidegree() == Bidegree{1, 0});

  CHECK_THROWS_AS(Scalar::zero(kZ, n).bidegree(), std::invalid_argument);
  Scalar inhom = scalar_add(Scalar::alpha(kZ, n, 1),
                            scalar_mul(Scalar::xi(kZ, n), Scalar::xi(kZ, n)));
  CHECK_THROWS_AS(inhom.bidegree(), std::invalid_argument);
}

TEST_CASE("xibar squares to zero and sits outside the polynomial part") {
  int n = 2;
  Scalar xb = Scalar::xibar(kZ, n);
  CHECK(scalar_mul(xb, xb).is_zero());
  CHECK(scalar_mul(xb, xb).free_is_zero());
  Scalar mixed = scalar_mul(xb, scalar_mul(Scalar::r(kZ, n, 2),
                                           Scalar::alpha(kZ, n, 1)));
  CHECK(mixed.xibar_flag() == 1);
  CHECK(mixed.r_power() == 2);
  CHECK_FALSE(mixed.is_zero());
}

TEST_CASE("the defining relation: alpha_1 + ... + alpha_n = xi") {
  for (const BaseRing& R :
       {kZ, kQ, BaseRing::GF(2), BaseRing::GF(7), BaseRing::GF(101)}) {
    for (int n = 1; n <= 8; ++n) {
      Scalar acc = Scalar::zero(R, n);
      for (int i = 1; i <= n; ++i)
        acc = scalar_add(acc, Scalar::alpha(R, n, i));
      acc = scalar_add(acc, scalar_neg(Scalar::xi(R, n)));
      CAPTURE(R.name());
      CAPTURE(n);
      CHECK_FALSE(acc.free_is_zero());
      CHECK(acc.is_zero());
      CHECK(acc.is_relation_multiple());

      // any multiple stays a relation multiple, prefixes included
      Scalar mult = scalar_mul(
          acc, scalar_mul(Scalar::xibar(R, n),
                          scalar_mul(Scalar::r(R, n), Scalar::alpha(R, n, 1))));
      CHECK(mult.is_relation_multiple());
    }
  }
}

TEST_CASE("alpha_n expands into the quotient basis") {
  CHECK(expand_alpha_n(kZ, 1).text() == "x");
  CHECK(expand_alpha_n(kZ, 2).text() == "-a1 + x");
  CHECK(expand_alpha_n(kZ, 3).text() == "-a1 - a2 + x");
  CHECK(Scalar::alpha(kZ, 1, 1).reduced().text() == "x");
  // alpha_i for i < n is already in the basis
  CHECK(Scalar::alpha(kZ, 3, 2).reduced().text() == "a2");
}

TEST_CASE("addition demands a matching xibar/r type") {
  int n = 2;
  Scalar xb = Scalar::xibar(kZ, n);
  Scalar rr = Scalar::r(kZ, n);
  CHECK_THROWS_AS(scalar_add(xb, rr), std::logic_error);
  CHECK_THROWS_AS(scalar_add(Scalar::one(kZ, n), rr), std::logic_error);

  // free zero absorbs regardless of its nominal type
  Scalar z = Scalar::zero(kZ, n);
  CHECK(scalar_add(z, xb).equals(xb));
  CHECK(scalar_add(rr, z).equals(rr));

  // cancellation resets the type tags so zero stays canonical
  Scalar diff = scalar_add(xb, scalar_neg(xb));
  CHECK(diff.free_is_zero());
  CHECK(diff.xibar_flag() == 0);
  CHECK(diff.r_power() == 0);
  CHECK(diff.text() == "0");
}

TEST_CASE("graded-lex ordering pins the printed term order") {
  int n = 3;
  Scalar a1 = Scalar::alpha(kZ, n, 1);
  Scalar x = Scalar::xi(kZ, n);
  Scalar sum = scalar_add(a1, x);
  CHECK(scalar_mul(sum, sum).text() == "a1^2 + 2*a1*x + x^2");

  Scalar a2 = Scalar::alpha(kZ, n, 2);
  Scalar mix = scalar_add(scalar_mul(a2, a2), scalar_mul(a1, x));
  CHECK(mix.text() == "a1*x + a2^2");
}

TEST_CASE("canonical text forms") {
  int n = 3;
  auto t = [&](const Scalar& s) { return s.text(); };
  CHECK(t(Scalar::zero(kZ, n)) == "0");
  CHECK(t(Scalar::one(kZ, n)) == "1");
  CHECK(t(Scalar::integer(kZ, n, -1)) == "-1");
  CHECK(t(Scalar::xibar(kZ, n)) == "xb");
  CHECK(t(Scalar::r(kZ, n)) == "r");
  CHECK(t(Scalar::r(kZ, n, 2)) == "r^2");
  CHECK(t(scalar_mul(Scalar::xibar(kZ, n), Scalar::r(kZ, n))) == "xb*r");
  CHECK(t(scalar_neg(scalar_mul(Scalar::xibar(kZ, n),
                                Scalar::alpha(kZ, n, 1)))) == "-xb*a1");

  Scalar body = scalar_add(
      scalar_mul(scalar_mul(Scalar::alpha(kZ, n, 1), Scalar::alpha(kZ, n, 1)),
                 Scalar::xi(kZ, n)),
      scalar_scale(Scalar::alpha(kZ, n, 2), 3));
  Scalar full = scalar_mul(scalar_mul(Scalar::xibar(kZ, n),
                                      Scalar::r(kZ, n, 2)),
                           body);
  CHECK(t(full) == "xb*r^2*(a1^2*x + 3*a2)");

  CHECK(t(scalar_add(Scalar::alpha(kZ, n, 1), Scalar::alpha(kZ, n, 2))) ==
        "a1 + a2");
  CHECK(t(scalar_add(Scalar::alpha(kZ, n, 1),
                     scalar_neg(Scalar::alpha(kZ, n, 2)))) == "a1 - a2");

  CHECK(t(scalar_mul(Scalar::constant(kQ, n, c_parse(kQ, "2/3")),
                     Scalar::alpha(kQ, n, 1))) == "2/3*a1");
  CHECK(t(Scalar::constant(kQ, n, c_parse(kQ, "-2/5"))) == "-2/5");
  CHECK(t(Scalar::integer(BaseRing::GF(7), n, -1)) == "6");

  // GF coefficients never print a minus sign
  BaseRing F5 = BaseRing::GF(5);
  Scalar g = scalar_add(Scalar::alpha(F5, n, 1),
                        scalar_neg(Scalar::alpha(F5, n, 2)));
  CHECK(t(g) == "a1 + 4*a2");
}

TEST_CASE("text round-trips bit-exactly on canonical strings") {
  int n = 3;
  std::vector<std::string> forms = {
      "0",          "1",       "-1",        "xb",
      "r",          "r^2",     "xb*r",      "xb*r^3",
      "-xb*a1",     "a1",      "a2^2",      "x",
      "3*a1*x",     "a1 + a2", "a1 - a2",   "-a1 - a2 + x",
      "xb*r^2*(a1^2*x + 3*a2)",
      "r*(a1 + a2)",
      "xb*(a1*x - 2*a2^2 + 7)",
  };
  for (const auto& f : forms) {
    CAPTURE(f);
    CHECK(Scalar::parse(kZ, n, f).text() == f);
  }
  CHECK(Scalar::parse(kQ, n, "2/3*a1 - 1/2").text() == "2/3*a1 - 1/2");
}

TEST_CASE("parse rejects malformed input") {
  int n = 2;
  CHECK_THROWS_AS(Scalar::parse(kZ, n, ""), RingError);
  CHECK_THROWS_AS(Scalar::parse(kZ, n, "a3"), RingError);
  CHECK_THROWS_AS(Scalar::parse(kZ, n, "a1 +"), RingError);
  CHECK_THROWS_AS(Scalar::parse(kZ, n, "(a1"), RingError);
  CHECK_THROWS_AS(Scalar::parse(kZ, n, "a1)"), RingError);
  CHECK_THROWS_AS(Scalar::parse(kZ, n, "1/2"), RingError);  // not over Z
  CHECK_THROWS_AS(Scalar::parse(kZ, n, "b2"), RingError);
}

TEST_CASE("multiplication is associative, commutative, distributive") {
  std::mt19937 rng(20250819);
  for (const BaseRing& R : {kZ, kQ, BaseRing::GF(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      int n = 1 + (trial % 4);
      Scalar p = random_poly_scalar(R, n, rng);
      Scalar q = random_poly_scalar(R, n, rng);
      Scalar s = random_poly_scalar(R, n, rng);
      CHECK(scalar_mul(scalar_mul(p, q), s)
                .equals(scalar_mul(p, scalar_mul(q, s))));
      CHECK(scalar_mul(p, q).equals(scalar_mul(q, p)));
      CHECK(scalar_mul(scalar_add(p, q), s)
                .equals(scalar_add(scalar_mul(p, s), scalar_mul(q, s))));
    }
  }
}

TEST_CASE("bidegrees add under multiplication") {
  std::mt19937 rng(424242);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + (trial % 4);
    Scalar p = random_homogeneous_scalar(kQ, n, rng);
    Scalar q = random_homogeneous_scalar(kQ, n, rng);
    Scalar pq = scalar_mul(p, q);
    if (p.free_is_zero() || q.free_is_zero() || pq.free_is_zero()) continue;
    CHECK(pq.bidegree() == p.bidegree() + q.bidegree());
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("random scalars survive a text round-trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + (trial % 4);
    const BaseRing& R = trial % 3 == 0 ? kQ : (trial % 3 == 1 ? kZ : BaseRing::GF(11));
    Scalar p = random_homogeneous_scalar(R, n, rng);
    Scalar back = Scalar::parse(R, n, p.text());
    CAPTURE(p.text());
    CHECK(back.equals(p));
    CHECK(back.text() == p.text());
  }
}

TEST_CASE("reduction happens only at the public boundary") {
  // A relation multiple keeps its free form internally (the ledger needs it)
  // but prints and compares as zero.
  int n = 4;
  Scalar rel = Scalar::zero(kZ, n);
  for (int i = 1; i <= n; ++i) rel = scalar_add(rel, Scalar::alpha(kZ, n, i));
  rel = scalar_add(rel, scalar_neg(Scalar::xi(kZ, n)));
  CHECK(rel.text() == "0");
  CHECK(rel.equals(Scalar::zero(kZ, n)));
  CHECK_FALSE(rel.free_is_zero());
}
