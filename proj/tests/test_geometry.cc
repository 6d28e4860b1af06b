#include "parity/geometry.hh"

#include <string>
#include <vector>

#include "doctest.h"

using namespace parity;

namespace {

void require_all(const std::vector<Check>& checks) {
  for (const Check& c : checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.ok);
  }
}

ChartPoly xs(std::initializer_list<int> is) {
  ChartPoly p = ch_one();
  for (int i : is) p = ch_mul(p, ch_x(i));
  return p;
}

}  // namespace

TEST_CASE("cyclic products") {
  CHECK(p_poly(2, 1, 3) == ch_one());
  CHECK(p_poly(1, 2, 4) == xs({1, 2}));
  CHECK(p_poly(3, 1, 4) == xs({3, 4, 1}));
  // The walk from x_1 around to x_n would be the full product; it is
  // replaced by the empty one.
  CHECK(p_poly(1, 4, 4) == ch_one());
  CHECK(p_poly(1, 1, 1) == ch_one());
  CHECK(p_poly(2, 2, 5) == xs({2}));
  CHECK_THROWS(p_poly(0, 1, 3));
  CHECK_THROWS(p_poly(1, 4, 3));
}

TEST_CASE("displayed lines at n=4") {
  CHECK(chart_line(4, 1).coords ==
        std::vector<ChartPoly>{ch_one(), xs({1}), xs({1, 2}), xs({1, 2, 3})});
  CHECK(chart_line(4, 2).coords ==
        std::vector<ChartPoly>{xs({2, 3, 4}), ch_one(), xs({2}), xs({2, 3})});
  CHECK(chart_line(4, 3).coords ==
        std::vector<ChartPoly>{xs({3, 4}), xs({3, 4, 1}), ch_one(), xs({3})});
  CHECK(chart_line(4, 4).coords ==
        std::vector<ChartPoly>{xs({4}), xs({4, 1}), xs({4, 1, 2}), ch_one()});
}

TEST_CASE("membership minors at n=2") {
  ProjVector moved = apply_diagonal(DiagonalMap{1, xs({1, 2})}, chart_line(2, 1));
  CHECK(moved.coords == std::vector<ChartPoly>{xs({1, 2}), xs({1})});
  ProjVector next = chart_line(2, 2);
  CHECK(next.coords == std::vector<ChartPoly>{xs({2}), ch_one()});
  CHECK(ch_is_zero(ch_sub(ch_mul(moved.coords[0], next.coords[1]),
                          ch_mul(moved.coords[1], next.coords[0]))));
  CHECK(proportional(moved, next));
  CHECK_FALSE(proportional(ProjVector{{ch_one(), xs({1})}}, ProjVector{{ch_one(), xs({2})}}));
  CHECK_THROWS(apply_diagonal(DiagonalMap{3, ch_one()}, next));
}

TEST_CASE("chart checks hold exactly") {
  for (int n = 1; n <= 8; ++n) {
    std::string why;
    INFO("n = ", n, ": ", why);
    CHECK(chart_membership_check(n, &why));
    CHECK(inverse_check(n, &why));
    CHECK(equivariance_check(n, &why));
  }
}

TEST_CASE("inverse components") {
  // a_{1,2}/a_{1,1} = x_1 at n=4, and a_{2,1}/a_{2,2} = x_2 at n=2.
  CHECK(chart_line(4, 1).coords[1] == xs({1}));
  CHECK(chart_line(4, 1).coords[0] == ch_one());
  CHECK(chart_line(2, 2).coords[0] == xs({2}));
  CHECK(chart_line(2, 2).coords[1] == ch_one());
}

TEST_CASE("characters") {
  for (int n = 1; n <= 8; ++n) {
    ChartPoly prod = ch_one();
    for (int i = 1; i <= n; ++i) prod = ch_mul(prod, chart_character(n, i));
    CHECK(prod == ch_z());
  }
  CHECK(ch_mul(chart_character(2, 1), ch_y(1)) == ch_y(2));
  CHECK(ch_mul(chart_character(3, 3), ch_y(3)) == ch_mul(ch_z(), ch_y(1)));
  CHECK(ch_text(chart_character(4, 4)) == "y1*y4^-1*z");
}

TEST_CASE("laurent text and degree") {
  CHECK(ch_text(ch_zero()) == "0");
  CHECK(ch_text(ch_one()) == "1");
  CHECK(ch_text(xs({1, 3, 4})) == "x1*x3*x4");
  CHECK(ch_text(ch_sub(ch_x(1), ch_mul(ch_x(2), ch_x(2)))) == "x1 - x2^2");
  CHECK(ch_x_degree(ch_zero()) == -1);
  CHECK(ch_x_degree(ch_one()) == 0);
  CHECK(ch_x_degree(xs({1, 2, 3})) == 3);
  CHECK(ch_x_degree(ch_z()) == 0);
  // The full product of all n variables never occurs; degree n-1 does
  // (for instance x2*x3*x4 at n=4).
  for (int n = 2; n <= 6; ++n) {
    int top = 0;
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        int d = ch_x_degree(p_poly(j, k, n));
        CHECK(d >= 0);
        CHECK(d <= n - 1);
        if (d > top) top = d;
      }
    CHECK(top == n - 1);
  }
}

TEST_CASE("chart suite stays green") {
  for (int n = 1; n <= 8; ++n) {
    INFO("n = ", n);
    require_all(suite_chart(n));
  }
}
