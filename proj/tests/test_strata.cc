#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "parity/strata.hh"

using namespace parity;

namespace {

// Oracle: filter all permutations by the formal conditions.
std::vector<std::vector<int>> orders_by_bruteforce(int n, std::uint32_t mask) {
  std::vector<int> members = subset_members(mask);
  std::vector<std::vector<int>> out;
  if (members.empty()) {
    if (is_acceptable_order(n, mask, {})) out.push_back({});
    return out;
  }
  std::sort(members.begin(), members.end());
  do {
    if (is_acceptable_order(n, mask, members)) out.push_back(members);
  } while (std::next_permutation(members.begin(), members.end()));
  std::sort(out.begin(), out.end());
  return out;
}

bool cyclic_consecutive(int n, std::uint32_t mask) {
  int k = subset_size(mask);
  if (k == 0 || k >= n) return false;
  for (int a = 1; a <= n; ++a) {
    std::uint32_t arc = 0;
    for (int t = 0, e = a; t < k; ++t, e = (e % n) + 1) arc |= 1u << (e - 1);
    if (arc == mask) return true;
  }
  return false;
}

// For a consecutive arc, the tail is its element whose cyclic predecessor
// lies outside; the core is everything else.
std::uint32_t arc_core(int n, std::uint32_t mask) {
  for (int i = 1; i <= n; ++i) {
    if (!((mask >> (i - 1)) & 1u)) continue;
    int pred = i == 1 ? n : i - 1;
    if (!((mask >> (pred - 1)) & 1u)) return mask & ~(1u << (i - 1));
  }
  return 0;  // unreachable for proper arcs
}

// Count partitions of [n] into consecutive arcs whose cores unite to I.
int count_block_partitions(int n, std::uint32_t target,
                           std::uint32_t unassigned, std::uint32_t cores) {
  if (unassigned == 0) return cores == target ? 1 : 0;
  int e = 1;
  while (!((unassigned >> (e - 1)) & 1u)) ++e;
  int total = 0;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if ((m & unassigned) != m) continue;
    if (!((m >> (e - 1)) & 1u)) continue;
    if (!cyclic_consecutive(n, m)) continue;
    std::uint32_t core = arc_core(n, m);
    if ((core & target) != core) continue;        // core must lie in I
    if (((m & ~core) & target) != 0) continue;    // tail must avoid I
    total += count_block_partitions(n, target, unassigned & ~m, cores | core);
  }
  return total;
}

}  // namespace

TEST_CASE("subset utilities") {
  CHECK(subset_members(0b1011u) == std::vector<int>{1, 2, 4});
  CHECK(subset_from_members({1, 2, 4}) == 0b1011u);
  CHECK(subset_size(0b1011u) == 3);
  CHECK(full_subset(4) == 0b1111u);
  CHECK(subset_text(0) == "{}");
  CHECK(subset_text(0b101u) == "{1,3}");

  // {1,4} < {2,3} lexicographically even though 9 > 6 as masks
  CHECK(subset_lex_less(subset_from_members({1, 4}),
                        subset_from_members({2, 3})));
  CHECK_FALSE(subset_lex_less(subset_from_members({2, 3}),
                              subset_from_members({1, 4})));
  CHECK(subset_lex_less(subset_from_members({1}),
                        subset_from_members({1, 2})));
}

TEST_CASE("acceptable orders on small worked examples") {
  using VV = std::vector<std::vector<int>>;
  CHECK(acceptable_orders(3, subset_from_members({1, 2})) == VV{{2, 1}});
  CHECK(acceptable_orders(4, subset_from_members({1, 3})) ==
        VV{{1, 3}, {3, 1}});
  CHECK(acceptable_orders(4, subset_from_members({1, 2, 4})) == VV{{2, 1, 4}});
  CHECK(acceptable_orders(5, subset_from_members({3})) == VV{{3}});
  CHECK(acceptable_orders(3, 0) == VV{{}});
  CHECK_THROWS_AS(acceptable_orders(3, full_subset(3)), std::invalid_argument);
  CHECK_THROWS_AS(acceptable_orders(1, full_subset(1)), std::invalid_argument);
}

TEST_CASE("enumeration agrees with the brute-force filter") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t mask = 0; mask < full_subset(n); ++mask) {
      auto fast = acceptable_orders(n, mask);
      std::sort(fast.begin(), fast.end());
      auto slow = orders_by_bruteforce(n, mask);
      CAPTURE(n);
      CAPTURE(subset_text(mask));
      REQUIRE(fast == slow);
    }
  }
}

TEST_CASE("the number of acceptable orders counts the maximal arcs of I") {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint32_t mask = 1; mask < full_subset(n); ++mask) {
      int arcs = 0;
      for (int i = 1; i <= n; ++i) {
        bool in_i = (mask >> (i - 1)) & 1u;
        int pred = i == 1 ? n : i - 1;
        bool pred_in = (mask >> (pred - 1)) & 1u;
        if (in_i && !pred_in) ++arcs;
      }
      CHECK(acceptable_orders(n, mask).size() == static_cast<std::size_t>(arcs));
    }
  }
}

TEST_CASE("blocks are exactly the consecutive arcs") {
  for (int n = 2; n <= 6; ++n)
    for (std::uint32_t mask = 0; mask <= full_subset(n); ++mask) {
      if (mask == full_subset(n)) continue;
      CAPTURE(n);
      CAPTURE(subset_text(mask));
      CHECK(is_block(n, mask) == cyclic_consecutive(n, mask));
    }
}

TEST_CASE("block decomposition on worked examples") {
  auto dec = block_decomposition(4, subset_from_members({1, 3}));
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].order == std::vector<int>{1, 4});
  CHECK(dec[0].core() == subset_from_members({1}));
  CHECK(dec[0].tail() == 4);
  CHECK(dec[1].order == std::vector<int>{3, 2});
  CHECK(dec[1].core() == subset_from_members({3}));
  CHECK(dec[1].tail() == 2);

  dec = block_decomposition(4, subset_from_members({1, 2}));
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].order == std::vector<int>{2, 1, 4});
  CHECK(dec[0].core() == subset_from_members({1, 2}));
  CHECK(dec[0].tail() == 4);
  CHECK(dec[1].order == std::vector<int>{3});
  CHECK(dec[1].core() == 0);
  CHECK(dec[1].tail() == 3);

  // a run wrapping the top of the cycle
  dec = block_decomposition(4, subset_from_members({1, 4}));
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].order == std::vector<int>{1, 4, 3});
  CHECK(dec[0].core() == subset_from_members({1, 4}));
  CHECK(dec[0].tail() == 3);
  CHECK(dec[1].order == std::vector<int>{2});

  // empty I: all singletons
  dec = block_decomposition(3, 0);
  REQUIRE(dec.size() == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(dec[i].order == std::vector<int>{i + 1});

  CHECK_THROWS_AS(block_decomposition(4, subset_from_members({1, 2, 3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(block_decomposition(4, full_subset(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(block_decomposition(1, 0), std::invalid_argument);
}

TEST_CASE("block decomposition partitions [n], covers I, and is unique") {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint32_t mask = 0; mask <= full_subset(n); ++mask) {
      if (subset_size(mask) > n - 2) continue;
      CAPTURE(n);
      CAPTURE(subset_text(mask));
      auto dec = block_decomposition(n, mask);
      std::uint32_t covered = 0, cores = 0;
      for (const auto& blk : dec) {
        CHECK(is_block(n, blk.set()));
        CHECK((covered & blk.set()) == 0);
        covered |= blk.set();
        cores |= blk.core();
        // stored order really is the unique acceptable order
        auto orders = acceptable_orders(n, blk.set());
        REQUIRE(orders.size() == 1);
        CHECK(orders[0] == blk.order);
      }
      CHECK(covered == full_subset(n));
      CHECK(cores == mask);
      CHECK(count_block_partitions(n, mask, full_subset(n), 0) == 1);
    }
  }
  // and no decomposition exists above the bound
  for (int n = 2; n <= 5; ++n)
    for (std::uint32_t mask = 0; mask <= full_subset(n); ++mask) {
      if (subset_size(mask) <= n - 2) continue;
      CHECK(count_block_partitions(n, mask, full_subset(n), 0) == 0);
    }
}
