#pragma once

// Strata of the stratified space are indexed by subsets I of [n] = {1..n},
// stored as bitmasks (element i <-> bit i-1). A stratum label carries its
// acceptable orders: ways of listing I as consecutive labels on the n-cycle
// read in the direction i -> i-1 (wrapping 1 -> n), with the formal
// conditions below. Blocks are the subsets with a unique acceptable order;
// every I with |I| <= n-2 induces a unique partition of [n] into blocks
// whose cores unite to I.

#include <cstdint>
#include <string>
#include <vector>

namespace parity {

int subset_size(std::uint32_t mask);
std::vector<int> subset_members(std::uint32_t mask);  // ascending
std::uint32_t subset_from_members(const std::vector<int>& members);
std::uint32_t full_subset(int n);
// Lexicographic on the ascending member lists; not the numeric mask order.
bool subset_lex_less(std::uint32_t a, std::uint32_t b);
std::string subset_text(std::uint32_t mask);  // "{}", "{1,3}"

// order is acceptable for I iff it lists the members of I such that
//   (1) the cyclic successor of the first entry is not in I, and
//   (2) reading cyclically, exactly one of
//       o_1 > o_2, ..., o_{k-1} > o_k, o_k > o_1 fails.
// The empty order is acceptable exactly for I = {}.
bool is_acceptable_order(int n, std::uint32_t mask,
                         const std::vector<int>& order);

// All acceptable orders of I, deterministically sorted by first entry.
// Throws std::invalid_argument for I = [n], which has none by convention.
std::vector<std::vector<int>> acceptable_orders(int n, std::uint32_t mask);

// A proper subset with a unique acceptable order, i.e. a consecutive arc of
// labels; stored as that order. Core = all but the last entry, tail = last.
struct Block {
  std::vector<int> order;

  std::uint32_t set() const;
  std::uint32_t core() const;
  int tail() const { return order.back(); }
};

bool is_block(int n, std::uint32_t mask);

// The unique partition [n] = B_1 u ... u B_r with I = union of the cores.
// Requires |I| <= n-2; throws std::invalid_argument otherwise. Blocks are
// returned sorted by the first entry of their orders.
std::vector<Block> block_decomposition(int n, std::uint32_t mask);

}  // namespace parity
