#include "parity/strata.hh"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace parity {

namespace {

int cyclic_succ(int i, int n) { return i == n ? 1 : i + 1; }
int cyclic_pred(int i, int n) { return i == 1 ? n : i - 1; }

bool contains(std::uint32_t mask, int i) { return (mask >> (i - 1)) & 1u; }

}  // namespace

int subset_size(std::uint32_t mask) { return std::popcount(mask); }

std::vector<int> subset_members(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 1; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

std::uint32_t subset_from_members(const std::vector<int>& members) {
  std::uint32_t mask = 0;
  for (int i : members) mask |= 1u << (i - 1);
  return mask;
}

std::uint32_t full_subset(int n) { return (1u << n) - 1; }

bool subset_lex_less(std::uint32_t a, std::uint32_t b) {
  std::vector<int> ma = subset_members(a), mb = subset_members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

std::string subset_text(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_members(mask)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

bool is_acceptable_order(int n, std::uint32_t mask,
                         const std::vector<int>& order) {
  if (order.empty()) return mask == 0;
  std::uint32_t seen = 0;
  for (int i : order) {
    if (i < 1 || i > n || !contains(mask, i) || contains(seen, i)) return false;
    seen |= 1u << (i - 1);
  }
  if (seen != mask) return false;

  if (contains(mask, cyclic_succ(order.front(), n))) return false;

  int failures = 0;
  for (std::size_t t = 0; t < order.size(); ++t) {
    int a = order[t];
    int b = order[(t + 1) % order.size()];
    if (!(a > b)) ++failures;
  }
  return failures == 1;
}

std::vector<std::vector<int>> acceptable_orders(int n, std::uint32_t mask) {
  if (mask == full_subset(n))
    throw std::invalid_argument("acceptable_orders: I = [n] has none");
  if (mask == 0) return {{}};

  std::vector<int> members = subset_members(mask);
  std::vector<std::vector<int>> out;
  for (int s : members) {
    if (contains(mask, cyclic_succ(s, n))) continue;
    std::vector<int> order = members;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return (s - a + n) % n < (s - b + n) % n;
    });
    out.push_back(std::move(order));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::uint32_t Block::set() const { return subset_from_members(order); }

std::uint32_t Block::core() const {
  std::uint32_t mask = set();
  mask &= ~(1u << (order.back() - 1));
  return mask;
}

bool is_block(int n, std::uint32_t mask) {
  if (mask == 0 || mask == full_subset(n)) return false;
  return acceptable_orders(n, mask).size() == 1;
}

std::vector<Block> block_decomposition(int n, std::uint32_t mask) {
  if (subset_size(mask) > n - 2)
    throw std::invalid_argument(
        "block_decomposition: needs |I| <= n-2, none exists otherwise");

  std::uint32_t consumed = 0;
  std::vector<Block> out;
  for (int a = 1; a <= n; ++a) {
    // a starts a maximal run of I when its cyclic predecessor is outside I
    if (!contains(mask, a) || contains(mask, cyclic_pred(a, n))) continue;
    int b = a;
    while (contains(mask, cyclic_succ(b, n))) b = cyclic_succ(b, n);
    Block blk;
    for (int e = b;; e = cyclic_pred(e, n)) {
      blk.order.push_back(e);
      if (e == a) break;
    }
    blk.order.push_back(cyclic_pred(a, n));  // the tail, outside I
    consumed |= blk.set();
    out.push_back(std::move(blk));
  }
  for (int i = 1; i <= n; ++i)
    if (!contains(consumed, i) && !contains(mask, i))
      out.push_back(Block{{i}});
  std::sort(out.begin(), out.end(), [](const Block& x, const Block& y) {
    return x.order.front() < y.order.front();
  });
  return out;
}

}  // namespace parity
