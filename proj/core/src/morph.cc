#include "parity/morph.hh"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace parity {

namespace {

void check_masks(int n, std::uint32_t I) {
  if (I >> n) throw std::invalid_argument("subset exceeds [n]");
}

}  // namespace

NormalMorphism nm_id(BaseRing R, int n, std::uint32_t I) {
  check_masks(n, I);
  return {I, I, Scalar::one(R, n)};
}

NormalMorphism nm_eps(BaseRing R, int n, std::uint32_t I, int i) {
  check_masks(n, I);
  if (!((I >> (i - 1)) & 1u))
    throw std::invalid_argument("eps requires i in I");
  return {I, I & ~(1u << (i - 1)), Scalar::one(R, n)};
}

NormalMorphism nm_eta(BaseRing R, int n, std::uint32_t I, int i) {
  check_masks(n, I);
  if ((I >> (i - 1)) & 1u)
    throw std::invalid_argument("eta requires i outside I");
  return {I, I | (1u << (i - 1)), Scalar::one(R, n)};
}

NormalMorphism nm_scaled(const NormalMorphism& f, const Scalar& s) {
  return {f.source, f.target, scalar_mul(s, f.coef)};
}

int nm_word_length(const NormalMorphism& f) {
  return std::popcount(f.source ^ f.target);
}

int nm_parity(const NormalMorphism& f) {
  return (nm_word_length(f) + f.coef.xibar_flag()) & 1;
}

NormalMorphism nm_compose(const NormalMorphism& g, const NormalMorphism& f) {
  if (f.target != g.source)
    throw std::logic_error("nm_compose: endpoints do not match");
  const BaseRing& R = f.coef.ring();
  int n = f.coef.n();
  Scalar s = scalar_mul(g.coef, f.coef);
  std::uint32_t hits = (f.source ^ f.target) & (g.source ^ g.target);
  for (int i = 1; i <= n; ++i)
    if ((hits >> (i - 1)) & 1u) s = scalar_mul(s, Scalar::alpha(R, n, i));
  if (f.coef.xibar_flag() && nm_parity(g)) s = scalar_neg(s);
  return {f.source, g.target, s};
}

NormalMorphism nm_add(const NormalMorphism& a, const NormalMorphism& b) {
  if (a.source != b.source || a.target != b.target)
    throw std::logic_error("nm_add: endpoints do not match");
  return {a.source, a.target, scalar_add(a.coef, b.coef)};
}

NormalMorphism nm_neg(const NormalMorphism& a) {
  return {a.source, a.target, scalar_neg(a.coef)};
}

bool nm_equal(const NormalMorphism& a, const NormalMorphism& b) {
  return a.source == b.source && a.target == b.target &&
         a.coef.equals(b.coef);
}

bool nm_is_zero(const NormalMorphism& a) { return a.coef.is_zero(); }

Bidegree nm_bidegree(const NormalMorphism& f) {
  int l = nm_word_length(f);
  return Bidegree{l, l} + f.coef.bidegree();
}

std::string nm_word_text(const NormalMorphism& f) {
  std::string out;
  std::uint32_t diff = f.source ^ f.target;
  for (int i : subset_members(diff & f.source)) {
    if (!out.empty()) out += "*";
    out += "e" + std::to_string(i);
  }
  for (int i : subset_members(diff & f.target)) {
    if (!out.empty()) out += "*";
    out += "h" + std::to_string(i);
  }
  return out.empty() ? "id" : out;
}

std::string nm_text(const NormalMorphism& f) {
  if (f.coef.is_zero()) return "0";
  Scalar red = f.coef.reduced();
  std::string s = red.text();
  // a bare sum gets parenthesized so the " @ " split stays unambiguous
  if (red.poly().terms().size() >= 2 && red.xibar_flag() == 0 &&
      red.r_power() == 0)
    s = "(" + s + ")";
  return nm_word_text(f) + " @ " + s;
}

int UsageLedger::max_stratum_size() const {
  int m = 0;
  for (const auto& [tag, stratum] : events)
    m = std::max(m, subset_size(stratum));
  return m;
}

bool UsageLedger::all_strata_within(int bound) const {
  for (const auto& [tag, stratum] : events)
    if (subset_size(stratum) > bound) return false;
  return true;
}

bool unit_sum_check(BaseRing R, int n, std::uint32_t I, UsageLedger& ledger) {
  NormalMorphism acc = {I, I, Scalar::zero(R, n)};
  for (int i = 1; i <= n; ++i) {
    bool in_i = (I >> (i - 1)) & 1u;
    NormalMorphism term =
        in_i ? nm_compose(nm_eta(R, n, I & ~(1u << (i - 1)), i),
                          nm_eps(R, n, I, i))
             : nm_compose(nm_eps(R, n, I | (1u << (i - 1)), i),
                          nm_eta(R, n, I, i));
    acc = nm_add(acc, term);
  }
  ledger.record(kUnitSumTag, I);
  NormalMorphism rhs = nm_scaled(nm_id(R, n, I), Scalar::xi(R, n));
  return nm_equal(acc, rhs);
}

bool block_unit_sum_check(BaseRing R, int n, const Block& B, std::uint32_t I) {
  if (B.order.empty())
    throw std::invalid_argument("block_unit_sum_check: empty block");
  std::uint32_t core = B.core();
  if ((I & B.set()) != core)
    throw std::invalid_argument("block_unit_sum_check: I n B != core");
  std::vector<int> core_order(B.order.begin(), B.order.end() - 1);
  bool starts_with_core = false;
  for (const auto& order : acceptable_orders(n, I)) {
    if (order.size() < core_order.size()) continue;
    if (std::equal(core_order.begin(), core_order.end(), order.begin())) {
      starts_with_core = true;
      break;
    }
  }
  if (!starts_with_core)
    throw std::invalid_argument(
        "block_unit_sum_check: no acceptable order of I starts with the core");

  int j = B.tail();
  NormalMorphism lhs = nm_compose(nm_eps(R, n, I | (1u << (j - 1)), j),
                                  nm_eta(R, n, I, j));
  for (int i : subset_members(core))
    lhs = nm_add(lhs, nm_compose(nm_eta(R, n, I & ~(1u << (i - 1)), i),
                                 nm_eps(R, n, I, i)));
  Scalar rhs = Scalar::zero(R, n);
  for (int b : B.order) rhs = scalar_add(rhs, Scalar::alpha(R, n, b));

  // no relation usage permitted here: the free forms must already agree
  bool free_equal = p_sub(R, lhs.coef.poly(), rhs.poly()).is_zero() &&
                    lhs.coef.xibar_flag() == 0 && lhs.coef.r_power() == 0;
  bool quotient_equal = nm_equal(lhs, nm_scaled(nm_id(R, n, I), rhs));
  return free_equal && quotient_equal;
}

std::int64_t hom_dimension(int n, std::uint32_t I, std::uint32_t J, int d) {
  check_masks(n, I);
  check_masks(n, J);
  int l = std::popcount(I ^ J);
  if (d < l || ((d - l) & 1)) return 0;
  int e = (d - l) / 2;
  // monomials of degree e in n variables: C(e + n - 1, n - 1), built
  // incrementally so every prefix is itself a binomial (exact division)
  std::int64_t out = 1;
  for (int t = 1; t <= n - 1; ++t) out = out * (e + t) / t;
  return out;
}

}  // namespace parity
