#include "parity/nearby.hh"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parity/strata.hh"

// Every map here is produced by one label rule: a cell goes wherever its
// natural (stratum, t, h) endpoint exists in the target object. Displayed
// zero rows and columns then fall out of the twist bookkeeping instead of
// being special-cased, and a single builder serves the level, ladder, and
// tower variants of each map.

namespace parity {

namespace {

// (-1)^{#{j < x : j not in I}}, computed against the larger stratum I.
int level_sign(std::uint32_t I, int x) {
  std::uint32_t below = (1u << (x - 1)) - 1u;
  int missing = (x - 1) - std::popcount(I & below);
  return (missing & 1) ? -1 : 1;
}

// Signed eps steps: (I, t, h) -> (I \ {x}, t-1, h+1) where that label exists.
void fill_eps(MatrixMorphism& m, BaseRing R, int n) {
  for (int c = 0; c < static_cast<int>(m.source.size()); ++c) {
    const Summand& s = m.source.summands[c];
    for (int x : subset_members(s.stratum)) {
      int row = find_summand(m.target, s.stratum & ~(1u << (x - 1)), s.t - 1,
                             s.h + 1);
      if (row < 0) continue;
      NormalMorphism nm = nm_eps(R, n, s.stratum, x);
      if (level_sign(s.stratum, x) < 0) nm = nm_neg(nm);
      m.set_entry(row, c, nm);
    }
  }
}

// Signed eta steps: (J, t, h) -> (J u {x}, t-1, h+1) where that label exists.
void fill_eta(MatrixMorphism& m, BaseRing R, int n) {
  for (int c = 0; c < static_cast<int>(m.source.size()); ++c) {
    const Summand& s = m.source.summands[c];
    for (int x = 1; x <= n; ++x) {
      if (s.stratum & (1u << (x - 1))) continue;
      std::uint32_t big = s.stratum | (1u << (x - 1));
      int row = find_summand(m.target, big, s.t - 1, s.h + 1);
      if (row < 0) continue;
      NormalMorphism nm = nm_eta(R, n, s.stratum, x);
      if (level_sign(big, x) < 0) nm = nm_neg(nm);
      m.set_entry(row, c, nm);
    }
  }
}

// r^((t2-t1)/2) id for every same-stratum label pair with t2 >= t1 and
// h2 == h1; cap >= 0 bounds the power (0 = nilpotent step maps).
void fill_rpow(MatrixMorphism& m, BaseRing R, int n, int cap) {
  for (int c = 0; c < static_cast<int>(m.source.size()); ++c) {
    const Summand& s = m.source.summands[c];
    for (int row = 0; row < static_cast<int>(m.target.size()); ++row) {
      const Summand& t = m.target.summands[row];
      if (t.stratum != s.stratum || t.h != s.h) continue;
      int d = t.t - s.t;
      if (d < 0 || (d & 1)) continue;
      int pow = d / 2;
      if (cap >= 0 && pow > cap) continue;
      NormalMorphism nm = nm_id(R, n, s.stratum);
      if (pow > 0) nm = nm_scaled(nm, Scalar::r(R, n, pow));
      m.set_entry(row, c, nm);
    }
  }
}

// Uniform retwist taking m's source onto src; the target follows. Strata
// must agree slot by slot, so only the (t, h) bookkeeping moves.
MatrixMorphism fit_src(const MatrixMorphism& m, const GradedObject& src) {
  const auto& a = m.source.summands;
  const auto& b = src.summands;
  if (a.size() != b.size())
    throw std::logic_error("fit_src: summand counts differ");
  if (a.empty()) return m;
  int dt = b[0].t - a[0].t;
  int dh = b[0].h - a[0].h;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].stratum != b[k].stratum || b[k].t - a[k].t != dt ||
        b[k].h - a[k].h != dh)
      throw std::logic_error("fit_src: not a uniform retwist");
  return map_shift(map_twist(m, dt), dh);
}

// g after f, g's endpoints aligned to f's target.
MatrixMorphism cmul(const MatrixMorphism& g, const MatrixMorphism& f) {
  return mm_mul(fit_src(g, f.target), f);
}

// Sums tolerate a zero side: a degenerate composite through an empty object
// keeps no endpoint twist data, and 0 contributes nothing either way.
MatrixMorphism cadd(const MatrixMorphism& a, const MatrixMorphism& b) {
  if (mm_is_zero(a)) return b;
  if (mm_is_zero(b)) return a;
  return mm_add(a, fit_src(b, a.source));
}

MatrixMorphism csub(const MatrixMorphism& a, const MatrixMorphism& b) {
  if (mm_is_zero(b)) return a;
  if (mm_is_zero(a)) return mm_neg(b);
  return mm_sub(a, fit_src(b, a.source));
}

bool czero(const MatrixMorphism& a) { return mm_is_zero(a); }

// Equality after aligning b's endpoints to a's; two zero maps agree
// regardless of endpoint twists (degenerate instances at the index edges).
bool ceq_led(const MatrixMorphism& a, const MatrixMorphism& b,
             UsageLedger* ledger) {
  if (mm_is_zero(a) && mm_is_zero(b)) return true;
  if (a.source.size() == 0 || a.target.size() == 0 || b.source.size() == 0 ||
      b.target.size() == 0)
    return mm_is_zero(a) && mm_is_zero(b);
  MatrixMorphism bb = fit_src(b, a.source);
  if (!(bb.target == a.target))
    throw std::logic_error("compared maps are not parallel");
  if (ledger) return mm_equal_with_ledger(a, bb, *ledger);
  return mm_equal(a, bb);
}

bool ceq(const MatrixMorphism& a, const MatrixMorphism& b) {
  return ceq_led(a, b, nullptr);
}

// Map-shaped X -> X[1] rewritten as an endomorphism of X.
MatrixMorphism as_endo(const MatrixMorphism& m) {
  if (!(m.target == go_shift(m.source, 1)))
    throw std::logic_error("as_endo: target is not source[1]");
  MatrixMorphism out = mm_zero(m.source, m.source);
  for (const auto& [key, nm] : m.entries)
    out.set_entry(key.first, key.second, nm);
  return out;
}

// Copy m into out at block offsets; the addressed slices of out's endpoints
// must equal m's endpoints summand by summand.
void put_block(MatrixMorphism& out, int row0, int col0,
               const MatrixMorphism& m) {
  for (std::size_t c = 0; c < m.source.size(); ++c)
    if (!(out.source.summands.at(col0 + c) == m.source.summands[c]))
      throw std::logic_error("put_block: source block mismatch");
  for (std::size_t r = 0; r < m.target.size(); ++r)
    if (!(out.target.summands.at(row0 + r) == m.target.summands[r]))
      throw std::logic_error("put_block: target block mismatch");
  for (const auto& [key, nm] : m.entries)
    out.set_entry(row0 + key.first, col0 + key.second, nm);
}

// Entry-exact comparison (no quotient step), for golden-style matches.
bool mm_same(const MatrixMorphism& a, const MatrixMorphism& b) {
  if (!(a.source == b.source) || !(a.target == b.target)) return false;
  if (a.entries.size() != b.entries.size()) return false;
  for (const auto& [key, nm] : a.entries) {
    const NormalMorphism* other = b.entry(key.first, key.second);
    if (!other || !nm_equal(nm, *other)) return false;
  }
  return true;
}

DifferentialComplex as_mix(const DifferentialComplex& c) {
  return {c.n, Regime::mix, c.object, c.differential};
}

DifferentialComplex canonical_form(const DifferentialComplex& c) {
  std::vector<int> perm;
  GradedObject obj = c.object.canonicalized(&perm);
  MatrixMorphism d = mm_zero(obj, obj);
  for (const auto& [key, nm] : c.differential.entries)
    d.set_entry(perm[key.first], perm[key.second], nm);
  return {c.n, c.regime, obj, d};
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
  return r;
}

struct Runner {
  std::vector<Check> out;

  template <class F>
  void check(std::string name, F&& body) {
    Check c;
    c.name = std::move(name);
    try {
      c.ok = body();
      if (!c.ok) c.detail = "sides differ";
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
};

std::string at(const char* var, int v) {
  return std::string(" (") + var + "=" + std::to_string(v) + ")";
}

}  // namespace

GradedObject rank_sum(int n, int k) {
  GradedObject o;
  if (k < 0 || k > n) return o;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == k) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), subset_lex_less);
  for (std::uint32_t m : masks) o.summands.push_back({m, 0, 0});
  return o;
}

GradedObject jordan_sum(int n, int i) {
  GradedObject o;
  if (i < 0 || i >= n) return o;
  GradedObject base = rank_sum(n, i);
  for (int t = n - i - 1; t >= -n + i + 1; t -= 2)
    for (const Summand& s : base.summands) o.summands.push_back({s.stratum, t, 0});
  return o;
}

GradedObject shriek_total(int n) {
  GradedObject o;
  for (int k = n; k >= 0; --k)
    o = go_concat(o, go_twist(rank_sum(n, k), -n + k));
  return o;
}

GradedObject star_total(int n) {
  GradedObject o;
  for (int k = 0; k <= n; ++k)
    o = go_concat(o, go_twist(rank_sum(n, k), n - k));
  return o;
}

GradedObject psi_total(int n) {
  GradedObject o;
  for (int i = 0; i < n; ++i) o = go_concat(o, jordan_sum(n, i));
  std::sort(o.summands.begin(), o.summands.end(), summand_canonical_less);
  return o;
}

int find_summand(const GradedObject& o, std::uint32_t stratum, int t, int h) {
  for (std::size_t i = 0; i < o.size(); ++i) {
    const Summand& s = o.summands[i];
    if (s.stratum == stratum && s.t == t && s.h == h)
      return static_cast<int>(i);
  }
  return -1;
}

MatrixMorphism eps_level(BaseRing R, int n, int k) {
  MatrixMorphism m = mm_zero(rank_sum(n, k), go_tate(rank_sum(n, k - 1), 1));
  fill_eps(m, R, n);
  return m;
}

MatrixMorphism eta_level(BaseRing R, int n, int k) {
  MatrixMorphism m = mm_zero(go_tate(rank_sum(n, k - 1), -1), rank_sum(n, k));
  fill_eta(m, R, n);
  return m;
}

MatrixMorphism jordan_nil(BaseRing R, int n, int i) {
  MatrixMorphism m = mm_zero(jordan_sum(n, i), go_twist(jordan_sum(n, i), 2));
  fill_rpow(m, R, n, 0);
  return m;
}

MatrixMorphism jordan_eps(BaseRing R, int n, int i) {
  MatrixMorphism m =
      mm_zero(jordan_sum(n, i), go_shift(jordan_sum(n, i - 1), 1));
  fill_eps(m, R, n);
  return m;
}

MatrixMorphism jordan_eta(BaseRing R, int n, int i) {
  MatrixMorphism m =
      mm_zero(go_shift(jordan_sum(n, i - 1), -1), jordan_sum(n, i));
  fill_eta(m, R, n);
  return m;
}

MatrixMorphism jordan_h(BaseRing R, int n, int i) {
  MatrixMorphism m =
      mm_zero(go_twist(jordan_sum(n, i), 1), go_twist(jordan_sum(n, i), -1));
  fill_rpow(m, R, n, -1);
  return m;
}

MatrixMorphism iota_lo(BaseRing R, int n, int i) {
  MatrixMorphism m = mm_zero(go_twist(rank_sum(n, i), -n + i),
                             go_twist(jordan_sum(n, i), -1));
  fill_rpow(m, R, n, -1);
  return m;
}

MatrixMorphism iota_hi(BaseRing R, int n, int i) {
  MatrixMorphism m =
      mm_zero(go_twist(rank_sum(n, i), n - i), go_twist(jordan_sum(n, i), 1));
  fill_rpow(m, R, n, -1);
  return m;
}

MatrixMorphism eps_hi(BaseRing R, int n, int i) {
  MatrixMorphism m = mm_zero(go_twist(rank_sum(n, i), n - i),
                             go_shift(go_twist(jordan_sum(n, i - 1), -1), 1));
  fill_eps(m, R, n);
  return m;
}

MatrixMorphism rho_edge(BaseRing R, int n, int i) {
  MatrixMorphism m = mm_zero(go_twist(rank_sum(n, i), -n + i),
                             go_twist(rank_sum(n, i), n - i));
  fill_rpow(m, R, n, -1);
  return m;
}

MatrixMorphism proj_lo(BaseRing R, int n, int i) {
  MatrixMorphism m = mm_zero(go_twist(jordan_sum(n, i), -1),
                             go_twist(rank_sum(n, i), -n + i));
  fill_rpow(m, R, n, -1);
  return m;
}

MatrixMorphism proj_hi(BaseRing R, int n, int i) {
  MatrixMorphism m =
      mm_zero(go_twist(jordan_sum(n, i), 1), go_twist(rank_sum(n, i), n - i));
  fill_rpow(m, R, n, -1);
  return m;
}

MatrixMorphism eta_lo(BaseRing R, int n, int i) {
  MatrixMorphism m = mm_zero(go_shift(go_twist(jordan_sum(n, i - 1), 1), -1),
                             go_twist(rank_sum(n, i), -n + i));
  fill_eta(m, R, n);
  return m;
}

MatrixMorphism eps_shriek(BaseRing R, int n) {
  MatrixMorphism m = mm_zero(shriek_total(n), go_shift(shriek_total(n), 1));
  fill_eps(m, R, n);
  return m;
}

MatrixMorphism eta_shriek(BaseRing R, int n) {
  MatrixMorphism m =
      mm_zero(shriek_total(n), go_shift(go_twist(shriek_total(n), -2), 1));
  fill_eta(m, R, n);
  return m;
}

MatrixMorphism eps_star(BaseRing R, int n) {
  MatrixMorphism m =
      mm_zero(star_total(n), go_shift(go_twist(star_total(n), -2), 1));
  fill_eps(m, R, n);
  return m;
}

MatrixMorphism eta_star(BaseRing R, int n) {
  MatrixMorphism m = mm_zero(star_total(n), go_shift(star_total(n), 1));
  fill_eta(m, R, n);
  return m;
}

MatrixMorphism rho_total(BaseRing R, int n) {
  MatrixMorphism m = mm_zero(shriek_total(n), star_total(n));
  fill_rpow(m, R, n, -1);
  return m;
}

MatrixMorphism psi_nil(BaseRing R, int n) {
  MatrixMorphism m = mm_zero(psi_total(n), go_twist(psi_total(n), 2));
  fill_rpow(m, R, n, 0);
  return m;
}

MatrixMorphism psi_eps(BaseRing R, int n) {
  MatrixMorphism m = mm_zero(psi_total(n), go_shift(psi_total(n), 1));
  fill_eps(m, R, n);
  return m;
}

MatrixMorphism psi_eta(BaseRing R, int n) {
  MatrixMorphism m = mm_zero(psi_total(n), go_shift(psi_total(n), 1));
  fill_eta(m, R, n);
  return m;
}

MatrixMorphism psi_h(BaseRing R, int n) {
  MatrixMorphism m =
      mm_zero(go_twist(psi_total(n), 1), go_twist(psi_total(n), -1));
  fill_rpow(m, R, n, -1);
  return m;
}

MatrixMorphism psi_iota_lo(BaseRing R, int n) {
  MatrixMorphism m = mm_zero(shriek_total(n), go_twist(psi_total(n), -1));
  fill_rpow(m, R, n, -1);
  return m;
}

MatrixMorphism psi_iota_hi(BaseRing R, int n) {
  MatrixMorphism m = mm_zero(star_total(n), go_twist(psi_total(n), 1));
  fill_rpow(m, R, n, -1);
  return m;
}

MatrixMorphism psi_eps_hi(BaseRing R, int n) {
  MatrixMorphism m =
      mm_zero(star_total(n), go_shift(go_twist(psi_total(n), -1), 1));
  fill_eps(m, R, n);
  return m;
}

MatrixMorphism psi_proj_lo(BaseRing R, int n) {
  MatrixMorphism m = mm_zero(go_twist(psi_total(n), -1), shriek_total(n));
  fill_rpow(m, R, n, -1);
  return m;
}

MatrixMorphism psi_proj_hi(BaseRing R, int n) {
  MatrixMorphism m = mm_zero(go_twist(psi_total(n), 1), star_total(n));
  fill_rpow(m, R, n, -1);
  return m;
}

MatrixMorphism psi_eta_lo(BaseRing R, int n) {
  MatrixMorphism m =
      mm_zero(go_shift(go_twist(psi_total(n), 1), -1), shriek_total(n));
  fill_eta(m, R, n);
  return m;
}

MatrixMorphism open_projection(BaseRing R, int n) {
  MatrixMorphism m = mm_zero(star_total(n), shriek_total(n));
  fill_rpow(m, R, n, -1);
  return m;
}

DifferentialComplex shriek_std(BaseRing R, int n) {
  return {n, Regime::Gm, shriek_total(n), as_endo(eps_shriek(R, n))};
}

DifferentialComplex star_std(BaseRing R, int n) {
  return {n, Regime::Gm, star_total(n), as_endo(eta_star(R, n))};
}

DifferentialComplex shriek_jordan(BaseRing R, int n) {
  MatrixMorphism d = mm_add(
      eps_shriek(R, n), scalar_mult_map(Scalar::r(R, n), eta_shriek(R, n)));
  return {n, Regime::mon, shriek_total(n), as_endo(d)};
}

DifferentialComplex star_jordan(BaseRing R, int n) {
  MatrixMorphism d = mm_add(eta_star(R, n),
                            scalar_mult_map(Scalar::r(R, n), eps_star(R, n)));
  return {n, Regime::mon, star_total(n), as_endo(d)};
}

DifferentialComplex psi_mix(BaseRing R, int n) {
  MatrixMorphism d =
      mm_sub(mm_add(psi_eps(R, n), psi_eta(R, n)),
             scalar_mult_map(Scalar::xibar(R, n), psi_nil(R, n)));
  return {n, Regime::mix, psi_total(n), as_endo(d)};
}

DifferentialComplex boundary_cone(BaseRing R, int n) {
  return cone(rho_total(R, n), shriek_jordan(R, n), star_jordan(R, n));
}

std::vector<Check> suite_level(BaseRing R, int n) {
  Runner run;
  for (int k = 1; k <= n + 1; ++k)
    run.check("level: eps.eps = 0" + at("k", k), [&] {
      return czero(cmul(eps_level(R, n, k - 1), eps_level(R, n, k)));
    });
  for (int k = 0; k <= n; ++k)
    run.check("level: eta.eta = 0" + at("k", k), [&] {
      return czero(cmul(eta_level(R, n, k + 1), eta_level(R, n, k)));
    });
  for (int k = 0; k <= n; ++k)
    run.check("level: eps.eta + eta.eps = xi id" + at("k", k), [&] {
      MatrixMorphism lhs =
          cadd(cmul(eta_level(R, n, k), eps_level(R, n, k)),
               cmul(eps_level(R, n, k + 1), eta_level(R, n, k + 1)));
      return ceq(lhs, mm_scalar(R, n, rank_sum(n, k), Scalar::xi(R, n)));
    });
  return run.out;
}

std::vector<Check> suite_jordan(BaseRing R, int n, UsageLedger* ledger) {
  Runner run;
  for (int i = 0; i < n; ++i) {
    run.check("jordan: N^(n-i) = 0" + at("i", i), [&] {
      MatrixMorphism p = jordan_nil(R, n, i);
      for (int k = 1; k < n - i; ++k) p = cmul(jordan_nil(R, n, i), p);
      return czero(p);
    });
    if (n - i >= 2)
      run.check("jordan: N^(n-i-1) != 0" + at("i", i), [&] {
        MatrixMorphism p = jordan_nil(R, n, i);
        for (int k = 1; k < n - i - 1; ++k) p = cmul(jordan_nil(R, n, i), p);
        return !czero(p);
      });
    run.check("jordan: eps.eps = 0" + at("i", i), [&] {
      return czero(cmul(jordan_eps(R, n, i - 1), jordan_eps(R, n, i)));
    });
    run.check("jordan: eta.eta = 0" + at("i", i), [&] {
      return czero(cmul(jordan_eta(R, n, i + 1), jordan_eta(R, n, i)));
    });
    run.check("jordan: eps.N = N.eps" + at("i", i), [&] {
      return ceq(cmul(jordan_eps(R, n, i), jordan_nil(R, n, i)),
                 cmul(jordan_nil(R, n, i - 1), jordan_eps(R, n, i)));
    });
    run.check("jordan: eta.N = N.eta" + at("i", i), [&] {
      return ceq(cmul(jordan_eta(R, n, i), jordan_nil(R, n, i - 1)),
                 cmul(jordan_nil(R, n, i), jordan_eta(R, n, i)));
    });
    run.check("jordan: eps.eta + eta.eps = xi N" + at("i", i), [&] {
      MatrixMorphism lhs =
          cadd(cmul(jordan_eta(R, n, i), jordan_eps(R, n, i)),
               cmul(jordan_eps(R, n, i + 1), jordan_eta(R, n, i + 1)));
      return ceq_led(lhs, scalar_mult_map(Scalar::xi(R, n), jordan_nil(R, n, i)),
                     ledger);
    });
  }
  return run.out;
}

std::vector<Check> suite_edge(BaseRing R, int n) {
  Runner run;
  Scalar r = Scalar::r(R, n);
  Scalar xi = Scalar::xi(R, n);
  for (int i = 0; i <= n; ++i) {
    run.check("edge: eps_hi.eps = 0" + at("i", i), [&] {
      return czero(cmul(eps_hi(R, n, i), eps_level(R, n, i + 1)));
    });
    run.check("edge: jordan_eps.eps_hi = 0" + at("i", i), [&] {
      return czero(cmul(jordan_eps(R, n, i - 1), eps_hi(R, n, i)));
    });
    run.check("edge: iota_hi.eps = eps_hi" + at("i", i), [&] {
      return ceq(cmul(iota_hi(R, n, i - 1), eps_level(R, n, i)),
                 eps_hi(R, n, i));
    });
    run.check("edge: iota_hi.eta = jordan_eta.iota_hi" + at("i", i), [&] {
      return ceq(cmul(iota_hi(R, n, i), eta_level(R, n, i)),
                 cmul(jordan_eta(R, n, i), iota_hi(R, n, i - 1)));
    });
    run.check("edge: iota_hi.rho + N.iota_lo = r iota_lo" + at("i", i), [&] {
      MatrixMorphism lhs = cadd(cmul(iota_hi(R, n, i), rho_edge(R, n, i)),
                                cmul(jordan_nil(R, n, i), iota_lo(R, n, i)));
      return ceq(lhs, scalar_mult_map(r, iota_lo(R, n, i)));
    });
    run.check("edge: eps_hi.eta + jordan_eta.eps_hi = xi iota_hi" + at("i", i),
              [&] {
                MatrixMorphism lhs =
                    cadd(cmul(eps_hi(R, n, i + 1), eta_level(R, n, i + 1)),
                         cmul(jordan_eta(R, n, i), eps_hi(R, n, i)));
                return ceq(lhs, scalar_mult_map(xi, iota_hi(R, n, i)));
              });
    run.check("edge: jordan_eps.iota_hi = N.eps_hi" + at("i", i), [&] {
      return ceq(cmul(jordan_eps(R, n, i), iota_hi(R, n, i)),
                 cmul(jordan_nil(R, n, i - 1), eps_hi(R, n, i)));
    });
    run.check("edge: r iota_lo.eta = jordan_eta.iota_lo" + at("i", i), [&] {
      return ceq(scalar_mult_map(r, cmul(iota_lo(R, n, i), eta_level(R, n, i))),
                 cmul(jordan_eta(R, n, i), iota_lo(R, n, i - 1)));
    });
    run.check("edge: eps_hi.rho + jordan_eps.iota_lo = iota_lo.eps" + at("i", i),
              [&] {
                MatrixMorphism lhs =
                    cadd(cmul(eps_hi(R, n, i), rho_edge(R, n, i)),
                         cmul(jordan_eps(R, n, i), iota_lo(R, n, i)));
                return ceq(lhs, cmul(iota_lo(R, n, i - 1), eps_level(R, n, i)));
              });
    run.check("edge: eta_lo.jordan_eta = 0" + at("i", i), [&] {
      return czero(cmul(eta_lo(R, n, i), jordan_eta(R, n, i - 1)));
    });
    run.check("edge: eta.eta_lo = 0" + at("i", i), [&] {
      return czero(cmul(eta_level(R, n, i + 1), eta_lo(R, n, i)));
    });
    run.check("edge: eta_lo = eta.proj_lo" + at("i", i), [&] {
      return ceq(eta_lo(R, n, i),
                 cmul(eta_level(R, n, i), proj_lo(R, n, i - 1)));
    });
    run.check("edge: proj_lo.jordan_eps = eps.proj_lo" + at("i", i), [&] {
      return ceq(cmul(proj_lo(R, n, i - 1), jordan_eps(R, n, i)),
                 cmul(eps_level(R, n, i), proj_lo(R, n, i)));
    });
    run.check("edge: proj_hi.N + rho.proj_lo = r proj_hi" + at("i", i), [&] {
      MatrixMorphism lhs = cadd(cmul(proj_hi(R, n, i), jordan_nil(R, n, i)),
                                cmul(rho_edge(R, n, i), proj_lo(R, n, i)));
      return ceq(lhs, scalar_mult_map(r, proj_hi(R, n, i)));
    });
    run.check("edge: eta_lo.jordan_eps + eps.eta_lo = xi proj_lo" + at("i", i),
              [&] {
                MatrixMorphism lhs =
                    cadd(cmul(eta_lo(R, n, i), jordan_eps(R, n, i)),
                         cmul(eps_level(R, n, i + 1), eta_lo(R, n, i + 1)));
                return ceq(lhs, scalar_mult_map(xi, proj_lo(R, n, i)));
              });
    run.check("edge: eta_lo.N = proj_lo.jordan_eta" + at("i", i), [&] {
      return ceq(cmul(eta_lo(R, n, i), jordan_nil(R, n, i - 1)),
                 cmul(proj_lo(R, n, i), jordan_eta(R, n, i)));
    });
    run.check("edge: proj_hi.jordan_eps = r eps.proj_hi" + at("i", i), [&] {
      return ceq(cmul(proj_hi(R, n, i - 1), jordan_eps(R, n, i)),
                 scalar_mult_map(r, cmul(eps_level(R, n, i), proj_hi(R, n, i))));
    });
    run.check("edge: proj_hi.jordan_eta + rho.eta_lo = eta.proj_hi" + at("i", i),
              [&] {
                MatrixMorphism lhs =
                    cadd(cmul(proj_hi(R, n, i), jordan_eta(R, n, i)),
                         cmul(rho_edge(R, n, i), eta_lo(R, n, i)));
                return ceq(lhs, cmul(eta_level(R, n, i), proj_hi(R, n, i - 1)));
              });
  }
  return run.out;
}

std::vector<Check> suite_extension(BaseRing R, int n) {
  Runner run;
  Scalar r = Scalar::r(R, n);
  Scalar xi = Scalar::xi(R, n);
  MatrixMorphism se = eps_shriek(R, n);
  MatrixMorphism sh = eta_shriek(R, n);
  MatrixMorphism te = eps_star(R, n);
  MatrixMorphism th = eta_star(R, n);
  MatrixMorphism rho = rho_total(R, n);
  run.check("ext: shriek eps.eps = 0", [&] { return czero(cmul(se, se)); });
  run.check("ext: shriek eta.eta = 0", [&] { return czero(cmul(sh, sh)); });
  run.check("ext: shriek eps.eta + eta.eps = xi id", [&] {
    MatrixMorphism lhs = cadd(cmul(se, sh), cmul(sh, se));
    return ceq(lhs, mm_scalar(R, n, shriek_total(n), xi));
  });
  run.check("ext: star eps.eps = 0", [&] { return czero(cmul(te, te)); });
  run.check("ext: star eta.eta = 0", [&] { return czero(cmul(th, th)); });
  run.check("ext: star eps.eta + eta.eps = xi id", [&] {
    MatrixMorphism lhs = cadd(cmul(te, th), cmul(th, te));
    return ceq(lhs, mm_scalar(R, n, star_total(n), xi));
  });
  run.check("ext: rho.eps = r eps.rho", [&] {
    return ceq(cmul(rho, se), scalar_mult_map(r, cmul(te, rho)));
  });
  run.check("ext: eta.rho = r rho.eta", [&] {
    return ceq(cmul(th, rho), scalar_mult_map(r, cmul(rho, sh)));
  });
  return run.out;
}

std::vector<Check> suite_psi(BaseRing R, int n, UsageLedger* ledger) {
  Runner run;
  Scalar r = Scalar::r(R, n);
  Scalar xi = Scalar::xi(R, n);
  MatrixMorphism N = psi_nil(R, n);
  MatrixMorphism e = psi_eps(R, n);
  MatrixMorphism h = psi_eta(R, n);
  MatrixMorphism il = psi_iota_lo(R, n);
  MatrixMorphism ih = psi_iota_hi(R, n);
  MatrixMorphism eh = psi_eps_hi(R, n);
  MatrixMorphism pl = psi_proj_lo(R, n);
  MatrixMorphism ph = psi_proj_hi(R, n);
  MatrixMorphism hl = psi_eta_lo(R, n);
  MatrixMorphism rho = rho_total(R, n);
  MatrixMorphism se = eps_shriek(R, n);
  MatrixMorphism sh = eta_shriek(R, n);
  MatrixMorphism te = eps_star(R, n);
  MatrixMorphism th = eta_star(R, n);

  run.check("psi: eps.eps = 0", [&] { return czero(cmul(e, e)); });
  run.check("psi: eta.eta = 0", [&] { return czero(cmul(h, h)); });
  run.check("psi: eps.N = N.eps",
            [&] { return ceq(cmul(e, N), cmul(N, e)); });
  run.check("psi: eta.N = N.eta",
            [&] { return ceq(cmul(h, N), cmul(N, h)); });
  run.check("psi: eps.eta + eta.eps = xi N", [&] {
    MatrixMorphism lhs = cadd(cmul(e, h), cmul(h, e));
    return ceq_led(lhs, scalar_mult_map(xi, N), ledger);
  });

  run.check("psi: eps_hi.star_eps = 0", [&] { return czero(cmul(eh, te)); });
  run.check("psi: eps.eps_hi = 0", [&] { return czero(cmul(e, eh)); });
  run.check("psi: iota_hi.star_eps = eps_hi",
            [&] { return ceq(cmul(ih, te), eh); });
  run.check("psi: iota_hi.star_eta = eta.iota_hi",
            [&] { return ceq(cmul(ih, th), cmul(h, ih)); });
  run.check("psi: iota_hi.rho + N.iota_lo = r iota_lo", [&] {
    MatrixMorphism lhs = cadd(cmul(ih, rho), cmul(N, il));
    return ceq(lhs, scalar_mult_map(r, il));
  });
  run.check("psi: eps_hi.star_eta + eta.eps_hi = xi iota_hi", [&] {
    MatrixMorphism lhs = cadd(cmul(eh, th), cmul(h, eh));
    return ceq(lhs, scalar_mult_map(xi, ih));
  });
  run.check("psi: eps.iota_hi = N.eps_hi",
            [&] { return ceq(cmul(e, ih), cmul(N, eh)); });
  run.check("psi: r iota_lo.shriek_eta = eta.iota_lo", [&] {
    return ceq(scalar_mult_map(r, cmul(il, sh)), cmul(h, il));
  });
  run.check("psi: eps_hi.rho + eps.iota_lo = iota_lo.shriek_eps", [&] {
    MatrixMorphism lhs = cadd(cmul(eh, rho), cmul(e, il));
    return ceq(lhs, cmul(il, se));
  });

  run.check("psi: eta_lo.eta = 0", [&] { return czero(cmul(hl, h)); });
  run.check("psi: shriek_eta.eta_lo = 0", [&] { return czero(cmul(sh, hl)); });
  run.check("psi: eta_lo = shriek_eta.proj_lo",
            [&] { return ceq(hl, cmul(sh, pl)); });
  run.check("psi: proj_lo.eps = shriek_eps.proj_lo",
            [&] { return ceq(cmul(pl, e), cmul(se, pl)); });
  run.check("psi: proj_hi.N + rho.proj_lo = r proj_hi", [&] {
    MatrixMorphism lhs = cadd(cmul(ph, N), cmul(rho, pl));
    return ceq(lhs, scalar_mult_map(r, ph));
  });
  run.check("psi: eta_lo.eps + shriek_eps.eta_lo = xi proj_lo", [&] {
    MatrixMorphism lhs = cadd(cmul(hl, e), cmul(se, hl));
    return ceq(lhs, scalar_mult_map(xi, pl));
  });
  run.check("psi: eta_lo.N = proj_lo.eta",
            [&] { return ceq(cmul(hl, N), cmul(pl, h)); });
  run.check("psi: proj_hi.eps = r star_eps.proj_hi", [&] {
    return ceq(cmul(ph, e), scalar_mult_map(r, cmul(te, ph)));
  });
  run.check("psi: proj_hi.eta + rho.eta_lo = star_eta.proj_hi", [&] {
    MatrixMorphism lhs = cadd(cmul(ph, h), cmul(rho, hl));
    return ceq(lhs, cmul(th, ph));
  });
  return run.out;
}

std::vector<Check> suite_complexes(BaseRing R, int n, UsageLedger* ledger) {
  Runner run;
  run.check("cx: tower size = sum (n-i) C(n,i)", [&] {
    long expect = 0;
    for (int i = 0; i < n; ++i) expect += static_cast<long>(n - i) * binom(n, i);
    return static_cast<long>(psi_total(n).size()) == expect;
  });
  run.check("cx: shriek size = 2^n", [&] {
    return shriek_total(n).size() == (std::size_t{1} << n);
  });
  run.check("cx: star size = 2^n", [&] {
    return star_total(n).size() == (std::size_t{1} << n);
  });
  run.check("cx: objects are canonically ordered", [&] {
    return psi_total(n) == psi_total(n).canonicalized() &&
           shriek_total(n) == shriek_total(n).canonicalized() &&
           star_total(n) == star_total(n).canonicalized();
  });
  run.check("cx: open stratum carries a single plain copy", [&] {
    std::uint32_t full = full_subset(n);
    auto full_count = [&](const GradedObject& o) {
      int count = 0;
      for (const Summand& s : o.summands)
        if (s.stratum == full) ++count;
      return count;
    };
    if (full_count(shriek_total(n)) != 1 ||
        find_summand(shriek_total(n), full, 0, 0) < 0)
      return false;
    if (full_count(star_total(n)) != 1 ||
        find_summand(star_total(n), full, 0, 0) < 0)
      return false;
    return full_count(psi_total(n)) == 0;  // the tower stops below the open stratum
  });
  auto valid = [&](const char* name, DifferentialComplex c,
                   UsageLedger* lg = nullptr) {
    run.check(name, [&] {
      UsageLedger scratch;
      ValidationResult v = validate(c, lg ? *lg : scratch);
      if (!v.ok) throw std::runtime_error(v.message);
      return true;
    });
  };
  valid("cx: (shriek, eps) is Gm-valid", shriek_std(R, n));
  valid("cx: (star, eta) is Gm-valid", star_std(R, n));
  valid("cx: (shriek, eps + r eta) is mon-valid", shriek_jordan(R, n));
  valid("cx: (star, eta + r eps) is mon-valid", star_jordan(R, n));
  valid("cx: tower mix complex is valid", psi_mix(R, n), ledger);
  valid("cx: mon(tower) is valid", mon(psi_mix(R, n)));
  valid("cx: boundary cone is valid", boundary_cone(R, n));
  return run.out;
}

std::vector<Check> suite_equivalence(BaseRing R, int n) {
  Runner run;
  for (bool shriek_side : {true, false}) {
    const char* tag = shriek_side ? " (shriek)" : " (star)";
    GradedObject base = shriek_side ? shriek_total(n) : star_total(n);
    DifferentialComplex F = shriek_side ? shriek_jordan(R, n) : star_jordan(R, n);
    DifferentialComplex M =
        mon(as_mix(shriek_side ? shriek_std(R, n) : star_std(R, n)));
    MatrixMorphism mult_r =
        mm_scalar(R, n, go_twist(base, -2), Scalar::r(R, n));
    DifferentialComplex G = cone(mult_r, twist(F, -2), F);
    MatrixMorphism corner = shriek_side ? eta_shriek(R, n) : eps_star(R, n);
    int w = static_cast<int>(base.size());
    MatrixMorphism f = mm_zero(G.object, M.object);
    MatrixMorphism fbar = mm_zero(M.object, G.object);
    run.check(std::string("equiv: cone(r) object matches mon") + tag,
              [&] { return G.object == M.object; });
    put_block(f, 0, 0, mm_identity(R, n, base));
    put_block(f, w, w, mm_identity(R, n, go_shift(go_twist(base, -2), 1)));
    put_block(f, w, 0, corner);
    put_block(fbar, 0, 0, mm_identity(R, n, base));
    put_block(fbar, w, w, mm_identity(R, n, go_shift(go_twist(base, -2), 1)));
    put_block(fbar, w, 0, mm_neg(corner));
    run.check(std::string("equiv: f is a chain map") + tag,
              [&] { return is_chain_map(f, G, M); });
    run.check(std::string("equiv: inverse is a chain map") + tag,
              [&] { return is_chain_map(fbar, M, G); });
    run.check(std::string("equiv: f.inverse = id") + tag, [&] {
      return mm_equal(mm_mul(f, fbar), mm_identity(R, n, M.object));
    });
    run.check(std::string("equiv: inverse.f = id") + tag, [&] {
      return mm_equal(mm_mul(fbar, f), mm_identity(R, n, G.object));
    });
  }
  return run.out;
}

std::vector<Check> suite_theorem(BaseRing R, int n) {
  Runner run;
  Scalar r = Scalar::r(R, n);
  for (int i = 0; i < n; ++i) {
    run.check("main: r h - N h = iota_hi.proj_hi - id" + at("i", i), [&] {
      MatrixMorphism h = jordan_h(R, n, i);
      MatrixMorphism lhs =
          csub(scalar_mult_map(r, h), cmul(jordan_nil(R, n, i), h));
      MatrixMorphism rhs = csub(cmul(iota_hi(R, n, i), proj_hi(R, n, i)),
                                mm_identity(R, n, go_twist(jordan_sum(n, i), 1)));
      return ceq(lhs, rhs);
    });
    run.check("main: h.eps - eps.h = eps_hi.proj_hi" + at("i", i), [&] {
      MatrixMorphism lhs =
          csub(cmul(jordan_h(R, n, i - 1), jordan_eps(R, n, i)),
               cmul(jordan_eps(R, n, i), jordan_h(R, n, i)));
      return ceq(lhs, cmul(eps_hi(R, n, i), proj_hi(R, n, i)));
    });
    run.check("main: r h - h N = iota_lo.proj_lo - id" + at("i", i), [&] {
      MatrixMorphism h = jordan_h(R, n, i);
      MatrixMorphism lhs =
          csub(scalar_mult_map(r, h), cmul(h, jordan_nil(R, n, i)));
      MatrixMorphism rhs =
          csub(cmul(iota_lo(R, n, i), proj_lo(R, n, i)),
               mm_identity(R, n, go_twist(jordan_sum(n, i), -1)));
      return ceq(lhs, rhs);
    });
    run.check("main: h.eta - eta.h = -iota_lo.eta_lo" + at("i", i), [&] {
      MatrixMorphism lhs =
          csub(cmul(jordan_h(R, n, i), jordan_eta(R, n, i)),
               cmul(jordan_eta(R, n, i), jordan_h(R, n, i - 1)));
      return ceq(lhs, mm_neg(cmul(iota_lo(R, n, i), eta_lo(R, n, i))));
    });
  }

  MatrixMorphism H = psi_h(R, n);
  MatrixMorphism N = psi_nil(R, n);
  MatrixMorphism e = psi_eps(R, n);
  MatrixMorphism h = psi_eta(R, n);
  MatrixMorphism il = psi_iota_lo(R, n);
  MatrixMorphism ih = psi_iota_hi(R, n);
  MatrixMorphism eh = psi_eps_hi(R, n);
  MatrixMorphism pl = psi_proj_lo(R, n);
  MatrixMorphism ph = psi_proj_hi(R, n);
  MatrixMorphism hl = psi_eta_lo(R, n);
  run.check("main: r h - N h = iota_hi.proj_hi - id (tower)", [&] {
    MatrixMorphism lhs = csub(scalar_mult_map(r, H), cmul(N, H));
    MatrixMorphism rhs = csub(cmul(ih, ph),
                              mm_identity(R, n, go_twist(psi_total(n), 1)));
    return ceq(lhs, rhs);
  });
  run.check("main: h.eps - eps.h = eps_hi.proj_hi (tower)", [&] {
    return ceq(csub(cmul(H, e), cmul(e, H)), cmul(eh, ph));
  });
  run.check("main: r h - h N = iota_lo.proj_lo - id (tower)", [&] {
    MatrixMorphism lhs = csub(scalar_mult_map(r, H), cmul(H, N));
    MatrixMorphism rhs = csub(cmul(il, pl),
                              mm_identity(R, n, go_twist(psi_total(n), -1)));
    return ceq(lhs, rhs);
  });
  run.check("main: h.eta - eta.h = -iota_lo.eta_lo (tower)", [&] {
    return ceq(csub(cmul(H, h), cmul(h, H)), mm_neg(cmul(il, hl)));
  });

  MatrixMorphism g = open_projection(R, n);
  MatrixMorphism rho = rho_total(R, n);
  std::uint32_t full = full_subset(n);
  run.check("main: id - proj_lo.iota_lo = open projection", [&] {
    MatrixMorphism expect = mm_zero(shriek_total(n), shriek_total(n));
    int k = find_summand(shriek_total(n), full, 0, 0);
    expect.set_entry(k, k, nm_id(R, n, full));
    return ceq(csub(mm_identity(R, n, shriek_total(n)), mm_mul(pl, il)),
               expect);
  });
  run.check("main: id - proj_hi.iota_hi = open projection", [&] {
    MatrixMorphism expect = mm_zero(star_total(n), star_total(n));
    int k = find_summand(star_total(n), full, 0, 0);
    expect.set_entry(k, k, nm_id(R, n, full));
    return ceq(csub(mm_identity(R, n, star_total(n)), mm_mul(ph, ih)),
               expect);
  });
  run.check("main: g.rho = id - proj_lo.iota_lo", [&] {
    return ceq(cmul(g, rho),
               csub(mm_identity(R, n, shriek_total(n)), mm_mul(pl, il)));
  });
  run.check("main: rho.g = id - proj_hi.iota_hi", [&] {
    return ceq(cmul(rho, g),
               csub(mm_identity(R, n, star_total(n)), mm_mul(ph, ih)));
  });
  run.check("main: g.star_eps = 0",
            [&] { return czero(cmul(g, eps_star(R, n))); });
  run.check("main: shriek_eta.g = 0",
            [&] { return czero(cmul(eta_shriek(R, n), g)); });
  run.check("main: g.star_eta - shriek_eps.g = eta_lo.iota_hi - proj_lo.eps_hi",
            [&] {
              MatrixMorphism lhs = csub(cmul(g, eta_star(R, n)),
                                        cmul(eps_shriek(R, n), g));
              return ceq(lhs, csub(cmul(hl, ih), cmul(pl, eh)));
            });

  DifferentialComplex M = mon(psi_mix(R, n));
  DifferentialComplex M1 = twist(M, 1);
  DifferentialComplex C = boundary_cone(R, n);
  int wpsi = static_cast<int>(psi_total(n).size());
  int wstar = static_cast<int>(star_total(n).size());
  MatrixMorphism iota = mm_zero(C.object, M1.object);
  put_block(iota, 0, 0, ih);
  put_block(iota, wpsi, 0, eh);
  put_block(iota, wpsi, wstar, map_shift(il, 1));
  MatrixMorphism proj = mm_zero(M1.object, C.object);
  put_block(proj, 0, 0, ph);
  put_block(proj, wstar, 0, mm_neg(map_shift(hl, 1)));
  put_block(proj, wstar, wpsi, map_shift(pl, 1));
  run.check("main: chain map: iota",
            [&] { return is_chain_map(iota, C, M1); });
  run.check("main: chain map: proj",
            [&] { return is_chain_map(proj, M1, C); });

  MatrixMorphism nu = mm_zero(M.object, M.object);
  for (int k = 0; k < static_cast<int>(M.object.size()); ++k) {
    const Summand& s = M.object.summands[k];
    nu.set_entry(k, k, nm_scaled(nm_id(R, n, s.stratum), r));
    int row = find_summand(M.object, s.stratum, s.t - 2, s.h);
    if (row >= 0) nu.set_entry(row, k, nm_neg(nm_id(R, n, s.stratum)));
  }
  run.check("main: chain map: nu", [&] {
    return mm_equal(mm_mul(M.differential, nu), mm_mul(nu, M.differential));
  });
  run.check("main: chain map: rho", [&] {
    return is_chain_map(rho, shriek_jordan(R, n), star_jordan(R, n));
  });

  run.check("main: homotopy: id - proj.iota", [&] {
    MatrixMorphism h1 = mm_zero(C.object, C.object);
    int col = find_summand(C.object, full, 0, 0);
    int row = find_summand(C.object, full, 0, 1);
    h1.set_entry(row, col, nm_id(R, n, full));
    return homotopy_check(
        C.differential, h1,
        mm_sub(mm_identity(R, n, C.object), mm_mul(proj, iota)));
  });
  run.check("main: homotopy: iota.proj - id", [&] {
    MatrixMorphism h2 = mm_zero(M1.object, M1.object);
    for (int k = 0; k < static_cast<int>(M1.object.size()); ++k) {
      const Summand& s = M1.object.summands[k];
      if (s.h != 0) continue;
      for (int m = 0;; ++m) {
        int row = find_summand(M1.object, s.stratum, s.t + 2 * m, 1);
        if (row < 0) break;
        NormalMorphism nm = nm_id(R, n, s.stratum);
        if (m > 0) nm = nm_scaled(nm, Scalar::r(R, n, m));
        h2.set_entry(row, k, nm);
      }
    }
    return homotopy_check(
        M1.differential, h2,
        mm_sub(mm_mul(iota, proj), mm_identity(R, n, M1.object)));
  });
  run.check("main: homotopy: nu is null", [&] {
    MatrixMorphism hp = mm_zero(M.object, M.object);
    for (int k = 0; k < static_cast<int>(M.object.size()); ++k) {
      const Summand& s = M.object.summands[k];
      if (s.h != 0) continue;
      int row = find_summand(M.object, s.stratum, s.t - 2, 1);
      if (row < 0) return false;
      hp.set_entry(row, k, nm_id(R, n, s.stratum));
    }
    return homotopy_check(M.differential, hp, nu);
  });
  return run.out;
}

std::vector<Check> suite_recursion(BaseRing R, int n) {
  Runner run;
  if (n < 2) return run.out;
  run.check("box: recursion matches the direct build", [&] {
    DifferentialComplex b =
        canonical_form(box_product(shriek_std(R, 1), shriek_std(R, n - 1)));
    DifferentialComplex d = canonical_form(shriek_std(R, n));
    if (!(b.object == d.object)) return false;
    return mm_same(b.differential, d.differential);
  });
  run.check("box: boxed complex validates", [&] {
    UsageLedger scratch;
    ValidationResult v =
        validate(box_product(shriek_std(R, 1), shriek_std(R, n - 1)), scratch);
    if (!v.ok) throw std::runtime_error(v.message);
    return true;
  });
  bool char2 = R.kind == RingKind::prime_field && R.p == 2;
  if (char2) {
    run.check("box: unsigned weights coincide (char 2)", [&] {
      DifferentialComplex bu =
          box_product_unsigned(shriek_std(R, 1), shriek_std(R, n - 1));
      DifferentialComplex b =
          box_product(shriek_std(R, 1), shriek_std(R, n - 1));
      UsageLedger scratch;
      return validate(bu, scratch).ok && mm_same(bu.differential, b.differential);
    });
  } else {
    run.check("box: unsigned weights break d^2 = 0", [&] {
      DifferentialComplex bu =
          box_product_unsigned(shriek_std(R, 1), shriek_std(R, n - 1));
      UsageLedger scratch;
      return !validate(bu, scratch).ok;
    });
  }
  return run.out;
}

std::vector<Check> suite_nearby(BaseRing R, int n, UsageLedger* ledger) {
  std::vector<Check> out;
  auto append = [&](std::vector<Check> cs) {
    for (Check& c : cs) out.push_back(std::move(c));
  };
  append(suite_level(R, n));
  append(suite_jordan(R, n, ledger));
  append(suite_edge(R, n));
  append(suite_extension(R, n));
  append(suite_psi(R, n, ledger));
  append(suite_complexes(R, n, ledger));
  append(suite_equivalence(R, n));
  append(suite_theorem(R, n));
  append(suite_recursion(R, n));
  return out;
}

UsageLedger usage_report(BaseRing R, int n) {
  UsageLedger ledger;
  suite_jordan(R, n, &ledger);
  suite_psi(R, n, &ledger);
  validate(psi_mix(R, n), ledger);
  return ledger;
}

}  // namespace parity
