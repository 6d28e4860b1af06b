#include "parity/complexes.hh"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace parity {

namespace {

std::string cell_label(const MatrixMorphism& m, int row, int col) {
  const NormalMorphism* nm = m.entry(row, col);
  return "(" + std::to_string(row) + "," + std::to_string(col) +
         ") = " + (nm ? nm_text(*nm) : "0");
}

}  // namespace

bool summand_canonical_less(const Summand& a, const Summand& b) {
  if (a.p() != b.p()) return a.p() < b.p();
  if (a.t != b.t) return a.t < b.t;
  int ka = subset_size(a.stratum), kb = subset_size(b.stratum);
  if (ka != kb) return ka > kb;
  return subset_lex_less(a.stratum, b.stratum);
}

Summand su_twist(const Summand& s, int k) { return {s.stratum, s.t + k, s.h}; }
Summand su_shift(const Summand& s, int m) { return {s.stratum, s.t, s.h + m}; }
Summand su_tate(const Summand& s, int sig) {
  return {s.stratum, s.t - sig, s.h + sig};
}

GradedObject GradedObject::canonicalized(std::vector<int>* perm) const {
  std::vector<int> idx(summands.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return summand_canonical_less(summands[a], summands[b]);
  });
  GradedObject out;
  out.summands.reserve(summands.size());
  for (int i : idx) out.summands.push_back(summands[i]);
  if (perm) {
    perm->assign(summands.size(), 0);
    for (std::size_t new_pos = 0; new_pos < idx.size(); ++new_pos)
      (*perm)[idx[new_pos]] = static_cast<int>(new_pos);
  }
  return out;
}

GradedObject go_twist(const GradedObject& o, int k) {
  GradedObject out = o;
  for (auto& s : out.summands) s = su_twist(s, k);
  return out;
}

GradedObject go_shift(const GradedObject& o, int m) {
  GradedObject out = o;
  for (auto& s : out.summands) s = su_shift(s, m);
  return out;
}

GradedObject go_tate(const GradedObject& o, int sig) {
  GradedObject out = o;
  for (auto& s : out.summands) s = su_tate(s, sig);
  return out;
}

GradedObject go_concat(const GradedObject& a, const GradedObject& b) {
  GradedObject out = a;
  out.summands.insert(out.summands.end(), b.summands.begin(),
                      b.summands.end());
  return out;
}

void MatrixMorphism::set_entry(int row, int col, const NormalMorphism& nm) {
  if (row < 0 || col < 0 || row >= static_cast<int>(target.size()) ||
      col >= static_cast<int>(source.size()))
    throw std::out_of_range("matrix entry outside the summand grid");
  if (nm.source != source.summands[col].stratum ||
      nm.target != target.summands[row].stratum)
    throw std::logic_error("cell endpoints disagree with the summand strata");
  if (nm.coef.free_is_zero()) {
    entries.erase({row, col});
    return;
  }
  entries[{row, col}] = nm;
}

const NormalMorphism* MatrixMorphism::entry(int row, int col) const {
  auto it = entries.find({row, col});
  return it == entries.end() ? nullptr : &it->second;
}

MatrixMorphism mm_zero(const GradedObject& src, const GradedObject& tgt) {
  return {src, tgt, {}};
}

MatrixMorphism mm_identity(BaseRing R, int n, const GradedObject& obj) {
  MatrixMorphism out{obj, obj, {}};
  for (std::size_t k = 0; k < obj.size(); ++k)
    out.set_entry(static_cast<int>(k), static_cast<int>(k),
                  nm_id(R, n, obj.summands[k].stratum));
  return out;
}

MatrixMorphism mm_diag(BaseRing R, int n, const GradedObject& obj,
                       const Scalar& s) {
  MatrixMorphism out{obj, obj, {}};
  for (std::size_t k = 0; k < obj.size(); ++k)
    out.set_entry(static_cast<int>(k), static_cast<int>(k),
                  nm_scaled(nm_id(R, n, obj.summands[k].stratum), s));
  return out;
}

MatrixMorphism mm_scalar(BaseRing R, int n, const GradedObject& obj,
                         const Scalar& s) {
  Bidegree d = s.bidegree();
  GradedObject tgt = go_twist(go_shift(obj, static_cast<int>(d.hom)),
                              static_cast<int>(-d.tate));
  MatrixMorphism out{obj, tgt, {}};
  for (std::size_t k = 0; k < obj.size(); ++k)
    out.set_entry(static_cast<int>(k), static_cast<int>(k),
                  nm_scaled(nm_id(R, n, obj.summands[k].stratum), s));
  return out;
}

MatrixMorphism mm_add(const MatrixMorphism& a, const MatrixMorphism& b) {
  if (!(a.source == b.source) || !(a.target == b.target))
    throw std::logic_error("mm_add: endpoints do not match");
  MatrixMorphism out = a;
  for (const auto& [key, nm] : b.entries) {
    auto it = out.entries.find(key);
    if (it == out.entries.end()) {
      out.entries[key] = nm;
    } else {
      NormalMorphism sum = nm_add(it->second, nm);
      if (sum.coef.free_is_zero())
        out.entries.erase(it);
      else
        it->second = sum;
    }
  }
  return out;
}

MatrixMorphism mm_neg(const MatrixMorphism& a) {
  MatrixMorphism out = a;
  for (auto& [key, nm] : out.entries) nm = nm_neg(nm);
  return out;
}

MatrixMorphism mm_sub(const MatrixMorphism& a, const MatrixMorphism& b) {
  return mm_add(a, mm_neg(b));
}

MatrixMorphism mm_mul(const MatrixMorphism& g, const MatrixMorphism& f) {
  if (!(f.target == g.source))
    throw std::logic_error("mm_mul: inner objects do not match");
  // group f's entries by row so each g entry meets only matching columns
  std::unordered_map<int, std::vector<std::pair<int, const NormalMorphism*>>>
      f_by_row;
  for (const auto& [key, nm] : f.entries)
    f_by_row[key.first].push_back({key.second, &nm});

  MatrixMorphism out{f.source, g.target, {}};
  for (const auto& [gkey, gnm] : g.entries) {
    auto it = f_by_row.find(gkey.second);
    if (it == f_by_row.end()) continue;
    for (const auto& [col, fnm] : it->second) {
      NormalMorphism term = nm_compose(gnm, *fnm);
      if (term.coef.free_is_zero()) continue;
      auto key = std::make_pair(gkey.first, col);
      auto slot = out.entries.find(key);
      if (slot == out.entries.end()) {
        out.entries[key] = term;
      } else {
        NormalMorphism sum = nm_add(slot->second, term);
        if (sum.coef.free_is_zero())
          out.entries.erase(slot);
        else
          slot->second = sum;
      }
    }
  }
  return out;
}

MatrixMorphism scalar_mult_map(const Scalar& s, const MatrixMorphism& m) {
  Bidegree d = s.bidegree();
  MatrixMorphism out{m.source,
                     go_twist(go_shift(m.target, static_cast<int>(d.hom)),
                              static_cast<int>(-d.tate)),
                     {}};
  for (const auto& [key, nm] : m.entries) {
    NormalMorphism scaled = nm_scaled(nm, s);
    if (!scaled.coef.free_is_zero()) out.entries[key] = scaled;
  }
  return out;
}

MatrixMorphism map_twist(const MatrixMorphism& m, int k) {
  MatrixMorphism out = m;
  out.source = go_twist(out.source, k);
  out.target = go_twist(out.target, k);
  return out;
}

MatrixMorphism map_shift(const MatrixMorphism& m, int shift) {
  MatrixMorphism out = m;
  out.source = go_shift(out.source, shift);
  out.target = go_shift(out.target, shift);
  return out;
}

MatrixMorphism map_tate(const MatrixMorphism& m, int sig) {
  MatrixMorphism out = m;
  out.source = go_tate(out.source, sig);
  out.target = go_tate(out.target, sig);
  return out;
}

bool mm_is_zero(const MatrixMorphism& a) {
  for (const auto& [key, nm] : a.entries)
    if (!nm.coef.is_zero()) return false;
  return true;
}

namespace {

enum class CellComparison { equal, relation_multiple, different };

CellComparison compare_cell(const NormalMorphism* x, const NormalMorphism* y) {
  if (!x && !y) return CellComparison::equal;
  Scalar diff = x ? (y ? scalar_add(x->coef, scalar_neg(y->coef)) : x->coef)
                  : y->coef;
  if (diff.free_is_zero()) return CellComparison::equal;
  if (diff.is_relation_multiple()) return CellComparison::relation_multiple;
  return CellComparison::different;
}

bool mm_equal_impl(const MatrixMorphism& a, const MatrixMorphism& b,
                   UsageLedger* ledger) {
  if (!(a.source == b.source) || !(a.target == b.target)) return false;
  std::map<std::pair<int, int>, char> keys;
  for (const auto& [key, nm] : a.entries) keys[key] = 1;
  for (const auto& [key, nm] : b.entries) keys[key] = 1;
  for (const auto& [key, unused] : keys) {
    const NormalMorphism* x = a.entry(key.first, key.second);
    const NormalMorphism* y = b.entry(key.first, key.second);
    switch (compare_cell(x, y)) {
      case CellComparison::equal:
        break;
      case CellComparison::relation_multiple: {
        std::uint32_t src = a.source.summands[key.second].stratum;
        std::uint32_t tgt = a.target.summands[key.first].stratum;
        ledger->record(kUnitSumTag, src);
        if (tgt != src) ledger->record(kUnitSumTag, tgt);
        break;
      }
      case CellComparison::different:
        return false;
    }
  }
  return true;
}

}  // namespace

bool mm_equal(const MatrixMorphism& a, const MatrixMorphism& b) {
  UsageLedger scratch;
  return mm_equal_impl(a, b, &scratch);
}

bool mm_equal_with_ledger(const MatrixMorphism& a, const MatrixMorphism& b,
                          UsageLedger& ledger) {
  return mm_equal_impl(a, b, &ledger);
}

Bidegree entry_bidegree(const MatrixMorphism& m, int row, int col) {
  const NormalMorphism* nm = m.entry(row, col);
  if (!nm) throw std::invalid_argument("bidegree of an absent entry");
  const Summand& s1 = m.source.summands[col];
  const Summand& s2 = m.target.summands[row];
  int l = nm_word_length(*nm);
  Bidegree sd = nm->coef.bidegree();
  std::int64_t dt = s2.t - s1.t;
  return {(s2.p() - s1.p()) + l + sd.hom + dt, l + sd.tate + dt};
}

bool entries_have_bidegree(const MatrixMorphism& m, Bidegree expected,
                           std::string* why) {
  for (const auto& [key, nm] : m.entries) {
    Bidegree got;
    try {
      got = entry_bidegree(m, key.first, key.second);
    } catch (const std::invalid_argument&) {
      if (why)
        *why = "entry " + cell_label(m, key.first, key.second) +
               " has no well-defined bidegree";
      return false;
    }
    if (!(got == expected)) {
      if (why)
        *why = "entry " + cell_label(m, key.first, key.second) +
               " has bidegree (" + std::to_string(got.hom) + "," +
               std::to_string(got.tate) + "), expected (" +
               std::to_string(expected.hom) + "," +
               std::to_string(expected.tate) + ")";
      return false;
    }
  }
  return true;
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Gm:
      return "Gm";
    case Regime::mix:
      return "mix";
    case Regime::mon:
      return "mon";
  }
  return "?";
}

namespace {

// Reports the first cell violating the regime's scalar-content rule.
bool regime_content_ok(const DifferentialComplex& c, std::string* why) {
  for (const auto& [key, nm] : c.differential.entries) {
    bool has_xibar = nm.coef.xibar_flag() != 0;
    bool has_r = nm.coef.r_power() != 0;
    bool bad = false;
    switch (c.regime) {
      case Regime::Gm:
        bad = has_xibar || has_r;
        break;
      case Regime::mix:
        bad = has_r;
        break;
      case Regime::mon:
        bad = has_xibar;
        break;
    }
    if (bad) {
      if (why)
        *why = "entry " + cell_label(c.differential, key.first, key.second) +
               " is not allowed in regime " + regime_name(c.regime);
      return false;
    }
  }
  return true;
}

std::string first_difference(const MatrixMorphism& lhs,
                             const MatrixMorphism& rhs) {
  std::map<std::pair<int, int>, char> keys;
  for (const auto& [key, nm] : lhs.entries) keys[key] = 1;
  for (const auto& [key, nm] : rhs.entries) keys[key] = 1;
  for (const auto& [key, unused] : keys) {
    if (compare_cell(lhs.entry(key.first, key.second),
                     rhs.entry(key.first, key.second)) ==
        CellComparison::different)
      return "cell " + cell_label(lhs, key.first, key.second) +
             " vs " + cell_label(rhs, key.first, key.second);
  }
  return "no differing cell";
}

}  // namespace

ValidationResult validate(const DifferentialComplex& c, UsageLedger& ledger) {
  std::string why;
  if (!(c.differential.source == c.object) ||
      !(c.differential.target == c.object))
    return {false, "differential is not endo-shaped on the object"};
  if (!regime_content_ok(c, &why)) return {false, why};
  if (!entries_have_bidegree(c.differential, {1, 0}, &why))
    return {false, why};

  const BaseRing R = [&] {
    for (const auto& [key, nm] : c.differential.entries)
      return nm.coef.ring();
    return BaseRing::Z();
  }();

  MatrixMorphism dd = mm_mul(c.differential, c.differential);
  MatrixMorphism expected = mm_zero(c.object, c.object);
  MatrixMorphism lhs = dd;
  switch (c.regime) {
    case Regime::Gm:
      break;
    case Regime::mix:
      lhs = mm_add(dd, kappa(c.differential));
      break;
    case Regime::mon:
      expected = mm_diag(R, c.n, c.object,
                         scalar_mul(Scalar::r(R, c.n), Scalar::xi(R, c.n)));
      break;
  }
  if (!mm_equal_with_ledger(lhs, expected, ledger))
    return {false, "differential condition fails in regime " +
                       regime_name(c.regime) + ": " +
                       first_difference(lhs, expected)};
  return {true, ""};
}

MatrixMorphism kappa(const MatrixMorphism& m) {
  MatrixMorphism out{m.source, m.target, {}};
  for (const auto& [key, nm] : m.entries) {
    if (nm.coef.r_power() != 0)
      throw std::invalid_argument("kappa: entry carries r");
    if (nm.coef.xibar_flag() == 0) continue;
    const BaseRing& R = nm.coef.ring();
    Scalar s = scalar_mul(Scalar::xi(R, nm.coef.n()), nm.coef.without_xibar());
    out.entries[key] = {nm.source, nm.target, s};
  }
  return out;
}

DifferentialComplex shift(const DifferentialComplex& c, int m) {
  DifferentialComplex out = c;
  out.object = go_shift(c.object, m);
  out.differential.source = out.object;
  out.differential.target = out.object;
  if (m & 1)
    for (auto& [key, nm] : out.differential.entries) nm = nm_neg(nm);
  return out;
}

DifferentialComplex twist(const DifferentialComplex& c, int k) {
  DifferentialComplex out = c;
  out.object = go_twist(c.object, k);
  out.differential.source = out.object;
  out.differential.target = out.object;
  return out;
}

bool is_chain_map(const MatrixMorphism& phi, const DifferentialComplex& x,
                  const DifferentialComplex& y) {
  if (!(phi.source == x.object) || !(phi.target == y.object)) return false;
  return mm_equal(mm_mul(phi, x.differential), mm_mul(y.differential, phi));
}

DifferentialComplex cone(const MatrixMorphism& phi,
                         const DifferentialComplex& x,
                         const DifferentialComplex& y) {
  if (x.regime != y.regime)
    throw std::invalid_argument("cone: regime mismatch");
  std::string why;
  if (!entries_have_bidegree(phi, {0, 0}, &why))
    throw std::invalid_argument("cone: connecting map is not (0,0): " + why);
  if (!is_chain_map(phi, x, y))
    throw std::invalid_argument("cone: not a chain map");

  int w = static_cast<int>(y.object.size());
  DifferentialComplex out;
  out.n = x.n;
  out.regime = x.regime;
  out.object = go_concat(y.object, go_shift(x.object, 1));
  out.differential = mm_zero(out.object, out.object);
  for (const auto& [key, nm] : y.differential.entries)
    out.differential.set_entry(key.first, key.second, nm);
  for (const auto& [key, nm] : phi.entries)
    out.differential.set_entry(key.first, w + key.second, nm);
  for (const auto& [key, nm] : x.differential.entries)
    out.differential.set_entry(w + key.first, w + key.second, nm_neg(nm));
  return out;
}

DifferentialComplex mon(const DifferentialComplex& c) {
  if (c.regime != Regime::mix)
    throw std::invalid_argument("mon: input must be in regime mix");
  for (const auto& [key, nm] : c.differential.entries)
    if (nm.coef.r_power() != 0)
      throw std::invalid_argument("mon: input entry carries r");

  int w = static_cast<int>(c.object.size());
  DifferentialComplex out;
  out.n = c.n;
  out.regime = Regime::mon;
  out.object = go_concat(c.object, go_shift(go_twist(c.object, -2), 1));
  out.differential = mm_zero(out.object, out.object);

  BaseRing R = BaseRing::Z();
  for (const auto& [key, nm] : c.differential.entries) {
    R = nm.coef.ring();
    if (nm.coef.xibar_flag() == 0) {
      // a-block, repeated negated in the bottom-right corner
      out.differential.set_entry(key.first, key.second, nm);
      out.differential.set_entry(w + key.first, w + key.second, nm_neg(nm));
    } else {
      // xibar part lands in the connecting block with the flag stripped
      NormalMorphism stripped{nm.source, nm.target, nm.coef.without_xibar()};
      out.differential.set_entry(key.first, w + key.second, stripped);
    }
  }
  // r id and xi id diagonals; a complex with no entries falls back to Z
  for (int k = 0; k < w; ++k) {
    std::uint32_t I = c.object.summands[k].stratum;
    NormalMorphism rid = nm_scaled(nm_id(R, c.n, I), Scalar::r(R, c.n));
    NormalMorphism xid = nm_scaled(nm_id(R, c.n, I), Scalar::xi(R, c.n));
    const NormalMorphism* prev = out.differential.entry(k, w + k);
    out.differential.set_entry(k, w + k, prev ? nm_add(*prev, rid) : rid);
    out.differential.set_entry(w + k, k, xid);
  }
  return out;
}

bool homotopy_check(const MatrixMorphism& d, const MatrixMorphism& h,
                    const MatrixMorphism& target) {
  return mm_equal(mm_add(mm_mul(d, h), mm_mul(h, d)), target);
}

namespace {

Coef constant_cell_coef(const NormalMorphism& nm) {
  const Scalar& s = nm.coef;
  if (s.xibar_flag() != 0 || s.r_power() != 0)
    throw std::invalid_argument("box product: cell is not a constant");
  const auto& terms = s.poly().terms();
  if (terms.size() != 1 || terms.begin()->first.total_degree() != 0)
    throw std::invalid_argument("box product: cell is not a constant");
  return terms.begin()->second;
}

DifferentialComplex box_impl(const DifferentialComplex& c1,
                             const DifferentialComplex& c2, bool signed_rule) {
  if (c1.regime != Regime::Gm || c2.regime != Regime::Gm)
    throw std::invalid_argument("box product: both factors must be regime Gm");
  if (c1.n != 1)
    throw std::invalid_argument("box product: first factor must live on n=1");

  int n = c2.n + 1;
  int w2 = static_cast<int>(c2.object.size());
  auto joint = [&](int i1, int i2) { return i1 * w2 + i2; };
  auto joint_mask = [&](std::uint32_t m1, std::uint32_t m2) {
    return m1 | (m2 << 1);
  };

  DifferentialComplex out;
  out.n = n;
  out.regime = Regime::Gm;
  for (const auto& s1 : c1.object.summands)
    for (const auto& s2 : c2.object.summands)
      out.object.summands.push_back(
          {joint_mask(s1.stratum, s2.stratum), s1.t + s2.t, s1.h + s2.h});
  out.differential = mm_zero(out.object, out.object);

  // d' (x) id
  for (const auto& [key, nm] : c1.differential.entries) {
    Coef coef = constant_cell_coef(nm);
    for (int k = 0; k < w2; ++k) {
      std::uint32_t m2 = c2.object.summands[k].stratum;
      NormalMorphism cell{joint_mask(nm.source, m2), joint_mask(nm.target, m2),
                          Scalar::constant(nm.coef.ring(), n, coef)};
      out.differential.set_entry(joint(key.first, k), joint(key.second, k),
                                 cell);
    }
  }
  // id (x) d'', weighted by (-1)^{p'} under the signed rule
  for (int k = 0; k < static_cast<int>(c1.object.size()); ++k) {
    const Summand& s1 = c1.object.summands[k];
    bool negate = signed_rule && (((s1.p() % 2) + 2) % 2 == 1);
    for (const auto& [key, nm] : c2.differential.entries) {
      Coef coef = constant_cell_coef(nm);
      NormalMorphism cell{joint_mask(s1.stratum, nm.source),
                          joint_mask(s1.stratum, nm.target),
                          Scalar::constant(nm.coef.ring(), n, coef)};
      if (negate) cell = nm_neg(cell);
      auto rc = std::make_pair(joint(k, key.first), joint(k, key.second));
      const NormalMorphism* prev =
          out.differential.entry(rc.first, rc.second);
      out.differential.set_entry(rc.first, rc.second,
                                 prev ? nm_add(*prev, cell) : cell);
    }
  }
  return out;
}

}  // namespace

DifferentialComplex box_product(const DifferentialComplex& c1,
                                const DifferentialComplex& c2) {
  return box_impl(c1, c2, true);
}

DifferentialComplex box_product_unsigned(const DifferentialComplex& c1,
                                         const DifferentialComplex& c2) {
  return box_impl(c1, c2, false);
}

}  // namespace parity
