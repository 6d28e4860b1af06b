#include "parity/poly.hh"

namespace parity {

Poly Poly::constant(const BaseRing& R, std::int64_t v) {
  return from_coef(c_from_int(R, v));
}

Poly Poly::from_coef(const Coef& c) {
  Poly p;
  if (!c_is_zero(c)) p.terms_[Mono{}] = c;
  return p;
}

Poly Poly::variable(const BaseRing& R, int slot, int exp) {
  if (slot < 0 || slot >= kSlots) throw RingError("variable slot out of range");
  Poly p;
  Mono m;
  m.e[slot] = static_cast<std::uint8_t>(exp);
  p.terms_[m] = c_from_int(R, 1);
  return p;
}

void Poly::add_term(const BaseRing& R, const Mono& m, const Coef& c) {
  if (c_is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second = c_add(R, it->second, c);
  if (c_is_zero(it->second)) terms_.erase(it);
}

Poly p_add(const BaseRing& R, const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(R, m, c);
  return out;
}

Poly p_sub(const BaseRing& R, const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(R, m, c_neg(R, c));
  return out;
}

Poly p_neg(const BaseRing& R, const Poly& a) {
  Poly out;
  for (const auto& [m, c] : a.terms_) out.terms_[m] = c_neg(R, c);
  return out;
}

Poly p_scale(const BaseRing& R, const Coef& c, const Poly& a) {
  Poly out;
  if (c_is_zero(c)) return out;
  for (const auto& [m, k] : a.terms_) {
    Coef v = c_mul(R, c, k);
    if (!c_is_zero(v)) out.terms_[m] = v;
  }
  return out;
}

Poly p_mul(const BaseRing& R, const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Mono m;
      for (int i = 0; i < kSlots; ++i) {
        int s = ma.e[i] + mb.e[i];
        if (s > 255) throw RingError("monomial exponent overflow");
        m.e[i] = static_cast<std::uint8_t>(s);
      }
      out.add_term(R, m, c_mul(R, ca, cb));
    }
  return out;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (!(it->first == jt->first) || !c_eq(it->second, jt->second)) return false;
  return true;
}

bool Poly::homogeneous(int* degree_out) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int md = m.total_degree();
    if (first) {
      d = md;
      first = false;
    } else if (md != d) {
      return false;
    }
  }
  if (degree_out) *degree_out = d;
  return true;
}

Poly Poly::reduce(const BaseRing& R, int n) const {
  if (n < 1 || n > kMaxN) throw RingError("reduce: n out of range");
  const int an = n - 1;  // slot of alpha_n
  // alpha_n image: xi - alpha_1 - ... - alpha_{n-1}
  Poly image = Poly::variable(R, kXiSlot);
  for (int i = 0; i < n - 1; ++i)
    image = p_sub(R, image, Poly::variable(R, i));

  Poly out;
  for (const auto& [m, c] : terms_) {
    int k = m.e[an];
    Mono base = m;
    base.e[an] = 0;
    Poly term = Poly::from_coef(c);
    {
      Poly basep;
      basep.terms_[base] = c_from_int(R, 1);
      term = p_mul(R, term, basep);
    }
    for (int j = 0; j < k; ++j) term = p_mul(R, term, image);
    out = p_add(R, out, term);
  }
  return out;
}

}  // namespace parity
