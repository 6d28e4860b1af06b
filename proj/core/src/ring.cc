#include "parity/ring.hh"

#include <numeric>

namespace parity {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t checked_narrow(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw RingError(std::string("coefficient overflow in ") + what);
  return static_cast<std::int64_t>(v);
}

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

// Reduced fraction with positive denominator.
Coef q_norm(__int128 num, __int128 den) {
  if (den == 0) throw RingError("zero denominator");
  if (num == 0) return {0, 1};
  if (den < 0) { num = -num; den = -den; }
  __int128 a = num < 0 ? -num : num, b = den;
  while (b) { __int128 t = a % b; a = b; b = t; }
  num /= a;
  den /= a;
  return {checked_narrow(num, "rational numerator"),
          checked_narrow(den, "rational denominator")};
}

}  // namespace

BaseRing BaseRing::GF(std::int64_t p) {
  if (!is_prime(p)) throw RingError("prime-field modulus must be prime");
  return {RingKind::prime_field, p};
}

std::string BaseRing::name() const {
  switch (kind) {
    case RingKind::integers: return "z";
    case RingKind::rationals: return "q";
    case RingKind::prime_field: return "gf:" + std::to_string(p);
  }
  return "?";
}

BaseRing ring_from_text(const std::string& text) {
  if (text == "z") return BaseRing::Z();
  if (text == "q") return BaseRing::Q();
  if (text.rfind("gf:", 0) == 0) {
    std::size_t pos = 0;
    std::int64_t p = std::stoll(text.substr(3), &pos);
    if (pos != text.size() - 3) throw RingError("bad ring spec: " + text);
    return BaseRing::GF(p);
  }
  throw RingError("unknown ring: " + text + " (expected z, q, or gf:P)");
}

Coef c_from_int(const BaseRing& R, std::int64_t v) {
  if (R.kind == RingKind::prime_field) return {mod_norm(v, R.p), 1};
  return {v, 1};
}

Coef c_add(const BaseRing& R, const Coef& a, const Coef& b) {
  switch (R.kind) {
    case RingKind::integers:
      return {checked_narrow(static_cast<__int128>(a.num) + b.num, "add"), 1};
    case RingKind::prime_field:
      return {mod_norm(a.num + b.num, R.p), 1};
    case RingKind::rationals:
      return q_norm(static_cast<__int128>(a.num) * b.den +
                        static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
  }
  throw RingError("bad ring");
}

Coef c_sub(const BaseRing& R, const Coef& a, const Coef& b) {
  return c_add(R, a, c_neg(R, b));
}

Coef c_mul(const BaseRing& R, const Coef& a, const Coef& b) {
  switch (R.kind) {
    case RingKind::integers:
      return {checked_narrow(static_cast<__int128>(a.num) * b.num, "mul"), 1};
    case RingKind::prime_field:
      return {checked_narrow(static_cast<__int128>(a.num) * b.num % R.p, "mul"), 1};
    case RingKind::rationals:
      return q_norm(static_cast<__int128>(a.num) * b.num,
                    static_cast<__int128>(a.den) * b.den);
  }
  throw RingError("bad ring");
}

Coef c_neg(const BaseRing& R, const Coef& a) {
  if (R.kind == RingKind::prime_field) return {mod_norm(-a.num, R.p), 1};
  return {-a.num, a.den};
}

Coef c_inv(const BaseRing& R, const Coef& a) {
  if (c_is_zero(a)) throw RingError("inverse of zero");
  switch (R.kind) {
    case RingKind::integers:
      if (a.num == 1 || a.num == -1) return a;
      throw RingError("non-unit integer has no inverse");
    case RingKind::rationals:
      return q_norm(a.den, a.num);
    case RingKind::prime_field: {
      // Fermat: a^(p-2) mod p.
      std::int64_t base = mod_norm(a.num, R.p), res = 1, e = R.p - 2;
      while (e) {
        if (e & 1) res = checked_narrow(static_cast<__int128>(res) * base % R.p, "inv");
        base = checked_narrow(static_cast<__int128>(base) * base % R.p, "inv");
        e >>= 1;
      }
      return {res, 1};
    }
  }
  throw RingError("bad ring");
}

bool c_eq(const Coef& a, const Coef& b) { return a.num == b.num && a.den == b.den; }

bool c_is_negative(const BaseRing& R, const Coef& a) {
  if (R.kind == RingKind::prime_field) return false;
  return a.num < 0;
}

std::string c_text(const Coef& a) {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

Coef c_parse(const BaseRing& R, const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(text, &pos);
    if (pos != text.size()) throw RingError("bad coefficient: " + text);
    return c_from_int(R, v);
  }
  if (R.kind != RingKind::rationals) throw RingError("fraction outside Q: " + text);
  std::int64_t num = std::stoll(text.substr(0, slash));
  std::int64_t den = std::stoll(text.substr(slash + 1));
  return q_norm(num, den);
}

}  // namespace parity
