#pragma once

// Exact base-ring arithmetic: Z, Q, or a prime field F_p.
// Every coefficient in the project flows through these routines; there is no
// floating point anywhere. Overflow is detected (via __int128 intermediates)
// and reported instead of wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace parity {

enum class RingKind { integers, rationals, prime_field };

struct BaseRing {
  RingKind kind = RingKind::integers;
  std::int64_t p = 0;  // modulus, prime_field only

  static BaseRing Z() { return {RingKind::integers, 0}; }
  static BaseRing Q() { return {RingKind::rationals, 0}; }
  static BaseRing GF(std::int64_t p);

  bool operator==(const BaseRing& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const BaseRing& o) const { return !(*this == o); }

  std::string name() const;
};

// Parses "z", "q", or "gf:P".
BaseRing ring_from_text(const std::string& text);

struct RingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A coefficient. den == 1 except over the rationals; prime-field values are
// normalized to [0, p).
struct Coef {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Coef c_from_int(const BaseRing& R, std::int64_t v);
Coef c_add(const BaseRing& R, const Coef& a, const Coef& b);
Coef c_sub(const BaseRing& R, const Coef& a, const Coef& b);
Coef c_mul(const BaseRing& R, const Coef& a, const Coef& b);
Coef c_neg(const BaseRing& R, const Coef& a);
// Multiplicative inverse; defined over Q and F_p, and for +-1 over Z.
Coef c_inv(const BaseRing& R, const Coef& a);

inline bool c_is_zero(const Coef& a) { return a.num == 0; }
bool c_eq(const Coef& a, const Coef& b);
bool c_is_negative(const BaseRing& R, const Coef& a);

// Canonical text: "3", "-2/5", prime-field residues in [0, p).
std::string c_text(const Coef& a);
// Parses the canonical text form back.
Coef c_parse(const BaseRing& R, const std::string& text);

}  // namespace parity
