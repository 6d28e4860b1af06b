#include "parity/scalar.hh"

#include <cctype>
#include <vector>

namespace parity {

namespace {

void check_same_context(const Scalar& a, const Scalar& b, const char* op) {
  if (a.ring() != b.ring())
    throw RingError(std::string(op) + ": mismatched base rings");
  if (a.n() != b.n()) throw RingError(std::string(op) + ": mismatched n");
}

std::string mono_text(const Mono& m) {
  std::string out;
  auto put = [&](const std::string& v, int k) {
    if (k == 0) return;
    if (!out.empty()) out += "*";
    out += v;
    if (k >= 2) out += "^" + std::to_string(k);
  };
  for (int i = 0; i < kMaxN; ++i) put("a" + std::to_string(i + 1), m.e[i]);
  put("x", m.e[kXiSlot]);
  return out;
}

// One polynomial term without its sign: "1", "2/3", "a1", "3*a2*x^2".
std::string term_abs_text(const BaseRing& R, const Mono& m, const Coef& c) {
  Coef a = c;
  if (c_is_negative(R, a)) a = c_neg(R, a);
  std::string abs = c_text(a);
  std::string mono = mono_text(m);
  if (mono.empty()) return abs;
  if (abs == "1") return mono;
  return abs + "*" + mono;
}

std::string poly_text(const BaseRing& R, const Poly& p) {
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c_is_negative(R, c);
    std::string term = term_abs_text(R, m, c);
    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace

Scalar Scalar::one(BaseRing R, int n) { return integer(R, n, 1); }

Scalar Scalar::integer(BaseRing R, int n, std::int64_t v) {
  Scalar s(R, n);
  s.poly_ = Poly::constant(R, v);
  return s;
}

Scalar Scalar::constant(BaseRing R, int n, const Coef& c) {
  Scalar s(R, n);
  s.poly_ = Poly::from_coef(c);
  return s;
}

Scalar Scalar::alpha(BaseRing R, int n, int i) {
  if (i < 1 || i > n) throw RingError("alpha index out of range");
  Scalar s(R, n);
  s.poly_ = Poly::variable(R, i - 1);
  return s;
}

Scalar Scalar::xi(BaseRing R, int n) {
  Scalar s(R, n);
  s.poly_ = Poly::variable(R, kXiSlot);
  return s;
}

Scalar Scalar::xibar(BaseRing R, int n) {
  Scalar s(R, n);
  s.xibar_ = 1;
  s.poly_ = Poly::constant(R, 1);
  return s;
}

Scalar Scalar::r(BaseRing R, int n, int power) {
  if (power < 0) throw RingError("negative r power");
  Scalar s(R, n);
  s.r_pow_ = power;
  s.poly_ = Poly::constant(R, 1);
  return s;
}

void Scalar::canonicalize() {
  if (poly_.is_zero()) {
    xibar_ = 0;
    r_pow_ = 0;
  }
}

bool Scalar::is_zero() const { return poly_.reduce(ring_, n_).is_zero(); }

Scalar Scalar::reduced() const {
  Scalar out(ring_, n_);
  out.poly_ = poly_.reduce(ring_, n_);
  out.xibar_ = xibar_;
  out.r_pow_ = r_pow_;
  out.canonicalize();
  return out;
}

Scalar Scalar::without_xibar() const {
  Scalar out = *this;
  out.xibar_ = 0;
  return out;
}

bool Scalar::equals(const Scalar& o) const {
  check_same_context(*this, o, "equals");
  Scalar a = reduced(), b = o.reduced();
  return a.xibar_ == b.xibar_ && a.r_pow_ == b.r_pow_ && a.poly_ == b.poly_;
}

bool Scalar::is_one() const { return equals(Scalar::one(ring_, n_)); }

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
  check_same_context(a, b, "scalar_mul");
  Scalar out(a.ring_, a.n_);
  int e = a.xibar_ + b.xibar_;
  if (e >= 2) return out;  // xibar squares to zero
  out.xibar_ = e;
  out.r_pow_ = a.r_pow_ + b.r_pow_;
  out.poly_ = p_mul(a.ring_, a.poly_, b.poly_);
  out.canonicalize();
  return out;
}

Scalar scalar_add(const Scalar& a, const Scalar& b) {
  check_same_context(a, b, "scalar_add");
  if (a.free_is_zero()) return b;
  if (b.free_is_zero()) return a;
  if (a.xibar_ != b.xibar_ || a.r_pow_ != b.r_pow_)
    throw std::logic_error(
        "scalar_add: mixed xibar/r type (inhomogeneous accumulation)");
  Scalar out(a.ring_, a.n_);
  out.xibar_ = a.xibar_;
  out.r_pow_ = a.r_pow_;
  out.poly_ = p_add(a.ring_, a.poly_, b.poly_);
  out.canonicalize();
  return out;
}

Scalar scalar_neg(const Scalar& a) {
  Scalar out = a;
  out.poly_ = p_neg(a.ring_, a.poly_);
  return out;
}

Scalar scalar_scale(const Scalar& a, std::int64_t v) {
  Scalar out = a;
  out.poly_ = p_scale(a.ring_, c_from_int(a.ring_, v), a.poly_);
  out.canonicalize();
  return out;
}

bool Scalar::homogeneous() const { return poly_.homogeneous(); }

Bidegree Scalar::bidegree() const {
  if (free_is_zero())
    throw std::invalid_argument("bidegree of zero is undefined");
  int d = 0;
  if (!poly_.homogeneous(&d))
    throw std::invalid_argument("bidegree of non-homogeneous scalar");
  return {2 * static_cast<std::int64_t>(d) + xibar_,
          2 * static_cast<std::int64_t>(d) + 2 * xibar_ - 2 * r_pow_};
}

Bidegree bidegree_of(const Scalar& a) { return a.bidegree(); }

std::string Scalar::text() const {
  Scalar s = reduced();
  if (s.poly_.is_zero()) return "0";

  std::vector<std::string> prefix;
  if (s.xibar_) prefix.push_back("xb");
  if (s.r_pow_ == 1) prefix.push_back("r");
  if (s.r_pow_ >= 2) prefix.push_back("r^" + std::to_string(s.r_pow_));

  const auto& terms = s.poly_.terms();
  if (terms.size() == 1) {
    const auto& [m, c] = *terms.begin();
    bool neg = c_is_negative(ring_, c);
    std::string frag = term_abs_text(ring_, m, c);
    std::vector<std::string> parts = prefix;
    if (!(frag == "1" && !parts.empty())) parts.push_back(frag);
    std::string joined;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) joined += "*";
      joined += parts[i];
    }
    return (neg ? "-" : "") + joined;
  }

  std::string body = poly_text(ring_, s.poly_);
  if (prefix.empty()) return body;
  std::string joined;
  for (const auto& p : prefix) joined += p + "*";
  return joined + "(" + body + ")";
}

namespace {

// Recursive-descent parser for the scalar grammar.  Lenient about whitespace
// around operators; the printer always emits the canonical form.
struct Parser {
  BaseRing R;
  int n;
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw RingError(std::string("scalar parse: expected '") + c + "' in " +
                      s);
    ++pos;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) throw RingError("scalar parse: expected number in " + s);
    return s.substr(start, pos - start);
  }

  Coef number() {
    std::string num = digits();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      num += "/" + digits();
    }
    return c_parse(R, num);
  }

  int exponent() {
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      return std::stoi(digits());
    }
    return 1;
  }

  Scalar power_of(const Scalar& v, int k) {
    Scalar out = Scalar::one(R, n);
    for (int i = 0; i < k; ++i) out = scalar_mul(out, v);
    return out;
  }

  Scalar factor() {
    skip_ws();
    if (peek() == '(') {
      ++pos;
      Scalar inner = sum();
      expect(')');
      return inner;
    }
    char c = peek();
    if (c == 'x') {
      ++pos;
      if (pos < s.size() && s[pos] == 'b') {
        ++pos;
        return Scalar::xibar(R, n);
      }
      return power_of(Scalar::xi(R, n), exponent());
    }
    if (c == 'r') {
      ++pos;
      return Scalar::r(R, n, exponent());
    }
    if (c == 'a') {
      ++pos;
      int idx = std::stoi(digits());
      if (idx < 1 || idx > n)
        throw RingError("scalar parse: alpha index out of range in " + s);
      return power_of(Scalar::alpha(R, n, idx), exponent());
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Scalar::constant(R, n, number());
    throw RingError("scalar parse: unexpected character in " + s);
  }

  Scalar product() {
    Scalar out = factor();
    while (peek() == '*') {
      ++pos;
      out = scalar_mul(out, factor());
    }
    return out;
  }

  Scalar sum() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    Scalar out = product();
    if (neg) out = scalar_neg(out);
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        Scalar t = product();
        out = scalar_add(out, c == '+' ? t : scalar_neg(t));
      } else {
        break;
      }
    }
    return out;
  }
};

}  // namespace

Scalar Scalar::parse(BaseRing R, int n, const std::string& text) {
  Parser p{R, n, text};
  if (p.eof()) throw RingError("scalar parse: empty input");
  if (p.peek() == '0') {
    std::size_t save = p.pos;
    ++p.pos;
    if (p.eof()) return Scalar::zero(R, n);
    p.pos = save;
  }
  Scalar out = p.sum();
  if (!p.eof()) throw RingError("scalar parse: trailing input in " + text);
  return out;
}

Scalar expand_alpha_n(BaseRing R, int n) {
  return Scalar::alpha(R, n, n).reduced();
}

}  // namespace parity
