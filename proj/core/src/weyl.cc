#include "parity/weyl.hh"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

#include "parity/strata.hh"

namespace parity {

namespace {

std::vector<long> normalized(std::vector<long> v) {
  long lo = *std::min_element(v.begin(), v.end());
  for (long& e : v) e -= lo;
  return v;
}

void require_index(int n, int i, const char* where) {
  if (i < 1 || i > n) throw std::invalid_argument(std::string(where) + ": index out of range");
}

long floordiv(long a, long b) {
  long q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

// i+1 on the cyclic diagram, with n wrapping to 1.
int cyclic_succ(int n, int i) { return i % n + 1; }

std::string vec_text(const std::vector<long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string perm_text(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

ExtAffineElement omega_inverse(int n) { return wext_inv(omega_element(n)); }

// The finite part x omega^{-power(x)}.
ExtAffineElement coxeter_part(const ExtAffineElement& x) {
  ExtAffineElement y = x;
  ExtAffineElement oi = omega_inverse(x.n);
  for (int k = omega_power(x); k > 0; --k) y = wext_mul(y, oi);
  return y;
}

}  // namespace

// ---------------------------------------------------------------- elements

bool operator<(const ExtAffineElement& a, const ExtAffineElement& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.perm != b.perm) return a.perm < b.perm;
  return a.coweight < b.coweight;
}

ExtAffineElement wext_identity(int n) {
  if (n < 1) throw std::invalid_argument("wext_identity: n must be positive");
  ExtAffineElement e;
  e.n = n;
  e.perm.resize(n);
  for (int i = 0; i < n; ++i) e.perm[i] = i + 1;
  e.coweight.assign(n, 0);
  return e;
}

ExtAffineElement simple_reflection(int n, int i) {
  if (n < 2) throw std::invalid_argument("simple_reflection: no generators for n < 2");
  require_index(n, i, "simple_reflection");
  ExtAffineElement s = wext_identity(n);
  if (i < n) {
    std::swap(s.perm[i - 1], s.perm[i]);
  } else {
    std::swap(s.perm[0], s.perm[n - 1]);
    s.coweight[0] = 1;
    s.coweight[n - 1] = -1;
    s.coweight = normalized(s.coweight);
  }
  return s;
}

ExtAffineElement omega_element(int n) {
  ExtAffineElement w = wext_identity(n);
  for (int i = 0; i < n; ++i) w.perm[i] = (i + 1) % n + 1;
  w.coweight[0] = 1;
  w.coweight = normalized(w.coweight);
  return w;
}

ExtAffineElement translation(const std::vector<long>& coweight) {
  if (coweight.empty()) throw std::invalid_argument("translation: empty coweight");
  ExtAffineElement t = wext_identity(static_cast<int>(coweight.size()));
  t.coweight = normalized(coweight);
  return t;
}

ExtAffineElement wext_mul(const ExtAffineElement& x, const ExtAffineElement& y) {
  if (x.n != y.n) throw std::invalid_argument("wext_mul: size mismatch");
  const int n = x.n;
  ExtAffineElement z;
  z.n = n;
  z.perm.resize(n);
  z.coweight.assign(n, 0);
  for (int i = 0; i < n; ++i) z.perm[i] = x.perm[y.perm[i] - 1];
  // (x y)(v) = x.perm(y.perm(v) + y.cw) + x.cw, so the coweight picks up
  // x.perm applied to y's part.
  for (int i = 0; i < n; ++i) z.coweight[x.perm[i] - 1] = y.coweight[i];
  for (int i = 0; i < n; ++i) z.coweight[i] += x.coweight[i];
  z.coweight = normalized(z.coweight);
  return z;
}

ExtAffineElement wext_inv(const ExtAffineElement& x) {
  const int n = x.n;
  ExtAffineElement z;
  z.n = n;
  z.perm.resize(n);
  z.coweight.resize(n);
  for (int i = 0; i < n; ++i) z.perm[x.perm[i] - 1] = i + 1;
  for (int i = 0; i < n; ++i) z.coweight[i] = -x.coweight[x.perm[i] - 1];
  z.coweight = normalized(z.coweight);
  return z;
}

int omega_power(const ExtAffineElement& x) {
  long s = 0;
  for (long e : x.coweight) s += e;
  long m = s % x.n;
  if (m < 0) m += x.n;
  return static_cast<int>(m);
}

long wext_length(const ExtAffineElement& x) {
  const int n = x.n;
  std::vector<long> u(n);
  for (int i = 0; i < n; ++i)
    u[i] = x.perm[i] + static_cast<long>(n) * x.coweight[x.perm[i] - 1];
  long ell = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ell += std::labs(floordiv(u[j] - u[i], n));
  return ell;
}

std::string element_text(const ExtAffineElement& x) {
  return "{perm: " + perm_text(x.perm) + ", coweight: " + vec_text(x.coweight) +
         ", omega: " + std::to_string(omega_power(x)) + "}";
}

// ------------------------------------------------------------------- words

ExtAffineElement word_element(const ReducedWord& w) {
  ExtAffineElement x = wext_identity(w.n);
  for (int letter : w.letters) x = wext_mul(x, simple_reflection(w.n, letter));
  if (w.omega != 0) {
    ExtAffineElement om = omega_element(w.n);
    for (int k = ((w.omega % w.n) + w.n) % w.n; k > 0; --k) x = wext_mul(x, om);
  }
  return x;
}

ReducedWord reduced_word(const ExtAffineElement& x) {
  ReducedWord w;
  w.n = x.n;
  w.omega = omega_power(x);
  ExtAffineElement y = coxeter_part(x);
  long len = wext_length(y);
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= x.n; ++i) {
      ExtAffineElement sy = wext_mul(simple_reflection(x.n, i), y);
      long ls = wext_length(sy);
      if (ls == len - 1) {
        w.letters.push_back(i);
        y = std::move(sy);
        len = ls;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: positive length without a descent");
  }
  if (!(y == wext_identity(x.n)))
    throw std::logic_error("reduced_word: length-zero remainder is not the identity");
  return w;
}

int omega_conjugate(int n, int i) {
  if (n < 2) throw std::invalid_argument("omega_conjugate: no generators for n < 2");
  require_index(n, i, "omega_conjugate");
  ExtAffineElement om = omega_element(n);
  ExtAffineElement z = wext_mul(wext_mul(om, simple_reflection(n, i)), wext_inv(om));
  int found = 0;
  for (int j = 1; j <= n; ++j)
    if (z == simple_reflection(n, j)) {
      found = j;
      break;
    }
  int expected = cyclic_succ(n, i);
  if (found != expected)
    throw std::logic_error("omega_conjugate: conjugate of s_" + std::to_string(i) +
                           " is not s_" + std::to_string(expected));
  return found;
}

std::pair<ExtAffineElement, ReducedWord> fundamental_translation(int n, int i) {
  if (n < 1) throw std::invalid_argument("fundamental_translation: n must be positive");
  require_index(n, i, "fundamental_translation");
  ReducedWord w;
  w.n = n;
  w.omega = 1 % n;
  for (int k = 1; k <= n - 1; ++k) w.letters.push_back(((i - k - 1) % n + n) % n + 1);
  std::vector<long> e(n, 0);
  e[i - 1] = 1;
  ExtAffineElement t = translation(e);
  if (!(word_element(w) == t))
    throw std::logic_error("fundamental_translation: word does not multiply to t^" +
                           std::to_string(i));
  return {t, w};
}

bool bruhat_leq(const ExtAffineElement& x, const ExtAffineElement& y) {
  if (x.n != y.n) throw std::invalid_argument("bruhat_leq: size mismatch");
  if (omega_power(x) != omega_power(y)) return false;
  ReducedWord wy = reduced_word(y);
  // Subword scan: peel y's reduced word left to right, following u down
  // whenever the letter is a left descent of u.
  ExtAffineElement u = coxeter_part(x);
  long lu = wext_length(u);
  for (int letter : wy.letters) {
    if (lu == 0) return true;
    ExtAffineElement su = wext_mul(simple_reflection(x.n, letter), u);
    long ls = wext_length(su);
    if (ls < lu) {
      u = std::move(su);
      lu = ls;
    }
  }
  return lu == 0;
}

// ------------------------------------------------------------- admissibles

std::vector<AdmissibleElement> admissible_elements(int n) {
  if (n < 1 || n > 31) throw std::invalid_argument("admissible_elements: n out of range");
  const int om = 1 % n;
  std::vector<AdmissibleElement> out;
  std::set<ExtAffineElement> labeled;
  for (std::uint32_t mask = 0; mask < full_subset(n); ++mask) {
    auto orders = acceptable_orders(n, mask);
    if (orders.empty())
      throw std::runtime_error("admissible bijection failure: subset " + std::to_string(mask) +
                               " has no acceptable order");
    AdmissibleElement a;
    a.subset = mask;
    a.word = ReducedWord{n, orders.front(), om};
    a.element = word_element(a.word);
    for (std::size_t k = 1; k < orders.size(); ++k)
      if (!(word_element(ReducedWord{n, orders[k], om}) == a.element))
        throw std::runtime_error("admissible bijection failure: subset " + std::to_string(mask) +
                                 " is order-dependent");
    labeled.insert(a.element);
    out.push_back(std::move(a));
  }
  // Independent route: subexpressions of the n extreme translation words.
  std::set<ExtAffineElement> sub;
  for (int i = 1; i <= n; ++i) {
    ReducedWord w = fundamental_translation(n, i).second;
    const auto k = static_cast<std::uint32_t>(w.letters.size());
    for (std::uint32_t pick = 0; pick < (1u << k); ++pick) {
      ReducedWord part{n, {}, w.omega};
      for (std::uint32_t j = 0; j < k; ++j)
        if (pick >> j & 1u) part.letters.push_back(w.letters[j]);
      sub.insert(word_element(part));
    }
  }
  if (labeled.size() != out.size())
    throw std::runtime_error("admissible bijection failure: repeated element across subsets");
  if (!(labeled == sub))
    throw std::runtime_error("admissible bijection failure: subset labels and subexpressions disagree");
  if (sub.size() != (1u << n) - 1)
    throw std::runtime_error("admissible bijection failure: expected " +
                             std::to_string((1u << n) - 1) + " elements, found " +
                             std::to_string(sub.size()));
  return out;
}

// ------------------------------------------------------------------- hecke

namespace {

QPoly qp_trimmed(std::vector<long> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return QPoly{std::move(c)};
}

}  // namespace

QPoly qp_int(long v) { return v == 0 ? QPoly{} : QPoly{{v}}; }

QPoly qp_q() { return QPoly{{0, 1}}; }

QPoly qp_add(const QPoly& a, const QPoly& b) {
  std::vector<long> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return qp_trimmed(std::move(c));
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  std::vector<long> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  return qp_trimmed(std::move(c));
}

bool qp_is_zero(const QPoly& a) { return a.c.empty(); }

std::string qp_text(const QPoly& a) {
  if (a.c.empty()) return "0";
  std::string s;
  for (std::size_t k = a.c.size(); k-- > 0;) {
    long v = a.c[k];
    if (v == 0) continue;
    if (!s.empty()) s += v > 0 ? "+" : "-";
    else if (v < 0) s += "-";
    long m = std::labs(v);
    if (m != 1 || k == 0) s += std::to_string(m);
    if (k >= 1) s += "q";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

HeckeElement hecke_basis(const ExtAffineElement& x) {
  HeckeElement h;
  h.terms.emplace(x, qp_int(1));
  return h;
}

namespace {

void hecke_accumulate(HeckeElement& h, const ExtAffineElement& w, const QPoly& c) {
  if (qp_is_zero(c)) return;
  auto [it, fresh] = h.terms.emplace(w, c);
  if (fresh) return;
  it->second = qp_add(it->second, c);
  if (qp_is_zero(it->second)) h.terms.erase(it);
}

}  // namespace

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out = a;
  for (const auto& [w, c] : b.terms) hecke_accumulate(out, w, c);
  return out;
}

HeckeElement hecke_generator_mul(int n, int i, const HeckeElement& h) {
  const ExtAffineElement s = simple_reflection(n, i);
  const QPoly q = qp_q();
  const QPoly qm1 = qp_add(q, qp_int(-1));
  HeckeElement out;
  for (const auto& [w, c] : h.terms) {
    ExtAffineElement sw = wext_mul(s, w);
    if (wext_length(sw) > wext_length(w)) {
      hecke_accumulate(out, sw, c);
    } else {
      hecke_accumulate(out, w, qp_mul(qm1, c));
      hecke_accumulate(out, sw, qp_mul(q, c));
    }
  }
  return out;
}

HeckeElement hecke_subexpression_check(const ReducedWord& w) {
  ReducedWord tail{w.n, {}, w.omega};
  HeckeElement h = hecke_basis(word_element(tail));
  for (std::size_t j = w.letters.size(); j-- > 0;)
    h = hecke_add(hecke_generator_mul(w.n, w.letters[j], h), h);
  return h;
}

// ------------------------------------------------------------------ oracle

std::map<ExtAffineElement, int> coxeter_ball(int n, int radius) {
  std::map<ExtAffineElement, int> dist;
  std::deque<ExtAffineElement> queue;
  dist.emplace(wext_identity(n), 0);
  queue.push_back(wext_identity(n));
  if (n < 2) return dist;
  while (!queue.empty()) {
    ExtAffineElement x = std::move(queue.front());
    queue.pop_front();
    int d = dist.at(x);
    if (d == radius) continue;
    for (int i = 1; i <= n; ++i) {
      ExtAffineElement y = wext_mul(simple_reflection(n, i), x);
      if (dist.emplace(y, d + 1).second) queue.push_back(y);
    }
  }
  return dist;
}

// ------------------------------------------------------------------- suite

namespace {

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

std::string at(const char* var, long v) {
  return std::string(" (") + var + "=" + std::to_string(v) + ")";
}

bool unit_coefficients(const HeckeElement& h) {
  for (const auto& [w, c] : h.terms)
    if (!(c == qp_int(1))) return false;
  return true;
}

}  // namespace

std::vector<Check> suite_weyl(int n) {
  if (n < 1) throw std::invalid_argument("suite_weyl: n must be positive");
  Runner rn;
  const ExtAffineElement e = wext_identity(n);
  const ExtAffineElement om = omega_element(n);

  rn.check("weyl: generators square to the identity", [&] {
    for (int i = 1; i <= n && n >= 2; ++i) {
      ExtAffineElement s = simple_reflection(n, i);
      if (!(wext_mul(s, s) == e)) throw std::runtime_error("s^2 != e" + at("i", i));
      if (wext_length(s) != 1) throw std::runtime_error("l(s) != 1" + at("i", i));
    }
    return true;
  });

  rn.check("weyl: omega has length zero and order n", [&] {
    ExtAffineElement p = e;
    for (int k = 1; k <= n; ++k) {
      p = wext_mul(p, om);
      if (wext_length(p) != 0) throw std::runtime_error("l(omega^k) != 0" + at("k", k));
      if (omega_power(p) != k % n) throw std::runtime_error("component mismatch" + at("k", k));
      if ((p == e) != (k == n)) throw std::runtime_error("order violated" + at("k", k));
    }
    return true;
  });

  rn.check("weyl: translations compose additively", [&] {
    std::vector<std::vector<long>> sample;
    for (int i = 0; i < n; ++i) {
      std::vector<long> v(n, 0);
      v[i] = 1;
      sample.push_back(v);
      v[i] = -2;
      sample.push_back(v);
    }
    for (const auto& a : sample)
      for (const auto& b : sample) {
        std::vector<long> s(n);
        for (int i = 0; i < n; ++i) s[i] = a[i] + b[i];
        if (!(wext_mul(translation(a), translation(b)) == translation(s)))
          throw std::runtime_error("t_a t_b != t_{a+b}");
      }
    return true;
  });

  rn.check("weyl: conjugation permutes translation coordinates", [&] {
    std::vector<ExtAffineElement> ws{om};
    for (int i = 1; i <= n && n >= 2; ++i) ws.push_back(simple_reflection(n, i));
    for (const auto& w : ws)
      for (int i = 0; i < n; ++i) {
        std::vector<long> v(n, 0);
        v[i] = 1;
        std::vector<long> wv(n, 0);
        for (int j = 0; j < n; ++j) wv[w.perm[j] - 1] = v[j];
        ExtAffineElement lhs = wext_mul(wext_mul(w, translation(v)), wext_inv(w));
        if (!(lhs == translation(wv))) throw std::runtime_error("w t w^-1 != t_{wv}" + at("i", i + 1));
      }
    return true;
  });

  rn.check("weyl: omega conjugation advances generator indices", [&] {
    for (int i = 1; i <= n && n >= 2; ++i)
      if (omega_conjugate(n, i) != cyclic_succ(n, i))
        throw std::runtime_error("shift mismatch" + at("i", i));
    return true;
  });

  rn.check("weyl: fundamental translation words are reduced and correct", [&] {
    for (int i = 1; i <= n; ++i) {
      auto [t, w] = fundamental_translation(n, i);
      if (static_cast<int>(w.letters.size()) != n - 1)
        throw std::runtime_error("word length != n-1" + at("i", i));
      if (wext_length(t) != n - 1) throw std::runtime_error("l(t^i) != n-1" + at("i", i));
      if (omega_power(t) != 1 % n) throw std::runtime_error("component != 1" + at("i", i));
    }
    return true;
  });

  rn.check("weyl: the fundamental translations multiply to the identity", [&] {
    ExtAffineElement p = e;
    for (int i = 1; i <= n; ++i) p = wext_mul(p, fundamental_translation(n, i).first);
    return p == e;
  });

  rn.check("weyl: generator steps change length by one", [&] {
    std::vector<ExtAffineElement> bed;
    for (const auto& a : admissible_elements(n)) bed.push_back(a.element);
    for (int i = 1; i <= n; ++i) bed.push_back(fundamental_translation(n, i).first);
    if (n <= 5)
      for (const auto& [x, d] : coxeter_ball(n, n)) bed.push_back(x);
    for (const auto& x : bed)
      for (int i = 1; i <= n && n >= 2; ++i) {
        long diff = wext_length(wext_mul(simple_reflection(n, i), x)) - wext_length(x);
        if (diff != 1 && diff != -1) throw std::runtime_error("step not +-1" + at("i", i));
      }
    return true;
  });

  if (n <= 5)
    rn.check("weyl: inversion count agrees with the word-length ball", [&] {
      for (const auto& [x, d] : coxeter_ball(n, n)) {
        ExtAffineElement y = x;
        for (int m = 0; m < n; ++m) {
          if (wext_length(y) != d) throw std::runtime_error("length mismatch" + at("d", d));
          y = wext_mul(y, om);
        }
      }
      return true;
    });

  rn.check("weyl: admissible elements number 2^n minus 1", [&] {
    auto adm = admissible_elements(n);
    if (adm.size() != (1u << n) - 1)
      throw std::runtime_error("count " + std::to_string(adm.size()));
    for (const auto& a : adm)
      if (omega_power(a.element) != 1 % n)
        throw std::runtime_error("component != 1" + at("subset", a.subset));
    return true;
  });

  rn.check("weyl: subset words are reduced of length subset size", [&] {
    for (const auto& a : admissible_elements(n)) {
      auto members = subset_members(a.subset);
      if (wext_length(a.element) != static_cast<long>(members.size()))
        throw std::runtime_error("length != |I|" + at("subset", a.subset));
      std::vector<int> sorted = a.word.letters;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != members) throw std::runtime_error("letters != members" + at("subset", a.subset));
    }
    return true;
  });

  rn.check("weyl: acceptable orders match their definition", [&] {
    for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
      auto walk = acceptable_orders(n, mask);
      std::set<std::vector<int>> walked(walk.begin(), walk.end());
      std::vector<int> members = subset_members(mask);
      std::sort(members.begin(), members.end());
      std::set<std::vector<int>> brute;
      do {
        if (is_acceptable_order(n, mask, members)) brute.insert(members);
      } while (std::next_permutation(members.begin(), members.end()));
      if (walked != brute) throw std::runtime_error("order sets differ" + at("subset", mask));
      ExtAffineElement first;
      bool have = false;
      for (const auto& ord : walk) {
        ExtAffineElement v = word_element(ReducedWord{n, ord, 1 % n});
        if (!have) {
          first = v;
          have = true;
        } else if (!(v == first)) {
          throw std::runtime_error("order-dependent" + at("subset", mask));
        }
      }
    }
    return true;
  });

  if (n <= 5)
    rn.check("weyl: admissible set equals the Bruhat ball", [&] {
      std::set<ExtAffineElement> adm;
      for (const auto& a : admissible_elements(n)) adm.insert(a.element);
      std::vector<ExtAffineElement> targets;
      for (int i = 1; i <= n; ++i) targets.push_back(fundamental_translation(n, i).first);
      std::set<ExtAffineElement> ball;
      for (const auto& [x, d] : coxeter_ball(n, n - 1)) {
        ExtAffineElement y = x;
        for (int m = 0; m < n; ++m) {
          for (const auto& t : targets)
            if (bruhat_leq(y, t)) {
              ball.insert(y);
              break;
            }
          y = wext_mul(y, om);
        }
      }
      return adm == ball;
    });

  if (n <= 5)
    rn.check("weyl: subword test agrees with exhaustive subsequences", [&] {
      auto adm = admissible_elements(n);
      for (int i = 1; i <= n; ++i) {
        ReducedWord w = fundamental_translation(n, i).second;
        const auto k = static_cast<std::uint32_t>(w.letters.size());
        for (const auto& a : adm) {
          bool brute = false;
          for (std::uint32_t pick = 0; pick < (1u << k) && !brute; ++pick) {
            ReducedWord part{n, {}, w.omega};
            for (std::uint32_t j = 0; j < k; ++j)
              if (pick >> j & 1u) part.letters.push_back(w.letters[j]);
            brute = word_element(part) == a.element;
          }
          if (bruhat_leq(a.element, fundamental_translation(n, i).first) != brute)
            throw std::runtime_error("routes disagree" + at("i", i));
        }
      }
      return true;
    });

  rn.check("weyl: bruhat comparisons respect basic laws", [&] {
    std::vector<ExtAffineElement> targets;
    for (int i = 1; i <= n; ++i) targets.push_back(fundamental_translation(n, i).first);
    for (const auto& t : targets) {
      if (!bruhat_leq(wext_mul(e, om), t)) throw std::runtime_error("omega not below a translation");
      if (!bruhat_leq(t, t)) throw std::runtime_error("not reflexive");
      if (n >= 2 && bruhat_leq(e, t)) throw std::runtime_error("component mismatch accepted");
    }
    for (std::size_t i = 0; i < targets.size(); ++i)
      for (std::size_t j = 0; j < targets.size(); ++j)
        if (i != j && bruhat_leq(targets[i], targets[j]))
          throw std::runtime_error("distinct translations comparable");
    return true;
  });

  rn.check("weyl: admissible word expansions have unit coefficients", [&] {
    std::set<ExtAffineElement> adm;
    for (const auto& a : admissible_elements(n)) adm.insert(a.element);
    std::set<ExtAffineElement> support;
    for (int i = 1; i <= n; ++i) {
      HeckeElement h = hecke_subexpression_check(fundamental_translation(n, i).second);
      if (h.terms.size() != (1u << (n - 1))) throw std::runtime_error("support size" + at("i", i));
      if (!unit_coefficients(h)) throw std::runtime_error("non-unit coefficient" + at("i", i));
      for (const auto& [w, c] : h.terms) {
        if (!adm.count(w)) throw std::runtime_error("support escapes the admissible set" + at("i", i));
        support.insert(w);
      }
    }
    return support == adm;
  });

  if (n >= 2) {
    rn.check("weyl: repeated letters inflate hecke coefficients", [&] {
      HeckeElement h = hecke_subexpression_check(ReducedWord{n, {1, 1}, 0});
      const QPoly qp1 = qp_add(qp_q(), qp_int(1));
      if (!(h.terms.at(simple_reflection(n, 1)) == qp1))
        throw std::runtime_error("coefficient of T_s is " +
                                 qp_text(h.terms.at(simple_reflection(n, 1))));
      return h.terms.at(e) == qp1;
    });

    rn.check("weyl: hecke quadratic relation holds", [&] {
      for (int i = 1; i <= n; ++i) {
        ExtAffineElement s = simple_reflection(n, i);
        HeckeElement lhs = hecke_generator_mul(n, i, hecke_basis(s));
        HeckeElement rhs;
        hecke_accumulate(rhs, s, qp_add(qp_q(), qp_int(-1)));
        hecke_accumulate(rhs, e, qp_q());
        if (!(lhs.terms == rhs.terms)) throw std::runtime_error("T_s^2 mismatch" + at("i", i));
      }
      return true;
    });
  }

  return rn.out;
}

}  // namespace parity
