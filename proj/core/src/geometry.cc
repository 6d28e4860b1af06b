#include "parity/geometry.hh"

#include <stdexcept>

namespace parity {

namespace {

constexpr int kSlotZ = 2 * kChartMaxN;

int slot_x(int i) {
  if (i < 1 || i > kChartMaxN) throw std::invalid_argument("chart variable out of range");
  return i - 1;
}

int slot_y(int i) {
  if (i < 1 || i > kChartMaxN) throw std::invalid_argument("chart variable out of range");
  return kChartMaxN + i - 1;
}

void accumulate(ChartPoly& p, const ChartMono& m, long c) {
  if (c == 0) return;
  auto [it, fresh] = p.terms.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) p.terms.erase(it);
}

ChartPoly from_mono(const ChartMono& m) {
  ChartPoly p;
  p.terms.emplace(m, 1);
  return p;
}

void require_n(int n, const char* where) {
  if (n < 1 || n > kChartMaxN) throw std::invalid_argument(std::string(where) + ": n out of range");
}

std::string slot_name(int s) {
  if (s == kSlotZ) return "z";
  if (s >= kChartMaxN) return "y" + std::to_string(s - kChartMaxN + 1);
  return "x" + std::to_string(s + 1);
}

ChartPoly chart_base(int n) {
  ChartMono m;
  for (int i = 1; i <= n; ++i) m.e[slot_x(i)] = 1;
  return from_mono(m);
}

// x_i -> chi_i x_i for monomial characters chi; y, z slots pass through.
ChartPoly scale_x(const ChartPoly& p, int n, const std::vector<ChartMono>& chi) {
  ChartPoly out;
  for (const auto& [m, c] : p.terms) {
    ChartMono t = m;
    for (int i = 1; i <= n; ++i) {
      int e = m.e[slot_x(i)];
      if (e == 0) continue;
      for (int s = 0; s < kChartSlots; ++s) t.e[s] = static_cast<std::int16_t>(t.e[s] + e * chi[i].e[s]);
    }
    accumulate(out, t, c);
  }
  return out;
}

// First failing 2x2 minor, formatted; empty when proportional.
std::string minor_report(const ProjVector& a, const ProjVector& b) {
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    for (std::size_t j = i + 1; j < a.coords.size(); ++j) {
      ChartPoly m = ch_sub(ch_mul(a.coords[i], b.coords[j]), ch_mul(a.coords[j], b.coords[i]));
      if (!ch_is_zero(m))
        return "minor (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + ch_text(m);
    }
  return {};
}

}  // namespace

ChartPoly ch_zero() { return {}; }

ChartPoly ch_one() { return from_mono({}); }

ChartPoly ch_x(int i) {
  ChartMono m;
  m.e[slot_x(i)] = 1;
  return from_mono(m);
}

ChartPoly ch_y(int i) {
  ChartMono m;
  m.e[slot_y(i)] = 1;
  return from_mono(m);
}

ChartPoly ch_z() {
  ChartMono m;
  m.e[kSlotZ] = 1;
  return from_mono(m);
}

ChartPoly ch_add(const ChartPoly& a, const ChartPoly& b) {
  ChartPoly out = a;
  for (const auto& [m, c] : b.terms) accumulate(out, m, c);
  return out;
}

ChartPoly ch_sub(const ChartPoly& a, const ChartPoly& b) {
  ChartPoly out = a;
  for (const auto& [m, c] : b.terms) accumulate(out, m, -c);
  return out;
}

ChartPoly ch_mul(const ChartPoly& a, const ChartPoly& b) {
  ChartPoly out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      ChartMono m = ma;
      for (int s = 0; s < kChartSlots; ++s) m.e[s] = static_cast<std::int16_t>(m.e[s] + mb.e[s]);
      accumulate(out, m, ca * cb);
    }
  return out;
}

bool ch_is_zero(const ChartPoly& a) { return a.terms.empty(); }

int ch_x_degree(const ChartPoly& a) {
  int deg = -1;
  for (const auto& [m, c] : a.terms) {
    int d = 0;
    for (int s = 0; s < kChartMaxN; ++s) d += m.e[s];
    if (d > deg) deg = d;
  }
  return deg;
}

std::string ch_text(const ChartPoly& a) {
  if (a.terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : a.terms) {
    long v = c;
    if (s.empty()) {
      if (v < 0) s += "-";
    } else {
      s += v < 0 ? " - " : " + ";
    }
    if (v < 0) v = -v;
    std::string vars;
    for (int slot = 0; slot < kChartSlots; ++slot) {
      if (m.e[slot] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += slot_name(slot);
      if (m.e[slot] != 1) vars += "^" + std::to_string(m.e[slot]);
    }
    if (vars.empty()) {
      s += std::to_string(v);
    } else {
      if (v != 1) s += std::to_string(v) + "*";
      s += vars;
    }
  }
  return s;
}

ProjVector apply_diagonal(const DiagonalMap& g, const ProjVector& L) {
  if (g.index < 1 || g.index > static_cast<int>(L.coords.size()))
    throw std::invalid_argument("apply_diagonal: index out of range");
  ProjVector out = L;
  out.coords[g.index - 1] = ch_mul(g.entry, out.coords[g.index - 1]);
  return out;
}

bool proportional(const ProjVector& a, const ProjVector& b) {
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("proportional: size mismatch");
  return minor_report(a, b).empty();
}

ChartPoly p_poly(int j, int k, int n) {
  require_n(n, "p_poly");
  if (j < 1 || j > n || k < 1 || k > n) throw std::invalid_argument("p_poly: index out of range");
  int d = k - j;
  if (d == -1 || d == n - 1) return ch_one();
  ChartMono m;
  if (j <= k) {
    for (int t = j; t <= k; ++t) m.e[slot_x(t)] = 1;
  } else {
    for (int t = j; t <= n; ++t) m.e[slot_x(t)] = 1;
    for (int t = 1; t <= k; ++t) m.e[slot_x(t)] = 1;
  }
  return from_mono(m);
}

ProjVector chart_line(int n, int k) {
  require_n(n, "chart_line");
  if (k < 1 || k > n) throw std::invalid_argument("chart_line: index out of range");
  ProjVector L;
  L.coords.push_back(p_poly(k, n, n));
  for (int m = 2; m <= n; ++m) L.coords.push_back(p_poly(k, m - 1, n));
  return L;
}

bool chart_membership_check(int n, std::string* why) {
  require_n(n, "chart_membership_check");
  const ChartPoly base = chart_base(n);
  for (int i = 1; i <= n; ++i) {
    ProjVector moved = apply_diagonal(DiagonalMap{i, base}, chart_line(n, i));
    std::string bad = minor_report(moved, chart_line(n, i % n + 1));
    if (!bad.empty()) {
      if (why) *why = "line " + std::to_string(i) + ": " + bad;
      return false;
    }
  }
  return true;
}

bool inverse_check(int n, std::string* why) {
  require_n(n, "inverse_check");
  if (n == 1) {
    // The quotient formula degenerates; the base coordinate is the inverse.
    if (chart_base(1) == ch_x(1)) return true;
    if (why) *why = "base coordinate is " + ch_text(chart_base(1));
    return false;
  }
  for (int i = 1; i <= n; ++i) {
    ProjVector L = chart_line(n, i);
    const ChartPoly& den = L.coords[i - 1];
    const ChartPoly& num = i < n ? L.coords[i] : L.coords[0];
    if (!(den == ch_one())) {
      if (why) *why = "denominator at line " + std::to_string(i) + " is " + ch_text(den);
      return false;
    }
    if (!(num == ch_mul(ch_x(i), den))) {
      if (why) *why = "component " + std::to_string(i) + " recovers " + ch_text(num);
      return false;
    }
  }
  return true;
}

ChartPoly chart_character(int n, int i) {
  require_n(n, "chart_character");
  if (i < 1 || i > n) throw std::invalid_argument("chart_character: index out of range");
  ChartMono m;
  if (i < n) {
    m.e[slot_y(i + 1)] = 1;
    m.e[slot_y(i)] = -1;
  } else {
    m.e[kSlotZ] = 1;
    m.e[slot_y(1)] = static_cast<std::int16_t>(m.e[slot_y(1)] + 1);
    m.e[slot_y(n)] = static_cast<std::int16_t>(m.e[slot_y(n)] - 1);
  }
  return from_mono(m);
}

bool equivariance_check(int n, std::string* why) {
  require_n(n, "equivariance_check");
  std::vector<ChartMono> chi(n + 1);
  for (int i = 1; i <= n; ++i) chi[i] = chart_character(n, i).terms.begin()->first;

  const ChartPoly base = chart_base(n);
  if (!(scale_x(base, n, chi) == ch_mul(ch_z(), base))) {
    if (why) *why = "base coordinate scales by " + ch_text(scale_x(base, n, chi));
    return false;
  }
  for (int k = 1; k <= n; ++k) {
    ProjVector L = chart_line(n, k);
    ProjVector scaled = L;
    ProjVector acted = L;
    for (int m = 1; m <= n; ++m) {
      scaled.coords[m - 1] = scale_x(L.coords[m - 1], n, chi);
      ChartMono w;
      w.e[slot_y(m)] = 1;
      if (m <= k - 1) w.e[kSlotZ] = 1;
      acted.coords[m - 1] = ch_mul(from_mono(w), L.coords[m - 1]);
    }
    std::string bad = minor_report(scaled, acted);
    if (!bad.empty()) {
      if (why) *why = "line " + std::to_string(k) + ": " + bad;
      return false;
    }
  }
  return true;
}

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

  void check_reported(std::string name, bool (*body)(int, std::string*), int n) {
    Check c;
    c.name = std::move(name);
    try {
      c.ok = body(n, &c.detail);
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

std::vector<Check> suite_chart(int n) {
  require_n(n, "suite_chart");
  Runner rn;

  rn.check("chart: p products follow the counterclockwise walk", [&] {
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        // Independent route: walk the cycle multiplying until x_k, then
        // apply the full-product exclusion.
        ChartPoly walk = ch_one();
        int factors = 0;
        int t = j;
        while (true) {
          walk = ch_mul(walk, ch_x(t));
          ++factors;
          if (t == k) break;
          t = t % n + 1;
        }
        if (factors == n) walk = ch_one();
        if (!(p_poly(j, k, n) == walk))
          throw std::runtime_error("case split disagrees with the walk" + at("j", j) + at("k", k));
      }
    return true;
  });

  rn.check("chart: p degrees never reach the full product", [&] {
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        int d = ch_x_degree(p_poly(j, k, n));
        if (d < 0 || d > n - 1) throw std::runtime_error("degree " + std::to_string(d) + at("j", j) + at("k", k));
      }
    return true;
  });

  rn.check("chart: each line carries its unit coordinate", [&] {
    for (int k = 1; k <= n; ++k) {
      ProjVector L = chart_line(n, k);
      int units = 0;
      for (const ChartPoly& c : L.coords)
        if (c == ch_one()) ++units;
      if (units != 1) throw std::runtime_error("unit count " + std::to_string(units) + at("k", k));
      if (!(L.coords[k - 1] == ch_one())) throw std::runtime_error("unit off-index" + at("k", k));
    }
    return true;
  });

  rn.check_reported("chart: diagonal scalings land on the next line", chart_membership_check, n);
  rn.check_reported("chart: the quotients invert the embedding", inverse_check, n);

  rn.check("chart: the base coordinate is the full product", [&] {
    ChartPoly nums = ch_one();
    ChartPoly dens = ch_one();
    if (n == 1) {
      nums = chart_base(1);
    } else {
      for (int i = 1; i <= n; ++i) {
        ProjVector L = chart_line(n, i);
        nums = ch_mul(nums, i < n ? L.coords[i] : L.coords[0]);
        dens = ch_mul(dens, L.coords[i - 1]);
      }
    }
    return nums == ch_mul(chart_base(n), dens);
  });

  rn.check_reported("chart: the torus action matches the character weights", equivariance_check, n);

  rn.check("chart: the characters multiply to the loop weight", [&] {
    ChartPoly prod = ch_one();
    for (int i = 1; i <= n; ++i) prod = ch_mul(prod, chart_character(n, i));
    return prod == ch_z();
  });

  rn.check("chart: the trivial torus element fixes the chart", [&] {
    std::vector<ChartMono> trivial(n + 1);
    for (int k = 1; k <= n; ++k) {
      ProjVector L = chart_line(n, k);
      for (const ChartPoly& c : L.coords)
        if (!(scale_x(c, n, trivial) == c)) throw std::runtime_error("coordinate moved" + at("k", k));
    }
    return true;
  });

  return rn.out;
}

}  // namespace parity
