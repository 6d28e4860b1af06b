#include "parity/monodromy.hh"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity/strata.hh"

namespace parity {

namespace {

bool span_contains(const SummandSpan& s, int idx) {
  return std::binary_search(s.begin(), s.end(), idx);
}

SummandSpan span_sorted(std::set<int> s) {
  return SummandSpan(s.begin(), s.end());
}

SummandSpan full_span(const GradedObject& o) {
  SummandSpan s(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) s[i] = static_cast<int>(i);
  return s;
}

// drop applied j times; -1 once the ladder ends.
int drop_pow(const GradedObject& o, int idx, int j) {
  for (int step = 0; step < j && idx >= 0; ++step) idx = nil_drop(o, idx);
  return idx;
}

SummandSpan image_of(const GradedObject& o, const SummandSpan& s, int j) {
  std::set<int> out;
  for (int idx : s) {
    int d = drop_pow(o, idx, j);
    if (d >= 0) out.insert(d);
  }
  return span_sorted(std::move(out));
}

SummandSpan preimage_of(const GradedObject& o, const SummandSpan& s, int j) {
  std::set<int> out;
  for (int idx = 0; idx < static_cast<int>(o.size()); ++idx) {
    int d = drop_pow(o, idx, j);
    if (d < 0 || span_contains(s, d)) out.insert(idx);
  }
  return span_sorted(std::move(out));
}

const SummandSpan* layer_at(const std::vector<FiltrationLayer>& layers, int k) {
  for (const FiltrationLayer& l : layers)
    if (l.k == k) return &l.members;
  return nullptr;
}

// Layer semantics off the stored range: empty below, everything above.
SummandSpan layer_or_limit(const GradedObject& o,
                           const std::vector<FiltrationLayer>& layers, int k) {
  if (const SummandSpan* s = layer_at(layers, k)) return *s;
  if (layers.empty() || k < layers.front().k) return {};
  return full_span(o);
}

SummandSpan graded_piece(const GradedObject& o,
                         const std::vector<FiltrationLayer>& layers, int k) {
  SummandSpan hi = layer_or_limit(o, layers, k);
  SummandSpan lo = layer_or_limit(o, layers, k - 1);
  SummandSpan out;
  std::set_difference(hi.begin(), hi.end(), lo.begin(), lo.end(),
                      std::back_inserter(out));
  return out;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
  return r;
}

// Row-reduced matrices over a field: the subspace toolkit for the oracle.
struct RowSpace {
  BaseRing F;
  int width = 0;
  std::vector<std::vector<Coef>> rows;  // reduced echelon, nonzero rows only
  std::vector<int> pivots;

  explicit RowSpace(BaseRing field, int w) : F(field), width(w) {}

  // Reduce v against the basis; true if it was dependent (reduced to zero).
  bool reduce(std::vector<Coef>& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Coef c = v[pivots[r]];
      if (c_is_zero(c)) continue;
      for (int j = 0; j < width; ++j)
        v[j] = c_sub(F, v[j], c_mul(F, c, rows[r][j]));
    }
    for (const Coef& c : v)
      if (!c_is_zero(c)) return false;
    return true;
  }

  void insert(std::vector<Coef> v) {
    if (reduce(v)) return;
    int p = 0;
    while (c_is_zero(v[p])) ++p;
    Coef inv = c_inv(F, v[p]);
    for (Coef& c : v) c = c_mul(F, c, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Coef c = rows[r][p];
      if (c_is_zero(c)) continue;
      for (int j = 0; j < width; ++j)
        rows[r][j] = c_sub(F, rows[r][j], c_mul(F, c, v[j]));
    }
    std::size_t at = 0;
    while (at < rows.size() && pivots[at] < p) ++at;
    rows.insert(rows.begin() + at, std::move(v));
    pivots.insert(pivots.begin() + at, p);
  }

  int dim() const { return static_cast<int>(rows.size()); }

  bool contains(std::vector<Coef> v) const { return reduce(v); }
};

using Mat = std::vector<std::vector<Coef>>;

Mat nil_matrix(BaseRing F, const GradedObject& o) {
  int m = static_cast<int>(o.size());
  Mat A(m, std::vector<Coef>(m));
  for (int c = 0; c < m; ++c) {
    int r = nil_drop(o, c);
    if (r >= 0) A[r][c] = c_from_int(F, 1);
  }
  return A;
}

Mat mat_mul(BaseRing F, const Mat& A, const Mat& B) {
  int m = static_cast<int>(A.size());
  Mat C(m, std::vector<Coef>(m));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      if (c_is_zero(A[i][k])) continue;
      for (int j = 0; j < m; ++j)
        C[i][j] = c_add(F, C[i][j], c_mul(F, A[i][k], B[k][j]));
    }
  return C;
}

RowSpace column_space(BaseRing F, const Mat& A) {
  int m = static_cast<int>(A.size());
  RowSpace sp(F, m);
  for (int c = 0; c < m; ++c) {
    std::vector<Coef> v(m);
    for (int r = 0; r < m; ++r) v[r] = A[r][c];
    sp.insert(std::move(v));
  }
  return sp;
}

RowSpace null_space(BaseRing F, const Mat& A) {
  // Row-reduce A, then read the free-column solutions.
  int m = static_cast<int>(A.size());
  Mat R = A;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < m; ++col) {
    int sel = -1;
    for (int i = row; i < m; ++i)
      if (!c_is_zero(R[i][col])) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(R[sel], R[row]);
    Coef inv = c_inv(F, R[row][col]);
    for (int j = 0; j < m; ++j) R[row][j] = c_mul(F, R[row][j], inv);
    for (int i = 0; i < m; ++i) {
      if (i == row || c_is_zero(R[i][col])) continue;
      Coef c = R[i][col];
      for (int j = 0; j < m; ++j)
        R[i][j] = c_sub(F, R[i][j], c_mul(F, c, R[row][j]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  RowSpace sp(F, m);
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coef> v(m);
    v[free] = c_from_int(F, 1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = c_neg(F, R[r][free]);
    sp.insert(std::move(v));
  }
  return sp;
}

// Zassenhaus: row-reduce [U | U; W | 0]; rows with zero left half carry the
// intersection in their right half.
RowSpace intersect(BaseRing F, const RowSpace& U, const RowSpace& W) {
  int m = U.width;
  std::vector<std::vector<Coef>> block;
  for (const auto& u : U.rows) {
    std::vector<Coef> v(2 * m);
    for (int j = 0; j < m; ++j) v[j] = v[m + j] = u[j];
    block.push_back(std::move(v));
  }
  for (const auto& w : W.rows) {
    std::vector<Coef> v(2 * m);
    for (int j = 0; j < m; ++j) v[j] = w[j];
    block.push_back(std::move(v));
  }
  RowSpace wide(F, 2 * m);
  for (auto& v : block) wide.insert(std::move(v));
  RowSpace out(F, m);
  for (const auto& v : wide.rows) {
    bool left_zero = true;
    for (int j = 0; j < m; ++j)
      if (!c_is_zero(v[j])) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    out.insert(std::vector<Coef>(v.begin() + m, v.end()));
  }
  return out;
}

}  // namespace

int nil_drop(const GradedObject& o, int idx) {
  const Summand& s = o.summands.at(idx);
  return find_summand(o, s.stratum, s.t - 2, s.h);
}

int nilpotency_order(const GradedObject& o) {
  int m = 1;
  for (int idx = 0; idx < static_cast<int>(o.size()); ++idx) {
    int steps = 0;
    int cur = idx;
    while ((cur = nil_drop(o, cur)) >= 0) ++steps;
    m = std::max(m, steps + 1);
  }
  return m;
}

SummandSpan kernel_span(const GradedObject& o, int power) {
  SummandSpan out;
  for (int idx = 0; idx < static_cast<int>(o.size()); ++idx)
    if (drop_pow(o, idx, power) < 0) out.push_back(idx);
  return out;
}

SummandSpan image_span(const GradedObject& o, int power) {
  return image_of(o, full_span(o), power);
}

std::vector<FiltrationLayer> monodromy_filtration(const GradedObject& o) {
  int m = nilpotency_order(o);
  std::vector<FiltrationLayer> layers;
  for (int k = -m; k <= m - 1; ++k) {
    std::set<int> members;
    for (int p = std::max(0, k); p <= k + m; ++p) {
      int q = p - k;
      SummandSpan ker = kernel_span(o, p + 1);
      SummandSpan im = image_span(o, q);
      for (int idx : ker)
        if (span_contains(im, idx)) members.insert(idx);
    }
    layers.push_back({k, span_sorted(std::move(members))});
  }
  return layers;
}

std::vector<FiltrationLayer> filtration_recursive(const GradedObject& o) {
  int m = nilpotency_order(o);
  std::vector<FiltrationLayer> layers;
  for (int k = -m; k <= m - 1; ++k) layers.push_back({k, {}});
  auto store = [&](int k, SummandSpan s) {
    layers[k + m].members = std::move(s);
  };
  auto get = [&](int k) -> SummandSpan {
    if (k <= -m) return {};
    if (k >= m - 1) return full_span(o);
    return layers[k + m].members;
  };
  store(m - 1, full_span(o));
  for (int i = m - 2; i >= 0; --i) {
    SummandSpan lower = image_of(o, get(i + 2), i + 2);
    if (-i - 2 >= -m) store(-i - 2, lower);
    store(i, preimage_of(o, lower, i + 1));
  }
  if (m >= 2) store(-1, image_of(o, get(1), 1));
  return layers;
}

bool filtration_axioms_hold(const GradedObject& o,
                            const std::vector<FiltrationLayer>& layers,
                            std::string* why) {
  int m = nilpotency_order(o);
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (const FiltrationLayer& l : layers) {
    SummandSpan below = layer_or_limit(o, layers, l.k - 2);
    for (int idx : l.members) {
      int d = nil_drop(o, idx);
      if (d >= 0 && !span_contains(below, d))
        return fail("nil step leaves M_" + std::to_string(l.k) +
                    " at summand " + std::to_string(idx));
    }
  }
  for (int i = 1; i <= m; ++i) {
    SummandSpan hi = graded_piece(o, layers, i);
    SummandSpan lo = graded_piece(o, layers, -i);
    std::set<int> image;
    for (int idx : hi) {
      int d = drop_pow(o, idx, i);
      if (d < 0)
        return fail("nil power " + std::to_string(i) +
                    " kills graded summand " + std::to_string(idx));
      image.insert(d);
    }
    if (span_sorted(std::move(image)) != lo)
      return fail("graded pieces at " + std::to_string(i) + " and " +
                  std::to_string(-i) + " do not match");
  }
  return true;
}

bool differential_preserves(const DifferentialComplex& z,
                            const std::vector<FiltrationLayer>& layers,
                            std::string* why) {
  for (const FiltrationLayer& l : layers) {
    for (const auto& [key, nm] : z.differential.entries) {
      (void)nm;
      if (span_contains(l.members, key.second) &&
          !span_contains(l.members, key.first)) {
        if (why)
          *why = "differential cell (" + std::to_string(key.first) + ", " +
                 std::to_string(key.second) + ") leaves M_" +
                 std::to_string(l.k);
        return false;
      }
    }
  }
  return true;
}

long MultiplicityTable::total() const {
  long t = 0;
  for (const auto& [key, v] : by_size) t += v;
  return t;
}

MultiplicityTable associated_graded(
    int n, const GradedObject& o, const std::vector<FiltrationLayer>& layers) {
  MultiplicityTable table;
  table.n = n;
  for (const FiltrationLayer& l : layers) {
    for (int idx : graded_piece(o, layers, l.k)) {
      const Summand& s = o.summands[idx];
      table.by_size[{l.k, std::popcount(s.stratum)}] += 1;
      table.by_stratum[{l.k, s.stratum}] += 1;
    }
  }
  return table;
}

MultiplicityTable closed_form_table(int n) {
  MultiplicityTable table;
  table.n = n;
  for (int k = -(n - 1); k <= n - 1; ++k) {
    for (int r = std::max(0, k); r + (r - k) <= n - 1; ++r) {
      int s = r - k;
      int size = n - 1 - r - s;
      table.by_size[{k, size}] += binom(n, size);
      for (std::uint32_t I = 0; I < (1u << n); ++I)
        if (std::popcount(I) == size) table.by_stratum[{k, I}] += 1;
    }
  }
  return table;
}

bool oracle_agrees(BaseRing R, const GradedObject& o,
                   const std::vector<FiltrationLayer>& layers,
                   std::string* why) {
  BaseRing F = (R.kind == RingKind::integers) ? BaseRing::Q() : R;
  int m = static_cast<int>(o.size());
  int order = nilpotency_order(o);

  std::vector<Mat> powers;  // powers[j] = N^j
  Mat id(m, std::vector<Coef>(m));
  for (int i = 0; i < m; ++i) id[i][i] = c_from_int(F, 1);
  powers.push_back(id);
  Mat N = nil_matrix(F, o);
  for (int j = 1; j <= 2 * order + 1; ++j)
    powers.push_back(mat_mul(F, powers.back(), N));

  for (const FiltrationLayer& l : layers) {
    RowSpace acc(F, m);
    for (int p = std::max(0, l.k); p <= l.k + order; ++p) {
      int q = p - l.k;
      RowSpace ker = null_space(F, powers[std::min<int>(p + 1, 2 * order)]);
      RowSpace im = column_space(F, powers[std::min<int>(q, 2 * order)]);
      RowSpace meet = intersect(F, ker, im);
      for (const auto& v : meet.rows) acc.insert(v);
    }
    if (acc.dim() != static_cast<int>(l.members.size())) {
      if (why)
        *why = "dimension mismatch at k = " + std::to_string(l.k) + ": " +
               std::to_string(acc.dim()) + " vs " +
               std::to_string(l.members.size());
      return false;
    }
    for (int idx : l.members) {
      std::vector<Coef> e(m);
      e[idx] = c_from_int(F, 1);
      if (!acc.contains(std::move(e))) {
        if (why)
          *why = "summand " + std::to_string(idx) +
                 " escapes the subspace at k = " + std::to_string(l.k);
        return false;
      }
    }
  }
  return true;
}

std::vector<Check> suite_monodromy(BaseRing R, int n) {
  std::vector<Check> out;
  auto check = [&](std::string name, auto&& body) {
    Check c;
    c.name = std::move(name);
    try {
      c.ok = body();
      if (!c.ok && c.detail.empty()) c.detail = "sides differ";
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  };

  GradedObject o = psi_total(n);
  std::vector<FiltrationLayer> layers = monodromy_filtration(o);

  check("mono: nilpotency order equals the ladder height",
        [&] { return nilpotency_order(o) == n; });
  check("mono: kernels are the low ladder levels", [&] {
    for (int j = 0; j <= n; ++j) {
      SummandSpan expect;
      for (int idx = 0; idx < static_cast<int>(o.size()); ++idx) {
        const Summand& s = o.summands[idx];
        int comp = (s.t + n - std::popcount(s.stratum) + 1) / 2;
        if (comp <= j) expect.push_back(idx);
      }
      if (kernel_span(o, j) != expect) return false;
    }
    return true;
  });
  check("mono: images are the ladders cut from above", [&] {
    for (int q = 0; q <= n; ++q) {
      SummandSpan expect;
      for (int idx = 0; idx < static_cast<int>(o.size()); ++idx) {
        const Summand& s = o.summands[idx];
        int i = std::popcount(s.stratum);
        int comp = (s.t + n - i + 1) / 2;
        if (comp <= n - i - q) expect.push_back(idx);
      }
      if (image_span(o, q) != expect) return false;
    }
    return true;
  });
  check("mono: formula and recursion give the same filtration",
        [&] { return layers == filtration_recursive(o); });
  check("mono: layers nested, empty at -m, full at m-1", [&] {
    if (layers.front().members.size() != 0) return false;
    if (layers.back().members.size() != o.size()) return false;
    for (std::size_t j = 1; j < layers.size(); ++j)
      if (!std::includes(layers[j].members.begin(), layers[j].members.end(),
                         layers[j - 1].members.begin(),
                         layers[j - 1].members.end()))
        return false;
    return true;
  });
  check("mono: differential preserves each layer", [&] {
    std::string why;
    if (!differential_preserves(psi_mix(R, n), layers, &why))
      throw std::runtime_error(why);
    return true;
  });
  check("mono: filtration axioms hold", [&] {
    std::string why;
    if (!filtration_axioms_hold(o, layers, &why))
      throw std::runtime_error(why);
    return true;
  });
  check("mono: perturbing a layer breaks the axioms", [&] {
    std::vector<FiltrationLayer> bad = layers;
    // Push one summand of M_(-m+1) down into the empty bottom layer.
    if (bad.size() < 2 || bad[1].members.empty()) return false;
    bad[0].members.push_back(bad[1].members.front());
    return !filtration_axioms_hold(o, bad);
  });
  check("mono: associated graded equals the closed form", [&] {
    return associated_graded(n, o, layers) == closed_form_table(n);
  });
  check("mono: graded pieces are pure of twist k", [&] {
    for (const FiltrationLayer& l : layers)
      for (int idx : graded_piece(o, layers, l.k))
        if (o.summands[idx].t != l.k) return false;
    return true;
  });
  check("mono: multiplicity table is symmetric in k", [&] {
    MultiplicityTable t = associated_graded(n, o, layers);
    for (const auto& [key, v] : t.by_size) {
      auto mirror = t.by_size.find({-key.first, key.second});
      if (mirror == t.by_size.end() || mirror->second != v) return false;
    }
    return true;
  });
  check("mono: total multiplicity is the summand count", [&] {
    return associated_graded(n, o, layers).total() ==
           static_cast<long>(o.size());
  });
  if (n <= 4)
    check("mono: subspace oracle agrees", [&] {
      std::string why;
      if (!oracle_agrees(R, o, layers, &why)) throw std::runtime_error(why);
      return true;
    });
  return out;
}

}  // namespace parity
