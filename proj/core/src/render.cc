#include "parity/render.hh"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"
#include "parity/strata.hh"

namespace parity {

namespace {

std::string members_text(std::uint32_t mask) {
  std::string out;
  for (int i : subset_members(mask)) {
    if (!out.empty()) out += ",";
    out += std::to_string(i);
  }
  return out;
}

std::string pfmt(int p) {
  return p > 0 ? "+" + std::to_string(p) : std::to_string(p);
}

std::string mono_latex(const Mono& m, int n) {
  std::string out;
  auto factor = [&](const std::string& base, int e) {
    if (e == 0) return;
    out += base;
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  };
  for (int i = 0; i < n; ++i)
    factor("\\alpha_{" + std::to_string(i + 1) + "}", m.e[i]);
  factor("\\xi", m.e[kXiSlot]);
  return out;
}

// One poly term without sign, e.g. "3\alpha_{1}\xi"; +-1 keeps the bare
// monomial and a constant keeps the bare coefficient.
std::string term_latex(const BaseRing& R, const Mono& m, const Coef& c,
                       int n) {
  Coef mag = c_is_negative(R, c) ? c_neg(R, c) : c;
  std::string mono = mono_latex(m, n);
  std::string ct = c_text(mag);
  if (mono.empty()) return ct;
  return ct == "1" ? mono : ct + mono;
}

// Row groups by chain position, top row first, members in object order.
struct RowSplit {
  std::vector<int> positions;        // descending
  std::vector<std::vector<int>> members;
  std::vector<int> row_of;           // summand index -> row index
};

RowSplit split_rows(const GradedObject& o) {
  RowSplit rs;
  for (const Summand& s : o.summands) rs.positions.push_back(s.p());
  std::sort(rs.positions.begin(), rs.positions.end(), std::greater<int>());
  rs.positions.erase(std::unique(rs.positions.begin(), rs.positions.end()),
                     rs.positions.end());
  rs.members.resize(rs.positions.size());
  rs.row_of.resize(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) {
    int row = static_cast<int>(
        std::lower_bound(rs.positions.begin(), rs.positions.end(),
                         o.summands[i].p(), std::greater<int>()) -
        rs.positions.begin());
    rs.row_of[i] = row;
    rs.members[row].push_back(static_cast<int>(i));
  }
  return rs;
}

// (source row, target row) -> the block of entries between those rows.
using Blocks = std::map<std::pair<int, int>, std::vector<
    std::pair<std::pair<int, int>, const NormalMorphism*>>>;

Blocks split_blocks(const DifferentialComplex& c, const RowSplit& rs) {
  Blocks out;
  for (const auto& [key, nm] : c.differential.entries) {
    if (nm.coef.is_zero()) continue;
    int trow = rs.row_of[key.first];
    int srow = rs.row_of[key.second];
    if (trow >= srow)
      throw std::logic_error("entry does not raise the chain position");
    out[{srow, trow}].push_back({key, &nm});
  }
  return out;
}

const NormalMorphism* block_cell(
    const Blocks::mapped_type& cells, int target, int source) {
  for (const auto& [key, nm] : cells)
    if (key.first == target && key.second == source) return nm;
  return nullptr;
}

bool is_unit(const Scalar& s, int* sign) {
  Scalar red = s.reduced();
  if (red.xibar_flag() != 0 || red.r_power() != 0) return false;
  const auto& terms = red.poly().terms();
  if (terms.size() != 1) return false;
  const auto& [m, c] = *terms.begin();
  if (m.total_degree() != 0) return false;
  if (c.num == 1 && c.den == 1) { *sign = 1; return true; }
  if (c.num == -1 && c.den == 1) { *sign = -1; return true; }
  return false;
}

std::string word_latex(const NormalMorphism& f) {
  std::string out;
  std::uint32_t diff = f.source ^ f.target;
  for (int i : subset_members(diff & f.source))
    out += "\\dot\\epsilon_{" + std::to_string(i) + "}";
  for (int i : subset_members(diff & f.target))
    out += "\\dot\\eta_{" + std::to_string(i) + "}";
  return out.empty() ? "\\mathrm{id}" : out;
}

// Label for one block arrow. Vector-shaped labels keep explicit zeros;
// matrices leave blank cells. A block whose nonzero cells are all the same
// scalar times an identity factors the scalar out front, as in -xibar N.
std::string block_latex(const Blocks::mapped_type& cells,
                        const std::vector<int>& targets,
                        const std::vector<int>& sources) {
  std::size_t rows = targets.size(), cols = sources.size();
  if (rows == 1 && cols == 1) {
    const NormalMorphism* nm = block_cell(cells, targets[0], sources[0]);
    return nm ? nm_latex(*nm) : "0";
  }
  const Scalar* common = nullptr;
  bool factorable = true;
  for (const auto& [key, nm] : cells) {
    if (nm->source != nm->target) { factorable = false; break; }
    if (!common) common = &nm->coef;
    else if (!common->equals(nm->coef)) { factorable = false; break; }
  }
  std::string zero = (rows == 1 || cols == 1) ? "0" : "";
  std::string body;
  for (std::size_t r = 0; r < rows; ++r) {
    if (r) body += " \\\\ ";
    for (std::size_t cidx = 0; cidx < cols; ++cidx) {
      if (cidx) body += " & ";
      const NormalMorphism* nm = block_cell(cells, targets[r], sources[cidx]);
      if (!nm) body += zero;
      else body += factorable ? "\\mathrm{id}" : nm_latex(*nm);
    }
  }
  std::string mat =
      "\\left[\\begin{smallmatrix} " + body + " \\end{smallmatrix}\\right]";
  if (!factorable || !common) return mat;
  int sign = 0;
  if (is_unit(*common, &sign))
    return (sign < 0 ? "-" : "") + mat;
  return scalar_latex(*common) + " \\cdot " + mat;
}

Regime regime_from_name(const std::string& name) {
  if (name == "Gm") return Regime::Gm;
  if (name == "mix") return Regime::mix;
  if (name == "mon") return Regime::mon;
  throw std::invalid_argument("unknown regime: " + name);
}

}  // namespace

std::string summand_text(const Summand& s) {
  std::string out = "E(" + members_text(s.stratum) + ")";
  if (s.t != 0) out += "{" + std::to_string(-s.t) + "}";
  return out;
}

std::string summand_latex(const Summand& s) {
  std::string args = members_text(s.stratum);
  std::string out =
      "\\mathcal{E}(" + (args.empty() ? "\\varnothing" : args) + ")";
  if (s.t != 0) out += "\\{" + std::to_string(-s.t) + "\\}";
  return out;
}

std::string scalar_latex(const Scalar& s) {
  Scalar red = s.reduced();
  if (red.is_zero()) return "0";
  const BaseRing& R = red.ring();
  std::string pre;
  if (red.xibar_flag()) pre += "\\bar\\xi ";
  if (red.r_power() == 1) pre += "r ";
  else if (red.r_power() > 1)
    pre += "r^{" + std::to_string(red.r_power()) + "} ";
  const auto& terms = red.poly().terms();
  if (terms.size() == 1) {
    const auto& [m, c] = *terms.begin();
    std::string sign = c_is_negative(R, c) ? "-" : "";
    std::string body = term_latex(R, m, c, red.n());
    if (body == "1" && !pre.empty()) body = "";
    std::string out = sign + pre + body;
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
  }
  std::string body;
  for (const auto& [m, c] : terms) {
    if (body.empty())
      body += (c_is_negative(R, c) ? "-" : "") + term_latex(R, m, c, red.n());
    else
      body += (c_is_negative(R, c) ? " - " : " + ") +
              term_latex(R, m, c, red.n());
  }
  return pre + "\\left(" + body + "\\right)";
}

std::string nm_latex(const NormalMorphism& f) {
  if (f.coef.is_zero()) return "0";
  int sign = 0;
  if (is_unit(f.coef, &sign))
    return (sign < 0 ? "-" : "") + word_latex(f);
  return scalar_latex(f.coef) + " \\cdot " + word_latex(f);
}

std::string render_latex(const DifferentialComplex& c) {
  if (c.object.size() == 0) return "\\begin{tikzcd}\n0\n\\end{tikzcd}\n";
  RowSplit rs = split_rows(c.object);
  Blocks blocks = split_blocks(c, rs);
  std::string out = "\\begin{tikzcd}[row sep=large]\n";
  for (std::size_t row = 0; row < rs.positions.size(); ++row) {
    if (row) out += " \\\\\n";
    std::string line;
    for (std::size_t k = 0; k < rs.members[row].size(); ++k) {
      if (k) line += " \\oplus ";
      line += summand_latex(c.object.summands[rs.members[row][k]]);
    }
    // arrows leave from this row, nearest target first
    for (int trow = static_cast<int>(row) - 1; trow >= 0; --trow) {
      auto it = blocks.find({static_cast<int>(row), trow});
      if (it == blocks.end()) continue;
      std::string label =
          block_latex(it->second, rs.members[trow], rs.members[row]);
      int dist = static_cast<int>(row) - trow;
      std::string dir(dist, 'u');
      if (dist == 1)
        line += " \\ar[" + dir + ", \"{" + label + "}\"]";
      else
        line += " \\ar[" + dir + ", bend right=60, \"{" + label + "}\"']";
    }
    out += line;
  }
  out += "\n\\end{tikzcd}\n";
  return out;
}

std::string render_text(const DifferentialComplex& c) {
  std::string out = "complex regime=" + regime_name(c.regime) +
                    " n=" + std::to_string(c.n) + "\n";
  if (c.object.size() == 0) return out + "(zero object)\n";
  RowSplit rs = split_rows(c.object);
  Blocks blocks = split_blocks(c, rs);
  for (std::size_t row = 0; row < rs.positions.size(); ++row) {
    out += "[p " + pfmt(rs.positions[row]) + "]";
    for (std::size_t k = 0; k < rs.members[row].size(); ++k) {
      out += k ? " (+) " : " ";
      out += summand_text(c.object.summands[rs.members[row][k]]);
    }
    out += "\n";
  }
  // blocks from the start of the complex upward, nearest target first
  for (int srow = static_cast<int>(rs.positions.size()) - 1; srow >= 0;
       --srow) {
    for (int trow = srow - 1; trow >= 0; --trow) {
      auto it = blocks.find({srow, trow});
      if (it == blocks.end()) continue;
      out += "d [p " + pfmt(rs.positions[srow]) + "] -> [p " +
             pfmt(rs.positions[trow]) + "]:\n";
      const auto& targets = rs.members[trow];
      const auto& sources = rs.members[srow];
      std::vector<std::vector<std::string>> grid(
          targets.size(), std::vector<std::string>(sources.size(), "."));
      std::vector<std::size_t> width(sources.size(), 1);
      for (std::size_t r = 0; r < targets.size(); ++r)
        for (std::size_t k = 0; k < sources.size(); ++k) {
          const NormalMorphism* nm =
              block_cell(it->second, targets[r], sources[k]);
          if (nm) grid[r][k] = nm_text(*nm);
          width[k] = std::max(width[k], grid[r][k].size());
        }
      for (std::size_t r = 0; r < targets.size(); ++r) {
        out += "  [ ";
        for (std::size_t k = 0; k < sources.size(); ++k) {
          if (k) out += "  ";
          out += grid[r][k];
          out += std::string(width[k] - grid[r][k].size(), ' ');
        }
        out += " ]\n";
      }
    }
  }
  return out;
}

std::string render_json(const DifferentialComplex& c, BaseRing R) {
  nlohmann::json j;
  j["kind"] = "complex";
  j["n"] = c.n;
  j["regime"] = regime_name(c.regime);
  j["ring"] = R.name();
  j["summands"] = nlohmann::json::array();
  for (const Summand& s : c.object.summands)
    j["summands"].push_back({{"stratum", subset_members(s.stratum)},
                             {"t", s.t},
                             {"h", s.h}});
  j["entries"] = nlohmann::json::array();
  for (const auto& [key, nm] : c.differential.entries) {
    if (nm.coef.is_zero()) continue;
    j["entries"].push_back({{"row", key.first},
                            {"col", key.second},
                            {"scalar", nm.coef.text()}});
  }
  return j.dump(2) + "\n";
}

DifferentialComplex parse_complex_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("kind") != "complex")
    throw std::invalid_argument("not a complex report");
  DifferentialComplex c;
  c.n = j.at("n").get<int>();
  c.regime = regime_from_name(j.at("regime").get<std::string>());
  BaseRing R = ring_from_text(j.at("ring").get<std::string>());
  for (const auto& js : j.at("summands")) {
    Summand s;
    s.stratum = subset_from_members(js.at("stratum").get<std::vector<int>>());
    s.t = js.at("t").get<int>();
    s.h = js.at("h").get<int>();
    c.object.summands.push_back(s);
  }
  c.differential = mm_zero(c.object, c.object);
  for (const auto& je : j.at("entries")) {
    int row = je.at("row").get<int>();
    int col = je.at("col").get<int>();
    NormalMorphism nm;
    nm.source = c.object.summands.at(col).stratum;
    nm.target = c.object.summands.at(row).stratum;
    nm.coef = Scalar::parse(R, c.n, je.at("scalar").get<std::string>());
    c.differential.set_entry(row, col, nm);
  }
  return c;
}

std::string table_text(const MultiplicityTable& t) {
  std::string out = "multiplicity table n=" + std::to_string(t.n) +
                    " total=" + std::to_string(t.total()) + "\n";
  out += "by size:\n";
  auto it = t.by_size.begin();
  while (it != t.by_size.end()) {
    int k = it->first.first;
    out += "  k=" + pfmt(k) + ":";
    bool first = true;
    for (; it != t.by_size.end() && it->first.first == k; ++it) {
      out += first ? " " : ", ";
      out += "|I|=" + std::to_string(it->first.second) + " x " +
             std::to_string(it->second);
      first = false;
    }
    out += "\n";
  }
  out += "by stratum:\n";
  auto jt = t.by_stratum.begin();
  while (jt != t.by_stratum.end()) {
    int k = jt->first.first;
    out += "  k=" + pfmt(k) + ":";
    bool first = true;
    for (; jt != t.by_stratum.end() && jt->first.first == k; ++jt) {
      out += first ? " " : ", ";
      out += "E(" + members_text(jt->first.second) + ") x " +
             std::to_string(jt->second);
      first = false;
    }
    out += "\n";
  }
  return out;
}

std::string table_json(const MultiplicityTable& t) {
  nlohmann::json j;
  j["kind"] = "multiplicity-table";
  j["n"] = t.n;
  j["total"] = t.total();
  j["by_size"] = nlohmann::json::array();
  for (const auto& [key, count] : t.by_size)
    j["by_size"].push_back(
        {{"k", key.first}, {"size", key.second}, {"count", count}});
  j["by_stratum"] = nlohmann::json::array();
  for (const auto& [key, count] : t.by_stratum)
    j["by_stratum"].push_back({{"k", key.first},
                               {"stratum", subset_members(key.second)},
                               {"count", count}});
  return j.dump(2) + "\n";
}

std::string checks_text(const std::vector<Check>& cs) {
  std::string out;
  std::size_t passed = 0;
  for (const Check& c : cs) {
    if (c.ok) {
      ++passed;
      out += "ok    " + c.name + "\n";
    } else {
      out += "FAIL  " + c.name;
      if (!c.detail.empty()) out += "  [" + c.detail + "]";
      out += "\n";
    }
  }
  out += "passed " + std::to_string(passed) + "/" +
         std::to_string(cs.size()) + "\n";
  return out;
}

std::string checks_json(const std::vector<Check>& cs) {
  nlohmann::json j;
  j["kind"] = "checks";
  std::size_t passed = 0;
  j["items"] = nlohmann::json::array();
  for (const Check& c : cs) {
    if (c.ok) ++passed;
    j["items"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  }
  j["passed"] = passed;
  j["total"] = cs.size();
  return j.dump(2) + "\n";
}

std::string ledger_text(const UsageLedger& l, int n, int bound) {
  std::string out = "usage ledger n=" + std::to_string(n) +
                    " bound=" + std::to_string(bound) +
                    " events=" + std::to_string(l.events.size()) +
                    " max-stratum-size=" + std::to_string(l.max_stratum_size()) +
                    " within-bound=" +
                    (l.all_strata_within(bound) ? "yes" : "NO") + "\n";
  for (const auto& [tag, stratum] : l.events)
    out += "  " + tag + " E(" + members_text(stratum) + ")\n";
  return out;
}

std::string ledger_json(const UsageLedger& l, int n, int bound) {
  nlohmann::json j;
  j["kind"] = "usage-ledger";
  j["n"] = n;
  j["bound"] = bound;
  j["max_stratum_size"] = l.max_stratum_size();
  j["within_bound"] = l.all_strata_within(bound);
  j["events"] = nlohmann::json::array();
  for (const auto& [tag, stratum] : l.events)
    j["events"].push_back(
        {{"tag", tag}, {"stratum", subset_members(stratum)}});
  return j.dump(2) + "\n";
}

std::string normalize_ws(const std::string& s) {
  std::vector<std::string> lines;
  std::string cur;
  auto flush = [&]() {
    std::string packed;
    bool space = false;
    for (char ch : cur) {
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        space = !packed.empty();
        continue;
      }
      if (space) packed += ' ';
      packed += ch;
      space = false;
    }
    lines.push_back(std::move(packed));
    cur.clear();
  };
  for (char ch : s) {
    if (ch == '\n') flush();
    else cur += ch;
  }
  if (!cur.empty()) flush();
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += "\n";
    out += lines[i];
  }
  return out;
}

}  // namespace parity
