// Acceptance gate. One line per criterion, pass or fail, exact equality
// throughout (zero tolerance); exit status 0 only when every line passes.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "parity/geometry.hh"
#include "parity/monodromy.hh"
#include "parity/nearby.hh"
#include "parity/render.hh"
#include "parity/weyl.hh"

using namespace parity;

namespace {

bool checks_pass(const std::vector<Check>& cs, std::string* why) {
  for (const Check& c : cs)
    if (!c.ok) {
      *why = c.name;
      if (!c.detail.empty()) *why += " [" + c.detail + "]";
      return false;
    }
  return true;
}

bool valid_ok(const DifferentialComplex& c, std::string* why) {
  UsageLedger ledger;
  ValidationResult vr = validate(c, ledger);
  if (!vr.ok) *why = vr.message;
  return vr.ok;
}

std::string golden(int n) {
  std::ifstream f(std::string(PARITY_GOLDEN_DIR) + "/psi_n" +
                  std::to_string(n) + ".tex");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Gate {
  int number = 0;
  bool failed = false;

  template <class F>
  void criterion(const std::string& label, F&& body) {
    ++number;
    std::string why;
    bool ok = false;
    try {
      ok = body(&why);
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("threw: ") + e.what();
    }
    if (!ok) failed = true;
    std::printf("criterion %d: %s  %s%s%s\n", number, ok ? "PASS" : "FAIL",
                label.c_str(), why.empty() ? "" : "  -- ",
                why.c_str());
    std::fflush(stdout);
  }
};

}  // namespace

int main() {
  BaseRing Z = BaseRing::Z();
  Gate gate;

  gate.criterion(
      "differential conditions for all five complexes, n <= 8, under 60s",
      [&](std::string* why) {
        auto t0 = std::chrono::steady_clock::now();
        for (int n = 1; n <= 8; ++n) {
          if (!valid_ok(psi_mix(Z, n), why) ||
              !valid_ok(shriek_jordan(Z, n), why) ||
              !valid_ok(star_jordan(Z, n), why) ||
              !valid_ok(shriek_std(Z, n), why) ||
              !valid_ok(star_std(Z, n), why)) {
            *why += " (n=" + std::to_string(n) + ")";
            return false;
          }
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2fs", secs);
        *why = buf;
        return secs < 60.0;
      });

  gate.criterion(
      "interface-map lemma suites and tower analogues, n <= 8",
      [&](std::string* why) {
        for (int n = 1; n <= 8; ++n) {
          std::vector<Check> all;
          for (std::vector<Check> cs :
               {suite_level(Z, n), suite_jordan(Z, n), suite_edge(Z, n),
                suite_extension(Z, n), suite_psi(Z, n)})
            all.insert(all.end(), cs.begin(), cs.end());
          if (!checks_pass(all, why)) {
            *why += " (n=" + std::to_string(n) + ")";
            return false;
          }
        }
        return true;
      });

  gate.criterion(
      "chain maps, both homotopies, and the null-homotopy, n <= 6",
      [&](std::string* why) {
        for (int n = 1; n <= 6; ++n) {
          std::vector<Check> all = suite_equivalence(Z, n);
          std::vector<Check> thm = suite_theorem(Z, n);
          all.insert(all.end(), thm.begin(), thm.end());
          if (!checks_pass(all, why)) {
            *why += " (n=" + std::to_string(n) + ")";
            return false;
          }
        }
        return true;
      });

  gate.criterion(
      "unit-sum usage confined to strata with |I| <= n-2, 2 <= n <= 8",
      [&](std::string* why) {
        for (int n = 2; n <= 8; ++n) {
          UsageLedger ledger = usage_report(Z, n);
          if (!ledger.all_strata_within(n - 2)) {
            *why = "max stratum size " +
                   std::to_string(ledger.max_stratum_size()) +
                   " (n=" + std::to_string(n) + ")";
            return false;
          }
        }
        return true;
      });

  gate.criterion(
      "monodromy filtration axioms, closed-form tables, oracle, n <= 6",
      [&](std::string* why) {
        for (int n = 1; n <= 6; ++n)
          if (!checks_pass(suite_monodromy(Z, n), why)) {
            *why += " (n=" + std::to_string(n) + ")";
            return false;
          }
        return true;
      });

  gate.criterion(
      "rendered tower matches the curated golden figures, n <= 3",
      [&](std::string* why) {
        for (int n = 1; n <= 3; ++n) {
          std::string want = golden(n);
          if (want.empty()) {
            *why = "missing golden file (n=" + std::to_string(n) + ")";
            return false;
          }
          if (normalize_ws(render_latex(psi_mix(Z, n))) !=
              normalize_ws(want)) {
            *why = "figure differs (n=" + std::to_string(n) + ")";
            return false;
          }
        }
        return true;
      });

  gate.criterion(
      "admissible count, word independence, Hecke coefficients, n <= 8",
      [&](std::string* why) {
        for (int n = 1; n <= 8; ++n)
          if (!checks_pass(suite_weyl(n), why)) {
            *why += " (n=" + std::to_string(n) + ")";
            return false;
          }
        return true;
      });

  gate.criterion(
      "chart membership, inverse, base map, and equivariance, n <= 8",
      [&](std::string* why) {
        for (int n = 1; n <= 8; ++n)
          if (!checks_pass(suite_chart(n), why)) {
            *why += " (n=" + std::to_string(n) + ")";
            return false;
          }
        return true;
      });

  gate.criterion(
      "box-product recursion with sign negative control, 2 <= n <= 6",
      [&](std::string* why) {
        for (int n = 2; n <= 6; ++n)
          if (!checks_pass(suite_recursion(Z, n), why)) {
            *why += " (n=" + std::to_string(n) + ")";
            return false;
          }
        return true;
      });

  std::printf("acceptance: %s\n", gate.failed ? "FAIL" : "PASS");
  return gate.failed ? 1 : 0;
}
