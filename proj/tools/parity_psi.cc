// parity-psi: run the verification suites and emit complexes, multiplicity
// tables, Weyl/Hecke data, chart identities, and relation-usage ledgers.
// Exit codes: 0 all pass, 1 verification failure, 2 usage error.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parity/geometry.hh"
#include "parity/monodromy.hh"
#include "parity/nearby.hh"
#include "parity/render.hh"
#include "parity/weyl.hh"

namespace {

using namespace parity;

struct RunConfig {
  int n = 1;
  BaseRing ring = BaseRing::Z();
  std::string command;
  std::string format = "text";
  bool global_mode = false;  // enforce the |I| <= n-2 ledger bound
  std::string suite;         // verify: run only this suite
  int threads = 1;
};

int env_threads() {
  const char* s = std::getenv("PARITY_PSI_THREADS");
  if (!s || !*s) return 1;
  int v = std::atoi(s);
  if (v < 1) return 1;
  return v > 64 ? 64 : v;
}

std::string subset_text(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_members(mask)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string word_text(const ReducedWord& w) {
  std::string out;
  for (int i : w.letters) {
    if (!out.empty()) out += "*";
    out += "s" + std::to_string(i);
  }
  if (w.omega > 0) {
    if (!out.empty()) out += "*";
    out += w.omega == 1 ? "w" : "w^" + std::to_string(w.omega);
  }
  return out.empty() ? "e" : out;
}

// One named body per suite; each runs with its own ledger so suites can
// execute on worker threads, merged afterwards in declaration order.
struct SuiteTask {
  std::string name;
  std::function<std::vector<Check>(UsageLedger&)> body;
};

std::vector<SuiteTask> suite_tasks(const RunConfig& cfg) {
  BaseRing R = cfg.ring;
  int n = cfg.n;
  return {
      {"level", [=](UsageLedger&) { return suite_level(R, n); }},
      {"jordan", [=](UsageLedger& l) { return suite_jordan(R, n, &l); }},
      {"edge", [=](UsageLedger&) { return suite_edge(R, n); }},
      {"extension", [=](UsageLedger&) { return suite_extension(R, n); }},
      {"psi", [=](UsageLedger& l) { return suite_psi(R, n, &l); }},
      {"complexes", [=](UsageLedger& l) { return suite_complexes(R, n, &l); }},
      {"equivalence", [=](UsageLedger&) { return suite_equivalence(R, n); }},
      {"theorem", [=](UsageLedger&) { return suite_theorem(R, n); }},
      {"recursion", [=](UsageLedger&) { return suite_recursion(R, n); }},
      {"monodromy", [=](UsageLedger&) { return suite_monodromy(R, n); }},
      {"weyl", [=](UsageLedger&) { return suite_weyl(n); }},
      {"chart", [=](UsageLedger&) { return suite_chart(n); }},
  };
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<SuiteTask> tasks = suite_tasks(cfg);
  if (!cfg.suite.empty()) {
    std::vector<SuiteTask> picked;
    for (SuiteTask& t : tasks)
      if (t.name == cfg.suite) picked.push_back(std::move(t));
    if (picked.empty()) {
      std::cerr << "error: unknown suite '" << cfg.suite
                << "' (level, jordan, edge, extension, psi, complexes, "
                   "equivalence, theorem, recursion, monodromy, weyl, chart)\n";
      return 2;
    }
    tasks = std::move(picked);
  }

  std::vector<std::vector<Check>> results(tasks.size());
  std::vector<UsageLedger> ledgers(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] = tasks[i].body(ledgers[i]);
      } catch (const std::exception& e) {
        results[i] = {{tasks[i].name + ": suite threw", false, e.what()}};
      }
    }
  };
  int workers = std::min<int>(cfg.threads, static_cast<int>(tasks.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<Check> all;
  UsageLedger ledger;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    for (Check& c : results[i]) all.push_back(std::move(c));
    ledger.merge(ledgers[i]);
  }
  if (cfg.global_mode) {
    Check bound;
    bound.name = "usage: recorded strata within |I| <= n-2";
    bound.ok = ledger.all_strata_within(cfg.n - 2);
    if (!bound.ok)
      bound.detail =
          "max stratum size " + std::to_string(ledger.max_stratum_size());
    all.push_back(std::move(bound));
  }

  if (cfg.format == "json")
    out << checks_json(all);
  else
    out << checks_text(all);
  return all_ok(all) ? 0 : 1;
}

int cmd_psi(const RunConfig& cfg, std::ostream& out) {
  DifferentialComplex c = psi_mix(cfg.ring, cfg.n);
  UsageLedger ledger;
  ValidationResult vr = validate(c, ledger);
  if (!vr.ok) {
    std::cerr << "error: tower complex failed validation: " << vr.message
              << "\n";
    return 1;
  }
  if (cfg.global_mode && !ledger.all_strata_within(cfg.n - 2)) {
    std::cerr << "error: validation used the unit-sum identity on a stratum "
                 "larger than n-2\n";
    return 1;
  }
  if (cfg.format == "latex")
    out << render_latex(c);
  else if (cfg.format == "json")
    out << render_json(c, cfg.ring);
  else
    out << render_text(c);
  return 0;
}

int cmd_grm(const RunConfig& cfg, std::ostream& out) {
  GradedObject o = psi_total(cfg.n);
  std::vector<FiltrationLayer> layers = monodromy_filtration(o);
  MultiplicityTable computed = associated_graded(cfg.n, o, layers);
  bool match = computed == closed_form_table(cfg.n);
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::parse(table_json(computed));
    j["matches_closed_form"] = match;
    out << j.dump(2) << "\n";
  } else {
    out << table_text(computed);
    out << "closed-form match: " << (match ? "yes" : "NO") << "\n";
  }
  return match ? 0 : 1;
}

int cmd_weyl(const RunConfig& cfg, std::ostream& out) {
  std::vector<AdmissibleElement> adm = admissible_elements(cfg.n);
  struct HeckeRow {
    std::uint32_t subset;
    std::size_t support;
    bool unit;
  };
  std::vector<HeckeRow> hecke;
  bool all_unit = true;
  for (const AdmissibleElement& a : adm) {
    HeckeElement h = hecke_subexpression_check(a.word);
    bool unit = true;
    for (const auto& [x, q] : h.terms)
      if (!(q == QPoly{{1}})) unit = false;
    all_unit = all_unit && unit;
    hecke.push_back({a.subset, h.terms.size(), unit});
  }
  if (cfg.format == "json") {
    nlohmann::json j;
    j["kind"] = "weyl";
    j["n"] = cfg.n;
    j["admissible_count"] = adm.size();
    j["admissible"] = nlohmann::json::array();
    for (const AdmissibleElement& a : adm)
      j["admissible"].push_back({{"subset", subset_members(a.subset)},
                                 {"letters", a.word.letters},
                                 {"omega", a.word.omega},
                                 {"element", element_text(a.element)}});
    j["hecke"] = nlohmann::json::array();
    for (const HeckeRow& r : hecke)
      j["hecke"].push_back({{"subset", subset_members(r.subset)},
                            {"support", r.support},
                            {"unit_coefficients", r.unit}});
    j["all_unit"] = all_unit;
    out << j.dump(2) << "\n";
  } else {
    out << "weyl n=" << cfg.n << " admissible=" << adm.size() << "\n";
    for (const AdmissibleElement& a : adm)
      out << "I=" << subset_text(a.subset) << " word=" << word_text(a.word)
          << " element=" << element_text(a.element) << "\n";
    for (const HeckeRow& r : hecke)
      out << "hecke I=" << subset_text(r.subset) << " support=" << r.support
          << " unit-coefficients=" << (r.unit ? "yes" : "NO") << "\n";
  }
  return all_unit ? 0 : 1;
}

int cmd_chart(const RunConfig& cfg, std::ostream& out) {
  int n = cfg.n;
  ChartPoly base = ch_one();
  for (int i = 1; i <= n; ++i) base = ch_mul(base, ch_x(i));
  std::string m_why, i_why, e_why;
  bool mem = chart_membership_check(n, &m_why);
  bool inv = inverse_check(n, &i_why);
  bool eqv = equivariance_check(n, &e_why);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["kind"] = "chart";
    j["n"] = n;
    j["base"] = ch_text(base);
    j["lines"] = nlohmann::json::array();
    for (int k = 1; k <= n; ++k) {
      nlohmann::json line = nlohmann::json::array();
      for (const ChartPoly& p : chart_line(n, k).coords)
        line.push_back(ch_text(p));
      j["lines"].push_back(line);
    }
    j["characters"] = nlohmann::json::array();
    for (int i = 1; i <= n; ++i)
      j["characters"].push_back(ch_text(chart_character(n, i)));
    j["membership"] = mem;
    j["inverse"] = inv;
    j["equivariance"] = eqv;
    out << j.dump(2) << "\n";
  } else {
    out << "chart n=" << n << "\n";
    out << "base = " << ch_text(base) << "\n";
    for (int k = 1; k <= n; ++k) {
      out << "u" << k << " = [";
      const ProjVector& line = chart_line(n, k);
      for (std::size_t m = 0; m < line.coords.size(); ++m)
        out << (m ? ", " : "") << ch_text(line.coords[m]);
      out << "]\n";
    }
    for (int i = 1; i <= n; ++i)
      out << "chi" << i << " = " << ch_text(chart_character(n, i)) << "\n";
    out << "membership: " << (mem ? "ok" : "FAIL " + m_why) << "\n";
    out << "inverse: " << (inv ? "ok" : "FAIL " + i_why) << "\n";
    out << "equivariance: " << (eqv ? "ok" : "FAIL " + e_why) << "\n";
  }
  return (mem && inv && eqv) ? 0 : 1;
}

int cmd_usage(const RunConfig& cfg, std::ostream& out) {
  UsageLedger ledger = usage_report(cfg.ring, cfg.n);
  int bound = cfg.n - 2;
  if (cfg.format == "json")
    out << ledger_json(ledger, cfg.n, bound);
  else
    out << ledger_text(ledger, cfg.n, bound);
  if (cfg.global_mode && !ledger.all_strata_within(bound)) return 1;
  return 0;
}

int run(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "verify") return cmd_verify(cfg, out);
  if (cfg.command == "psi") return cmd_psi(cfg, out);
  if (cfg.command == "grm") return cmd_grm(cfg, out);
  if (cfg.command == "weyl") return cmd_weyl(cfg, out);
  if (cfg.command == "chart") return cmd_chart(cfg, out);
  if (cfg.command == "usage") return cmd_usage(cfg, out);
  std::cerr << "error: unknown command\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "parity-psi: exact verification and rendering of the parity-sheaf "
      "complexes on the stratified affine space"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.threads = env_threads();
  std::string ring = "z", mode = "affine";

  app.add_option("--n", cfg.n, "ambient dimension (number of coordinates)")
      ->required()
      ->check(CLI::Range(1, 16));
  app.add_option("--ring", ring, "base ring: z, q, or gf:P")
      ->default_val("z");
  app.add_option("--mode", mode,
                 "affine: report ledger use; global: enforce |I| <= n-2")
      ->check(CLI::IsMember({"affine", "global"}))
      ->default_val("affine");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->default_val("text");
  app.add_option("--suite", cfg.suite, "verify: run a single named suite");

  app.add_subcommand("verify", "run the lemma, theorem, and suite checks");
  app.add_subcommand("psi", "emit the glued tower complex");
  app.add_subcommand("grm", "emit the associated-graded multiplicity tables");
  app.add_subcommand("weyl", "emit admissible elements and Hecke data");
  app.add_subcommand("chart", "emit the open-chart lines and identities");
  app.add_subcommand("usage", "emit the relation-usage ledger");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.global_mode = (mode == "global");
  try {
    cfg.ring = ring_from_text(ring);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (cfg.format == "latex" && cfg.command != "psi") {
    std::cerr << "error: latex output is defined for the psi command only\n";
    return 2;
  }

  try {
    return run(cfg, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
