#pragma once

// Deterministic serialization of complexes, multiplicity tables, and check
// reports. LaTeX output draws the chain-position layout: one row per
// position, differentials as labeled up arrows, position-skipping entries
// as bent long arrows with a common scalar factored out. JSON embeds every
// scalar in its canonical text form, so reports parse back exactly.

#include <string>
#include <vector>

#include "parity/check.hh"
#include "parity/complexes.hh"
#include "parity/monodromy.hh"

namespace parity {

// E(I){s}: subset members comma-separated, brace twist only when s != 0.
std::string summand_text(const Summand& s);
// \mathcal{E}(\varnothing)\{1\}, \mathcal{E}(1,3)
std::string summand_latex(const Summand& s);

std::string scalar_latex(const Scalar& s);
// Sign and unit coefficients fold into the word: \dot\epsilon_1,
// -\dot\eta_2, -\bar\xi \cdot \mathrm{id}.
std::string nm_latex(const NormalMorphism& f);

// tikzcd figure, rows ordered by descending chain position. Zero entries
// print as 0 in vector-shaped labels and as blank cells otherwise. The
// zero object renders as a bare-zero stub.
std::string render_latex(const DifferentialComplex& c);

// Same row layout in plain text; each differential block is an aligned
// grid of canonical entry texts with . for zero cells.
std::string render_text(const DifferentialComplex& c);

// {entries, kind, n, regime, ring, summands}; entries carry only the
// scalar, the word being forced by the endpoint strata.
std::string render_json(const DifferentialComplex& c, BaseRing R);
DifferentialComplex parse_complex_json(const std::string& text);

std::string table_text(const MultiplicityTable& t);
std::string table_json(const MultiplicityTable& t);

std::string checks_text(const std::vector<Check>& cs);
std::string checks_json(const std::vector<Check>& cs);

std::string ledger_text(const UsageLedger& l, int n, int bound);
std::string ledger_json(const UsageLedger& l, int n, int bound);

// Collapses space runs, trims line ends, converts CRLF, drops trailing
// blank lines; golden comparisons equate exactly up to this.
std::string normalize_ws(const std::string& s);

}  // namespace parity
