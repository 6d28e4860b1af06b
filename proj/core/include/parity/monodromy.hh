#pragma once

// Monodromy filtration of the tower complex. The nil operator drops one
// ladder level and is the identity on each cell, so its kernels and images
// are spans of summands, and the filtration from the kernel/image sum
// formula is computable by label arithmetic alone. A generic subspace
// route over the base ring cross-checks the spans by exact elimination.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parity/complexes.hh"
#include "parity/nearby.hh"

namespace parity {

// Sorted summand indices into a fixed ambient object.
using SummandSpan = std::vector<int>;

// Index of (I, t-2, h) in o, or -1 when the ladder stops.
int nil_drop(const GradedObject& o, int idx);
// Smallest m >= 1 with N^m = 0.
int nilpotency_order(const GradedObject& o);
SummandSpan kernel_span(const GradedObject& o, int power);
SummandSpan image_span(const GradedObject& o, int power);

struct FiltrationLayer {
  int k = 0;
  SummandSpan members;

  bool operator==(const FiltrationLayer& o) const {
    return k == o.k && members == o.members;
  }
};

// M_k = sum over p - q = k of ker N^(p+1) intersected with im N^q, as spans;
// k runs from -m (empty) to m-1 (everything).
std::vector<FiltrationLayer> monodromy_filtration(const GradedObject& o);
// The same filtration from the three recursive clauses of the uniqueness
// argument: vanishing below -m, the preimage clause, and the image clause.
std::vector<FiltrationLayer> filtration_recursive(const GradedObject& o);

// Both defining properties: N carries M_i into M_(i-2), and N^i matches the
// graded pieces at i and -i bijectively. Layers outside the stored range
// count as empty below and everything above.
bool filtration_axioms_hold(const GradedObject& o,
                            const std::vector<FiltrationLayer>& layers,
                            std::string* why = nullptr);
// Every differential cell keeps each M_k stable (columns stay inside).
bool differential_preserves(const DifferentialComplex& z,
                            const std::vector<FiltrationLayer>& layers,
                            std::string* why = nullptr);

struct MultiplicityTable {
  int n = 0;
  std::map<std::pair<int, int>, long> by_size;               // (k, |I|)
  std::map<std::pair<int, std::uint32_t>, long> by_stratum;  // (k, I)

  bool operator==(const MultiplicityTable& o) const {
    return n == o.n && by_size == o.by_size && by_stratum == o.by_stratum;
  }
  long total() const;
};

MultiplicityTable associated_graded(int n, const GradedObject& o,
                                    const std::vector<FiltrationLayer>& layers);
// gr_k = direct sum over r, s >= 0 with r - s = k of the rank-(n-1-r-s)
// level sum at twist k.
MultiplicityTable closed_form_table(int n);

// Recomputes every layer by exact row reduction over the base ring
// (integers promote to rationals) and compares against the spans.
bool oracle_agrees(BaseRing R, const GradedObject& o,
                   const std::vector<FiltrationLayer>& layers,
                   std::string* why = nullptr);

std::vector<Check> suite_monodromy(BaseRing R, int n);

}  // namespace parity
