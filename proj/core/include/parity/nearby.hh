#pragma once

// The nearby-cycles tower over the stratified affine space.
//
// Layer by layer: rank sums E(I) over |I| = k, their twist ladders (a rank
// sum repeated at twists -n+i+1, -n+i+3, ..., n-i-1 with a nilpotent step
// map), the shriek/star extension objects collecting one copy of each rank
// at extreme twists, and the full tower carrying all ladders at once. On
// top of those sit the signed interface maps and the differentials that
// assemble them into complexes in the three regimes.
//
// Every identity the construction depends on is checked literally by the
// suite_* functions: matrices are built from the definitions, composed, and
// compared entry by entry. Ladder-valued maps keep natural endpoint twists;
// compositions inside the suites align endpoints by uniform retwist, which
// never touches cells.

#include <cstdint>
#include <string>
#include <vector>

#include "parity/check.hh"
#include "parity/complexes.hh"

namespace parity {

// ---------------------------------------------------------------- objects

// Direct sum of E(I) over |I| = k, untwisted, members-lex order. Empty
// outside 0 <= k <= n.
GradedObject rank_sum(int n, int k);

// Twist ladder over rank i: copies of rank_sum(n, i) at twists
// n-i-1, n-i-3, ..., -n+i+1 (listed twist-descending, the canonical
// order). Empty outside 0 <= i <= n-1.
GradedObject jordan_sum(int n, int i);

// One copy of each rank at the extreme low/high twist: rank k at <-n+k>
// (k = n..0) resp. <n-k> (k = 0..n). Both are canonically ordered.
GradedObject shriek_total(int n);
GradedObject star_total(int n);

// All ladders together, canonically ordered.
GradedObject psi_total(int n);

// Index of the (stratum, t, h) summand, -1 if absent.
int find_summand(const GradedObject& o, std::uint32_t stratum, int t, int h);

// ------------------------------------------------------------- level maps

// Signed one-step sums: the step touching member i carries the sign
// (-1)^{#{j < i : j not in I}} computed against the larger stratum I.
MatrixMorphism eps_level(BaseRing R, int n, int k);  // rank k -> rank k-1 {1}
MatrixMorphism eta_level(BaseRing R, int n, int k);  // rank k-1 {-1} -> rank k

// ------------------------------------------------------------ ladder maps

// Nilpotent step: identity from each ladder component onto the next lower
// twist; ladder i -> ladder i <2>.
MatrixMorphism jordan_nil(BaseRing R, int n, int i);
// eps_level applied wherever twist labels line up: ladder i -> ladder i-1 [1].
MatrixMorphism jordan_eps(BaseRing R, int n, int i);
// eta_level likewise: ladder i-1 [-1] -> ladder i.
MatrixMorphism jordan_eta(BaseRing R, int n, int i);
// Triangular contraction: ladder i <1> -> ladder i <-1>, r^m id onto the
// component m+1 steps up, all m >= 0.
MatrixMorphism jordan_h(BaseRing R, int n, int i);

// -------------------------------------------------- rank <-> ladder edges

// Natural endpoints, i in [0, n]; maps through a missing ladder are empty.
MatrixMorphism iota_lo(BaseRing R, int n, int i);  // rank<-n+i> -> ladder<-1>, r^j into comp j
MatrixMorphism iota_hi(BaseRing R, int n, int i);  // rank<n-i> -> ladder<1>, id into top comp
MatrixMorphism eps_hi(BaseRing R, int n, int i);   // rank<n-i> -> ladder(i-1)<-1>[1], eps into top
MatrixMorphism rho_edge(BaseRing R, int n, int i); // rank<-n+i> -> rank<n-i>, r^(n-i) id
MatrixMorphism proj_lo(BaseRing R, int n, int i);  // ladder<-1> -> rank<-n+i>, id off bottom comp
MatrixMorphism proj_hi(BaseRing R, int n, int i);  // ladder<1> -> rank<n-i>, r^(n-i-1-j) off comp j
MatrixMorphism eta_lo(BaseRing R, int n, int i);   // ladder(i-1)<1>[-1] -> rank<-n+i>, eta off bottom

// ---------------------------------------------- extension-object block maps

MatrixMorphism eps_shriek(BaseRing R, int n);  // shriek -> shriek [1]
MatrixMorphism eta_shriek(BaseRing R, int n);  // shriek -> shriek <-2>[1]
MatrixMorphism eps_star(BaseRing R, int n);    // star -> star <-2>[1]
MatrixMorphism eta_star(BaseRing R, int n);    // star -> star [1]
// r^(n-k) id on each rank: shriek -> star.
MatrixMorphism rho_total(BaseRing R, int n);

// ------------------------------------------------------- tower-level maps

MatrixMorphism psi_nil(BaseRing R, int n);     // tower -> tower <2>
MatrixMorphism psi_eps(BaseRing R, int n);     // tower -> tower [1]
MatrixMorphism psi_eta(BaseRing R, int n);     // tower -> tower [1]
MatrixMorphism psi_h(BaseRing R, int n);       // tower <1> -> tower <-1>
MatrixMorphism psi_iota_lo(BaseRing R, int n); // shriek -> tower <-1>
MatrixMorphism psi_iota_hi(BaseRing R, int n); // star -> tower <1>
MatrixMorphism psi_eps_hi(BaseRing R, int n);  // star -> tower <-1>[1]
MatrixMorphism psi_proj_lo(BaseRing R, int n); // tower <-1> -> shriek
MatrixMorphism psi_proj_hi(BaseRing R, int n); // tower <1> -> star
MatrixMorphism psi_eta_lo(BaseRing R, int n);  // tower <1>[-1] -> shriek
// Projection onto the open-stratum summand: star -> shriek, id there only.
MatrixMorphism open_projection(BaseRing R, int n);

// -------------------------------------------------------------- complexes

DifferentialComplex shriek_std(BaseRing R, int n);    // (shriek, eps)      Gm
DifferentialComplex star_std(BaseRing R, int n);      // (star, eta)        Gm
DifferentialComplex shriek_jordan(BaseRing R, int n); // (shriek, eps+r eta) mon
DifferentialComplex star_jordan(BaseRing R, int n);   // (star, eta+r eps)  mon
DifferentialComplex psi_mix(BaseRing R, int n);       // (tower, eps+eta-xibar N) mix
// cone(rho_total : shriek_jordan -> star_jordan), the boundary restriction.
DifferentialComplex boundary_cone(BaseRing R, int n);

// ----------------------------------------------------------------- suites

// One-step relations on rank sums: eps^2 = eta^2 = 0, eps eta + eta eps = xi.
std::vector<Check> suite_level(BaseRing R, int n);
// Ladder relations; the xi N identity is the one place the unit-sum
// argument enters, so it reports into the ledger when one is given.
std::vector<Check> suite_jordan(BaseRing R, int n, UsageLedger* ledger = nullptr);
// The two nine-identity families tying rank sums to their ladders.
std::vector<Check> suite_edge(BaseRing R, int n);
// Block-map relations on the extension objects, including the rho
// intertwiners.
std::vector<Check> suite_extension(BaseRing R, int n);
// Tower-level analogues of all of the above; the xi N identity is
// ledgered as in suite_jordan.
std::vector<Check> suite_psi(BaseRing R, int n, UsageLedger* ledger = nullptr);
// Differential conditions for every complex above, plus object invariants.
std::vector<Check> suite_complexes(BaseRing R, int n, UsageLedger* ledger = nullptr);
// cone(r) on the twisted-coefficient complexes matches the r-deformed
// differentials: explicit inverse chain maps, both flavors.
std::vector<Check> suite_equivalence(BaseRing R, int n);
// The main comparison: interface chain maps, the contraction identities,
// the two homotopies, and the null-homotopy of r - N on the doubled tower.
std::vector<Check> suite_theorem(BaseRing R, int n);
// Recursion: the 1-variable shriek complex boxed against n-1 variables
// equals the direct n-variable build; flipped weights break it (char != 2).
std::vector<Check> suite_recursion(BaseRing R, int n);
// Everything, in order.
std::vector<Check> suite_nearby(BaseRing R, int n, UsageLedger* ledger = nullptr);

// Ledger accumulated by exactly the checks whose proofs lean on the
// unit-sum identity: tower validation and the two xi N identities.
UsageLedger usage_report(BaseRing R, int n);

}  // namespace parity
