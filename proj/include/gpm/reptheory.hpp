#pragma once

#include <optional>
#include <vector>

#include "gpm/chartable.hpp"
#include "gpm/group.hpp"
#include "gpm/polymatroid.hpp"

namespace gpm {

struct SpectrumEntry {
  std::vector<int> irrep;  // irreducible index per factor (0 = trivial)
  Int dim = 1;
  Mask triv = 0;  // coordinates whose tensor factor is trivial
  Int mult = 0;
};

// The multiset R(H): irreducibles of the product appearing in the
// representation induced from the trivial representation of H.
struct RSpectrum {
  int n = 0;
  std::vector<SpectrumEntry> entries;  // mult > 0 only, lexicographic by irrep
  Int total_dim = 0;                   // sum mult*dim = |G|/|H|
};

// Character tables with a shared zeta order (lcm of factor exponents).
std::vector<CharacterTable> factor_tables(const GroupProduct& g);

// Frobenius multiplicities: mult(rho) = (1/|H|) sum_h prod_x chi_{rho_x}(h_x),
// asserted to be a nonnegative rational integer.
RSpectrum r_spectrum(const Subgroup& h, const std::vector<CharacterTable>& tables);
RSpectrum r_spectrum(const Subgroup& h);

// |G_{E-S}| / |H_{E-S}|, the order-based aggregate (no character tables).
Int aggregate_dimension(const Subgroup& h, Mask s);

// d(S) = sum of mult*dim over spectrum entries with triv exactly S, computed
// from aggregate_dimension by Moebius inversion over supersets.
std::vector<Int> exact_triv_distribution(const Subgroup& h);

// Same grouping read off an explicit spectrum.
std::vector<Int> triv_distribution_of(const RSpectrum& spec);

struct DualCrapoRotaReport {
  int k = 0;
  Int lhs = 0;  // sum over k-tuples with empty triv intersection of prod(mult*dim)
  Rat rhs = 0;  // chi_{P*}(b^k)
  bool match = false;
};

DualCrapoRotaReport dual_crapo_rota(const Subgroup& h, int k);

// m with r_R(S) = log_b m: (sum mult*dim) / (sum_{S subset triv} mult*dim).
Rat rank_from_spectrum(const RSpectrum& spec, Mask s);

// Abstract representation given by (triv set, dim) entries; rank_from_spectrum
// on these need not be submodular.
struct RRSubmodularityFixture {
  RSpectrum spectrum;            // three entries on a 3-element ground set
  Mask s12 = 0b011, s23 = 0b110, s123 = 0b111, s2 = 0b010;
  Rat lhs_product;               // m(s12) * m(s23) = 9/4
  Rat rhs_product;               // m(s123) * m(s2) = 9/3
  bool violates = false;         // lhs < rhs, so log lhs < log rhs
};

RRSubmodularityFixture submodularity_counterexample_rR(int cyclic_order = 2);

// For all factors equal and abelian: the subgroup H' with P(H') = P(H)^{*a},
// via the canonical pairing on the cyclic decomposition.
Subgroup abelian_dual_subgroup(const Subgroup& h);

}  // namespace gpm
