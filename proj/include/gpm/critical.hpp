#pragma once

#include <optional>

#include "gpm/group.hpp"
#include "gpm/polymatroid.hpp"

namespace gpm {

// Coordinates where the tuple equals the factor identity.
Mask identity_support(const Tuple& h, const GroupProduct& g);

// |{(h_1..h_k) in H^k : I(h_1) cap ... cap I(h_k) = empty}| by enumeration
// with early exit on the running intersection.  Requires |H|^k <= budget.
Int crapo_rota_count(const Subgroup& h, int k, double budget = 1e8);

struct CrapoRotaReport {
  int k = 0;
  std::optional<Int> lhs;  // enumeration side; absent when over budget
  Rat rhs = 0;             // chi_P(b^k)
  bool match = false;
  bool brute_force_skipped = false;  // over budget: only the two chi routes compared
};

CrapoRotaReport verify_crapo_rota(const Subgroup& h, Base b, int k, double budget = 1e8);

}  // namespace gpm
