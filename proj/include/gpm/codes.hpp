#pragma once

#include <vector>

#include "gpm/group.hpp"
#include "gpm/polymatroid.hpp"
#include "gpm/reptheory.hpp"

namespace gpm {

// W(t) = sum c_j t^j with exact integer coefficients.
struct WeightEnumerator {
  std::vector<Int> c;  // degree 0..n
  Rat eval(const Rat& t) const;
  double eval_real(double t) const;
  Int total() const;  // W(1)
};

// Weights count non-identity coordinates.  Requires all factors equal.
WeightEnumerator weight_enumerator(const Subgroup& h);

// Dual enumerator from the order-based triv distribution:
// coefficient of t^j is sum over |S| = n-j of d(S).
WeightEnumerator dual_weight_enumerator(const Subgroup& h);

struct GreenePoint {
  long a = 0;
  Rat t;
  Rat lhs, rhs;
  bool match = false;
};

struct GreeneReport {
  std::vector<GreenePoint> exact_points;
  int float_samples = 0;
  double max_rel_err = 0.0;
  bool exact_ok = false;
  bool float_ok = false;
  bool ok() const { return exact_ok && float_ok; }
};

// Exact checks at t = q^{a-1}/(1+q^{a-1}) plus float sampling in (0.05,0.95).
GreeneReport greene_check(const Subgroup& h, const std::vector<long>& a_values,
                          int float_samples = 20, unsigned long seed = 1);

// Mirror identity for the dual enumerator, exact at t = q^a/(1+q^a).
GreeneReport dual_greene_check(const Subgroup& h, const std::vector<long>& a_values,
                               int float_samples = 20, unsigned long seed = 1);

struct MacWilliamsReport {
  std::vector<Int> lhs;  // |H| * W_R coefficients
  std::vector<Int> rhs;  // sum_h (1-t)^w (1+(q-1)t)^{n-w} coefficients
  bool match = false;
  int first_mismatch_degree = -1;
};

MacWilliamsReport macwilliams_check(const Subgroup& h);

// (1+(q-1)t)^n W((1-t)/(1+(q-1)t)) expanded over the integers.
std::vector<Int> macwilliams_transform(const std::vector<Int>& w, long q);

}  // namespace gpm
