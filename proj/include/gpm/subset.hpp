#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gpm {

// Subsets of a ground set {1..n} are bitmasks with bit i-1 for element i.
// Mask order (0,1,2,...) is colex order on subsets.
using Mask = std::uint32_t;

inline int popcount(Mask s) { return __builtin_popcount(s); }

inline Mask full_mask(int n) { return n >= 32 ? ~Mask(0) : ((Mask(1) << n) - 1); }

inline bool subset_of(Mask s, Mask t) { return (s & ~t) == 0; }

inline std::vector<int> bits_of(Mask s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

// 1-based element list, for reports.
inline std::vector<int> elements_of(Mask s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i + 1);
  return out;
}

inline std::string mask_to_string(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

// Iterate submasks of t (including 0 and t): for (Mask s = t;; s = (s-1) & t) ... break after s==0.
template <typename F>
void for_each_submask(Mask t, F&& f) {
  Mask s = t;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & t;
  }
}

}  // namespace gpm
