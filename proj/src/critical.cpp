#include "gpm/critical.hpp"

#include <cmath>
#include <functional>

#include "gpm/errors.hpp"

namespace gpm {

Mask identity_support(const Tuple& h, const GroupProduct& g) {
  if (!g.valid_tuple(h)) throw domain_error("invalid tuple");
  Mask s = 0;
  for (int i = 0; i < g.arity(); ++i)
    if (h[i] == g.factor(i).identity()) s |= Mask(1) << i;
  return s;
}

Int crapo_rota_count(const Subgroup& h, int k, double budget) {
  if (k < 1) throw domain_error("k must be >= 1");
  double size = std::pow((double)h.size(), k);
  if (size > budget) throw scale_error("|H|^k exceeds the enumeration budget");

  std::vector<Mask> supports;
  supports.reserve(h.size());
  for (const auto& t : h.elements()) supports.push_back(identity_support(t, h.parent()));

  Int total = 0;
  Int hsize((long)h.size());
  // depth-first over tuple positions; once the running intersection is empty,
  // every completion counts
  std::function<void(int, Mask)> go = [&](int depth, Mask inter) {
    if (inter == 0) {
      total += int_pow(hsize, k - depth);
      return;
    }
    if (depth == k) return;
    for (Mask s : supports) go(depth + 1, inter & s);
  };
  go(0, full_mask(h.parent().arity()));
  return total;
}

CrapoRotaReport verify_crapo_rota(const Subgroup& h, Base b, int k, double budget) {
  CrapoRotaReport rep;
  rep.k = k;
  RankTable p = rank_table(h, b);
  LogPolynomial chi = char_poly(p);
  rep.rhs = eval_at_power(chi, k);
  double size = std::pow((double)h.size(), k);
  if (size > budget) {
    rep.brute_force_skipped = true;
    rep.match = eval_at_power(char_poly_mobius(p), k) == rep.rhs;
    return rep;
  }
  rep.lhs = crapo_rota_count(h, k, budget);
  rep.match = Rat(*rep.lhs) == rep.rhs;
  return rep;
}

}  // namespace gpm
