#include "gpm/reptheory.hpp"

#include <algorithm>
#include <numeric>

#include "gpm/errors.hpp"

namespace gpm {

std::vector<CharacterTable> factor_tables(const GroupProduct& g) {
  long e = 1;
  for (int i = 0; i < g.arity(); ++i) e = lcm_long(e, g.factor(i).exponent());
  std::vector<CharacterTable> tables;
  for (int i = 0; i < g.arity(); ++i)
    tables.push_back(character_table(g.factor_ptr(i), (int)e));
  return tables;
}

RSpectrum r_spectrum(const Subgroup& h, const std::vector<CharacterTable>& tables) {
  const GroupProduct& g = h.parent();
  int n = g.arity();
  if ((int)tables.size() != n) throw domain_error("need one character table per factor");
  for (int i = 0; i < n; ++i) {
    if (!tables[i].group->same_table(g.factor(i)))
      throw domain_error("character table does not match factor " + std::to_string(i + 1));
    if (tables[i].zeta_order != tables[0].zeta_order)
      throw domain_error("factor tables must share one zeta order");
  }
  int e = tables.empty() ? 1 : tables[0].zeta_order;

  RSpectrum spec;
  spec.n = n;
  std::vector<int> irrep(n, 0);
  Int order_h((long)h.size());
  while (true) {
    // mult = (1/|H|) sum_h prod_x chi(h_x)
    Cyclotomic acc(e, Int(0));
    for (const auto& t : h.elements()) {
      Cyclotomic prod(e, Int(1));
      for (int x = 0; x < n; ++x) prod *= tables[x].value(irrep[x], t[x]);
      acc += prod;
    }
    if (!acc.is_rational_integer())
      throw consistency_error("non-integer multiplicity; character table is bad");
    Int total = acc.to_integer();
    Int mult, rem;
    mpz_fdiv_qr(mult.get_mpz_t(), rem.get_mpz_t(), total.get_mpz_t(),
                order_h.get_mpz_t());
    if (rem != 0 || mult < 0)
      throw consistency_error("multiplicity is not a nonnegative integer");
    if (mult > 0) {
      SpectrumEntry entry;
      entry.irrep = irrep;
      entry.mult = mult;
      entry.dim = 1;
      for (int x = 0; x < n; ++x) {
        entry.dim *= tables[x].dims[irrep[x]];
        if (irrep[x] == 0) entry.triv |= Mask(1) << x;
      }
      spec.total_dim += entry.mult * entry.dim;
      spec.entries.push_back(std::move(entry));
    }
    int i = n - 1;
    while (i >= 0) {
      if (++irrep[i] < tables[i].irrep_count()) break;
      irrep[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  Int expected = g.order() / Int((long)h.size());
  if (spec.total_dim != expected)
    throw consistency_error("spectrum dimension != |G|/|H|");
  return spec;
}

RSpectrum r_spectrum(const Subgroup& h) {
  return r_spectrum(h, factor_tables(h.parent()));
}

Int aggregate_dimension(const Subgroup& h, Mask s) {
  Mask rest = full_mask(h.parent().arity()) & ~s;
  Int g_order = h.parent().order_of_subset(rest);
  Int h_order((long)project(h, rest).size());
  return g_order / h_order;
}

std::vector<Int> exact_triv_distribution(const Subgroup& h) {
  int n = h.parent().arity();
  size_t total = size_t(1) << n;
  std::vector<Int> d(total);
  for (Mask s = 0; s < (Mask)total; ++s) d[s] = aggregate_dimension(h, s);
  // superset Moebius inversion: d(S) = sum_{T >= S} (-1)^{|T-S|} N(T)
  for (int bit = 0; bit < n; ++bit)
    for (Mask s = 0; s < (Mask)total; ++s)
      if (!(s & (Mask(1) << bit))) d[s] -= d[s | (Mask(1) << bit)];
  for (Mask s = 0; s < (Mask)total; ++s)
    if (d[s] < 0) throw consistency_error("negative triv distribution entry");
  return d;
}

std::vector<Int> triv_distribution_of(const RSpectrum& spec) {
  std::vector<Int> d(size_t(1) << spec.n, Int(0));
  for (const auto& e : spec.entries) d[e.triv] += e.mult * e.dim;
  return d;
}

DualCrapoRotaReport dual_crapo_rota(const Subgroup& h, int k) {
  if (k < 1) throw domain_error("k must be >= 1");
  DualCrapoRotaReport rep;
  rep.k = k;
  int n = h.parent().arity();
  size_t total = size_t(1) << n;
  // Moebius inversion of N(S)^k at the empty set
  Int lhs = 0;
  for (Mask s = 0; s < (Mask)total; ++s) {
    Int nk = int_pow(aggregate_dimension(h, s), (unsigned long)k);
    lhs += (popcount(s) % 2 == 0) ? nk : -nk;
  }
  rep.lhs = lhs;

  RankTable p = rank_table(h);
  RankTable dual = a_dual(p, AlphaVector::from_factor_orders(p));
  rep.rhs = eval_at_power(char_poly(dual), k);
  rep.match = Rat(rep.lhs) == rep.rhs;
  return rep;
}

Rat rank_from_spectrum(const RSpectrum& spec, Mask s) {
  Int total = 0, part = 0;
  for (const auto& e : spec.entries) {
    total += e.mult * e.dim;
    if (subset_of(s, e.triv)) part += e.mult * e.dim;
  }
  if (spec.entries.empty() || part == 0)
    throw domain_error("spectrum has no entry with the requested triv set");
  return Rat(total) / Rat(part);
}

RRSubmodularityFixture submodularity_counterexample_rR(int cyclic_order) {
  if (cyclic_order < 2) throw domain_error("need a nontrivial linear character");
  RRSubmodularityFixture fx;
  fx.spectrum.n = 3;
  // (1 x 1 x rho) + (1 x 1 x 1) + (rho x 1 x 1), rho nontrivial linear
  auto add = [&](std::vector<int> irrep, Mask triv) {
    SpectrumEntry e;
    e.irrep = std::move(irrep);
    e.dim = 1;
    e.mult = 1;
    e.triv = triv;
    fx.spectrum.entries.push_back(e);
    fx.spectrum.total_dim += 1;
  };
  add({0, 0, 1}, 0b011);
  add({0, 0, 0}, 0b111);
  add({1, 0, 0}, 0b110);
  fx.lhs_product = rank_from_spectrum(fx.spectrum, fx.s12) *
                   rank_from_spectrum(fx.spectrum, fx.s23);
  fx.rhs_product = rank_from_spectrum(fx.spectrum, fx.s123) *
                   rank_from_spectrum(fx.spectrum, fx.s2);
  fx.violates = fx.lhs_product < fx.rhs_product;
  return fx;
}

Subgroup abelian_dual_subgroup(const Subgroup& h) {
  const GroupProduct& g = h.parent();
  int n = g.arity();
  if (!g.homogeneous())
    throw capability_error("abelian duality needs all factors equal");
  const FiniteGroup& gamma = g.factor(0);
  if (!gamma.is_abelian())
    throw capability_error("polymatroid duality is closed only for abelian groups");
  std::vector<int> orders;
  using Fam = FiniteGroup::Family;
  if (gamma.family() == Fam::cyclic || gamma.family() == Fam::abelian_product)
    orders = gamma.params();
  else
    throw capability_error("abelian dual needs a cyclic or abelian-product factor");
  if (g.order() > 1000000) throw scale_error("dual search capped at |G| <= 10^6");

  int k = (int)orders.size();
  auto decode = [&](int idx) {
    std::vector<int> t(k);
    for (int i = k - 1; i >= 0; --i) {
      t[i] = idx % orders[i];
      idx /= orders[i];
    }
    return t;
  };
  // chi_g(h) = exp(2*pi*i * sum_{x,j} g_{x,j} h_{x,j} / n_j); the kernel
  // condition is integrality of the exponent sum.  Annihilating a generating
  // set suffices.
  const std::vector<Tuple>& gens =
      h.generators().empty() ? h.elements() : h.generators();
  std::vector<Tuple> dual_elems;
  Tuple t(n, 0);
  while (true) {
    bool annihilates = true;
    for (const auto& hh : gens) {
      Rat s = 0;
      for (int x = 0; x < n; ++x) {
        auto ta = decode(t[x]), tb = decode(hh[x]);
        for (int i = 0; i < k; ++i) s += Rat((long)ta[i] * tb[i]) / orders[i];
      }
      if (!is_integer(s)) {
        annihilates = false;
        break;
      }
    }
    if (annihilates) dual_elems.push_back(t);
    int i = n - 1;
    while (i >= 0) {
      if (++t[i] < gamma.order()) break;
      t[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return Subgroup(g, std::move(dual_elems));
}

}  // namespace gpm
