#include "gpm/polymatroid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "gpm/errors.hpp"

namespace gpm {

namespace {

// base value for the group_order marker: |Gamma| when homogeneous, else 0
Rat resolve_group_order(const std::vector<int>& factor_orders) {
  if (factor_orders.empty()) return 0;
  for (int o : factor_orders)
    if (o != factor_orders[0]) return 0;
  return factor_orders[0];
}

Base make_base(Base requested, const std::vector<int>& factor_orders) {
  if (requested.kind == Base::Kind::rational) {
    if (!(requested.value > 1)) throw domain_error("base must be a rational > 1");
    return requested;
  }
  return Base::group_order(resolve_group_order(factor_orders));
}

std::vector<Rat> count_projections(const GroupProduct& parent,
                                   const std::vector<Tuple>& elements, int n) {
  size_t total = size_t(1) << n;
  std::vector<Rat> card(total);
  for (Mask s = 0; s < (Mask)total; ++s) {
    auto bits = bits_of(s);
    std::set<Tuple> proj;
    Tuple p(bits.size());
    for (const auto& t : elements) {
      for (size_t i = 0; i < bits.size(); ++i) p[i] = t[bits[i]];
      proj.insert(p);
    }
    card[s] = (long)proj.size();
  }
  (void)parent;
  return card;
}

// exact exponent r with b^r = c, as a rational with denominator <= 24
std::optional<Rat> rational_log(const Rat& b, const Rat& c) {
  if (c == 1) return Rat(0);
  double approx = std::log(c.get_d()) / std::log(b.get_d());
  for (long v = 1; v <= 24; ++v) {
    long u = std::lround(approx * (double)v);
    if (u < 0) continue;
    if (rat_pow(b, u) == rat_pow(c, v)) return Rat(u) / v;
  }
  return std::nullopt;
}

// exact b^{u/v} as a rational if one exists
std::optional<Rat> rational_pow(const Rat& b, const Rat& e) {
  long u = (long)e.get_num().get_si();
  unsigned long v = e.get_den().get_ui();
  Rat p = rat_pow(b, u);
  if (v == 1) return p;
  Int rn, rd;
  if (!mpz_root(rn.get_mpz_t(), p.get_num().get_mpz_t(), v)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), p.get_den().get_mpz_t(), v)) return std::nullopt;
  return Rat(rn) / Rat(rd);
}

}  // namespace

double RankTable::rank_real(Mask s) const {
  if (!base.resolved()) throw capability_error("rank display needs a resolved base");
  return std::log(card[s].get_d()) / std::log(base.value.get_d());
}

bool RankTable::has_loop() const {
  for (int x = 0; x < n; ++x)
    if (card[Mask(1) << x] == 1) return true;
  return false;
}

std::string LogPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, m] : terms) {
    Int ac = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string coeff = ac == 1 ? "" : ac.get_str() + "*";
    long j;
    if (m == 1) {
      out << (coeff.empty() ? "1" : ac.get_str());
    } else if (base.resolved() && log_exact(base.value, m, j)) {
      out << coeff << "t" << (j == 1 ? "" : "^" + std::to_string(j));
    } else {
      std::string bs = base.resolved() ? base.value.get_str() : "b";
      out << coeff << "t^log_" << bs << "(" << m.get_str() << ")";
    }
  }
  return out.str();
}

AlphaVector AlphaVector::from_factor_orders(const RankTable& p) {
  if ((int)p.factor_orders.size() != p.n)
    throw domain_error("rank table has no factor-order provenance");
  AlphaVector a;
  for (int o : p.factor_orders) a.A.emplace_back(o);
  return a;
}

AlphaVector AlphaVector::uniform(int n, Int v) {
  AlphaVector a;
  a.A.assign(n, v);
  return a;
}

RankTable rank_table(const Subgroup& h, Base b) {
  int n = h.parent().arity();
  if (n > 20) throw scale_error("rank table capped at 20 coordinates");
  RankTable p;
  p.n = n;
  for (int i = 0; i < n; ++i) p.factor_orders.push_back(h.parent().factor(i).order());
  p.base = make_base(b, p.factor_orders);
  p.card = count_projections(h.parent(), h.elements(), n);
  p.validated = true;
  return p;
}

RankTable rank_table_from_subset(const RawSubset& l, Base b) {
  if (l.elements.empty()) throw domain_error("raw subset must be nonempty");
  int n = l.parent.arity();
  if (n > 20) throw scale_error("rank table capped at 20 coordinates");
  std::vector<Tuple> elems = l.elements;
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
    throw validation_error("raw subset has repeated tuples");
  RankTable p;
  p.n = n;
  for (int i = 0; i < n; ++i) p.factor_orders.push_back(l.parent.factor(i).order());
  p.base = make_base(b, p.factor_orders);
  p.card = count_projections(l.parent, elems, n);
  p.validated = false;
  return p;
}

RankTable rank_table_from_ranks(int n, const std::vector<int>& rank, const Rat& base) {
  if ((size_t)(1u << n) != rank.size()) throw domain_error("rank vector size mismatch");
  RankTable p;
  p.n = n;
  p.base = Base::rational(base);
  p.card.resize(rank.size());
  for (size_t s = 0; s < rank.size(); ++s) {
    if (rank[s] < 0) throw domain_error("negative rank");
    p.card[s] = rat_pow(base, rank[s]);
  }
  return p;
}

AxiomReport check_axioms(const RankTable& p) {
  AxiomReport r;
  size_t total = size_t(1) << p.n;
  r.p1 = p.card[0] == 1;

  r.p2 = true;
  for (Mask s = 0; s < total && r.p2; ++s)
    for (int x = 0; x < p.n; ++x) {
      if (s & (Mask(1) << x)) continue;
      if (p.card[s | (Mask(1) << x)] < p.card[s]) {
        r.p2 = false;
        r.p2_fail = {s, x + 1};
        break;
      }
    }

  r.p3 = true;
  if (p.n <= 12) {
    for (Mask s = 0; s < total && r.p3; ++s)
      for (Mask t = 0; t < total; ++t) {
        if (p.card[s] * p.card[t] < p.card[s | t] * p.card[s & t]) {
          r.p3 = false;
          r.p3_fail = {s, t};
          break;
        }
      }
  } else {
    // local exchange form, equivalent to P3
    for (Mask s = 0; s < total && r.p3; ++s)
      for (int x = 0; x < p.n && r.p3; ++x)
        for (int y = x + 1; y < p.n; ++y) {
          Mask bx = Mask(1) << x, by = Mask(1) << y;
          if ((s & bx) || (s & by)) continue;
          if (p.card[s | bx] * p.card[s | by] < p.card[s | bx | by] * p.card[s]) {
            r.p3 = false;
            r.p3_fail = {s | bx, s | by};
            break;
          }
        }
  }

  r.p3_prime = true;
  if (p.n <= 16) {
    for (Mask t = 0; t < total && r.p3_prime; ++t) {
      bool done = false;
      for_each_submask(t, [&](Mask s) {
        if (done) return;
        for (int x = 0; x < p.n; ++x) {
          if (t & (Mask(1) << x)) continue;
          Mask bx = Mask(1) << x;
          if (p.card[s | bx] * p.card[t] < p.card[t | bx] * p.card[s]) {
            r.p3_prime = false;
            r.p3p_fail = AxiomReport::P3Prime{s, t, x + 1};
            done = true;
            return;
          }
        }
      });
    }
  } else {
    r.p3_prime = r.p3;
  }

  if (p.base.resolved()) {
    bool sub = true, intval = true;
    for (Mask s = 0; s < total; ++s) {
      if (p.card[s] > rat_pow(p.base.value, popcount(s))) sub = false;
      long j;
      if (!log_exact(p.base.value, p.card[s], j) || j < 0) intval = false;
    }
    r.subcardinal = sub;
    r.integer_valued = intval;
  }
  return r;
}

std::vector<Mask> flats(const RankTable& p) {
  std::vector<Mask> out;
  size_t total = size_t(1) << p.n;
  for (Mask s = 0; s < total; ++s) {
    bool flat = true;
    for (int x = 0; x < p.n && flat; ++x) {
      if (s & (Mask(1) << x)) continue;
      if (!(p.card[s | (Mask(1) << x)] > p.card[s])) flat = false;
    }
    if (flat) out.push_back(s);
  }
  return out;
}

std::map<std::pair<Mask, Mask>, Int> mobius(const RankTable& p) {
  auto fl = flats(p);
  std::map<std::pair<Mask, Mask>, Int> mu;
  // process upper flats in colex (hence inclusion-compatible) order
  for (size_t bi = 0; bi < fl.size(); ++bi) {
    for (size_t ti = 0; ti <= bi; ++ti) {
      Mask f = fl[ti], g = fl[bi];
      if (!subset_of(f, g)) continue;
      if (f == g) {
        mu[{f, g}] = 1;
        continue;
      }
      Int acc = 0;
      for (size_t mi = ti; mi < bi; ++mi) {
        Mask m = fl[mi];
        if (subset_of(f, m) && subset_of(m, g)) acc += mu[{f, m}];
      }
      mu[{f, g}] = -acc;
    }
  }
  return mu;
}

namespace {

LogPolynomial finish_logpoly(std::map<Rat, Int>& acc, const Base& base) {
  LogPolynomial f;
  f.base = base;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) f.terms.emplace_back(it->second, it->first);
  return f;
}

}  // namespace

LogPolynomial char_poly(const RankTable& p) {
  LogPolynomial zero;
  zero.base = p.base;
  if (p.has_loop()) return zero;
  std::map<Rat, Int> acc;
  size_t total = size_t(1) << p.n;
  const Rat& top = p.card[total - 1];
  for (Mask s = 0; s < total; ++s)
    acc[top / p.card[s]] += (popcount(s) % 2 == 0) ? 1 : -1;
  return finish_logpoly(acc, p.base);
}

LogPolynomial char_poly_mobius(const RankTable& p) {
  LogPolynomial zero;
  zero.base = p.base;
  if (p.has_loop()) return zero;
  auto mu = mobius(p);
  auto fl = flats(p);
  const Rat& top = p.card[(size_t(1) << p.n) - 1];
  std::map<Rat, Int> acc;
  for (Mask f : fl) acc[top / p.card[f]] += mu[{0, f}];
  return finish_logpoly(acc, p.base);
}

Rat eval_at_power(const LogPolynomial& f, long k) {
  Rat out = 0;
  for (const auto& [c, m] : f.terms) out += Rat(c) * rat_pow(m, k);
  return out;
}

namespace {

RankTable reindexed(const RankTable& p, Mask keep,
                    const std::function<Rat(Mask)>& card_of_expanded) {
  auto bits = bits_of(keep);
  RankTable q;
  q.n = (int)bits.size();
  for (int b : bits)
    if (!p.factor_orders.empty()) q.factor_orders.push_back(p.factor_orders[b]);
  if (p.base.kind == Base::Kind::rational) {
    q.base = p.base;
  } else {
    q.base = Base::group_order(resolve_group_order(q.factor_orders));
    // a minor keeps the parent's resolved base when its own factors cannot
    // settle one (e.g. the empty minor)
    if (!q.base.resolved() && p.base.resolved()) q.base = p.base;
  }
  size_t total = size_t(1) << q.n;
  q.card.resize(total);
  for (Mask t = 0; t < total; ++t) {
    Mask expanded = 0;
    for (size_t i = 0; i < bits.size(); ++i)
      if (t & (Mask(1) << i)) expanded |= Mask(1) << bits[i];
    q.card[t] = card_of_expanded(expanded);
  }
  q.validated = p.validated;
  return q;
}

}  // namespace

RankTable delete_subset(const RankTable& p, Mask s) {
  if (!subset_of(s, p.full())) throw domain_error("subset outside ground set");
  return reindexed(p, p.full() & ~s, [&](Mask e) { return p.card[e]; });
}

RankTable contract_subset(const RankTable& p, Mask s) {
  if (!subset_of(s, p.full())) throw domain_error("subset outside ground set");
  return reindexed(p, p.full() & ~s, [&](Mask e) { return p.card[e | s] / p.card[s]; });
}

RankTable a_dual(const RankTable& p, const AlphaVector& a) {
  if ((int)a.A.size() != p.n) throw domain_error("alpha vector arity mismatch");
  for (int x = 0; x < p.n; ++x) {
    if (a.A[x] < 1) throw domain_error("alpha entries must be positive integers");
    if (p.card[Mask(1) << x] > Rat(a.A[x]))
      throw domain_error("not an a-polymatroid: card({" + std::to_string(x + 1) +
                         "}) exceeds A_" + std::to_string(x + 1));
  }
  RankTable q;
  q.n = p.n;
  q.base = p.base;
  q.factor_orders = p.factor_orders;
  size_t total = size_t(1) << p.n;
  q.card.resize(total);
  const Rat& top = p.card[total - 1];
  for (Mask s = 0; s < total; ++s) {
    Rat prod = 1;
    for (int x : bits_of(s)) prod *= Rat(a.A[x]);
    q.card[s] = p.card[(total - 1) & ~s] * prod / top;
  }
  q.validated = p.validated;
  return q;
}

TuttePoly tutte(const RankTable& p) {
  if (!p.base.resolved())
    throw capability_error("Tutte polynomial needs a resolved base");
  const Rat& b = p.base.value;
  std::map<std::pair<Rat, Rat>, Int> acc;
  size_t total = size_t(1) << p.n;
  const Rat& top = p.card[total - 1];
  for (Mask s = 0; s < total; ++s) {
    Rat m1 = top / p.card[s];
    Rat m2 = rat_pow(b, popcount(s)) / p.card[s];
    acc[{m1, m2}] += 1;
  }
  TuttePoly t;
  t.base = p.base;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0)
      t.terms.emplace_back(it->second, it->first.first, it->first.second);
  return t;
}

Rat tutte_eval_exact(const TuttePoly& t, long alpha, long beta) {
  Rat out = 0;
  for (const auto& [c, m1, m2] : t.terms)
    out += Rat(c) * rat_pow(m1, alpha) * rat_pow(m2, beta);
  return out;
}

double tutte_eval_real(const RankTable& p, double u, double v) {
  if (!p.base.resolved()) throw capability_error("needs a resolved base");
  double logb = std::log(p.base.value.get_d());
  size_t total = size_t(1) << p.n;
  double rtop = std::log(p.card[total - 1].get_d()) / logb;
  double out = 0;
  for (Mask s = 0; s < total; ++s) {
    double rs = std::log(p.card[s].get_d()) / logb;
    out += std::pow(u - 1.0, rtop - rs) * std::pow(v - 1.0, popcount(s) - rs);
  }
  return out;
}

GammaPossibleReport gamma_possible(const RankTable& p, const FiniteGroup& gamma,
                                   bool strong) {
  if (!p.base.resolved() || p.base.value != gamma.order())
    throw domain_error("gamma_possible requires the table base to equal |Gamma|");
  Int q = gamma.order();
  GammaPossibleReport rep;
  rep.possible = true;
  size_t total = size_t(1) << p.n;
  for (Mask s = 0; s < total; ++s) {
    const Rat& c = p.card[s];
    if (!is_integer(c) || !divides(c.get_num(), int_pow(q, popcount(s)))) {
      rep.possible = false;
      rep.failing_set = s;
      break;
    }
  }
  if (strong) {
    rep.strong_checked = true;
    rep.strong_possible = rep.possible;
    if (rep.possible) {
      for (Mask t = 0; t < total && rep.strong_possible; ++t) {
        bool done = false;
        for_each_submask(t, [&](Mask s) {
          if (done) return;
          Rat ratio = p.card[t] / p.card[s];
          if (!is_integer(ratio) ||
              !divides(ratio.get_num(), int_pow(q, popcount(t) - popcount(s)))) {
            rep.strong_possible = false;
            rep.strong_failing = {s, t};
            done = true;
          }
        });
      }
    }
  }
  return rep;
}

bool isomorphic(const RankTable& p, const RankTable& q, std::vector<int>* witness) {
  if (p.n != q.n) return false;
  size_t total = size_t(1) << p.n;
  if (p.card[total - 1] != q.card[total - 1]) return false;
  // perm[i] = coordinate of q matched to coordinate i of p
  std::vector<int> perm(p.n, -1);
  std::vector<bool> used(p.n, false);
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == p.n) {
      for (Mask s = 0; s < (Mask)total; ++s) {
        Mask t = 0;
        for (int x : bits_of(s)) t |= Mask(1) << perm[x];
        if (p.card[s] != q.card[t]) return false;
      }
      return true;
    }
    for (int j = 0; j < p.n; ++j) {
      if (used[j]) continue;
      if (p.card[Mask(1) << i] != q.card[Mask(1) << j]) continue;
      perm[i] = j;
      used[j] = true;
      if (go(i + 1)) return true;
      used[j] = false;
      perm[i] = -1;
    }
    return false;
  };
  if (!go(0)) return false;
  if (witness) *witness = perm;
  return true;
}

std::optional<RankTable> rebase(const RankTable& p, const Rat& new_base) {
  if (!p.base.resolved()) return std::nullopt;
  if (p.base.value == new_base) return p;
  RankTable q;
  q.n = p.n;
  q.base = Base::rational(new_base);
  q.card.resize(p.card.size());
  for (size_t s = 0; s < p.card.size(); ++s) {
    auto r = rational_log(p.base.value, p.card[s]);
    if (!r) return std::nullopt;
    auto c = rational_pow(new_base, *r);
    if (!c) return std::nullopt;
    q.card[s] = *c;
  }
  q.validated = p.validated;
  return q;
}

EquivalenceReport equivalent_realizations(const Subgroup& h, const Subgroup& h2,
                                          int gamma_cap, int n_cap) {
  const GroupProduct& g = h.parent();
  int n = g.arity();
  if (h2.parent().arity() != n) throw domain_error("coordinate counts differ");
  if (!g.homogeneous() || !h2.parent().homogeneous() ||
      !g.factor(0).same_table(h2.parent().factor(0)))
    throw capability_error("equivalence search requires subgroups of the same Gamma^n");
  if (g.factor(0).order() > gamma_cap || n > n_cap)
    throw scale_error("equivalence search capped at |Gamma| <= " +
                      std::to_string(gamma_cap) + ", n <= " + std::to_string(n_cap));
  if (h.size() != h2.size()) return {};

  auto auts = automorphisms(g.factor(0), gamma_cap);
  RankTable p1 = rank_table(h), p2 = rank_table(h2);

  // prefix projection multisets of h2, reused by every permutation
  std::vector<std::map<Tuple, int>> prefix(n);
  for (int i = 0; i < n; ++i)
    for (const auto& t : h2.elements())
      prefix[i][Tuple(t.begin(), t.begin() + i + 1)]++;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // rank-table compatibility of this coordinate relabeling
    bool ok = true;
    size_t total = size_t(1) << n;
    for (Mask s = 0; s < (Mask)total && ok; ++s) {
      Mask mapped = 0;
      for (int i : bits_of(s)) mapped |= Mask(1) << perm[i];
      ok = p1.card[mapped] == p2.card[s];
    }
    if (!ok) continue;

    std::vector<int> chosen(n, -1);
    std::function<bool(int)> pick = [&](int i) -> bool {
      if (i == n) return true;
      for (size_t ai = 0; ai < auts.size(); ++ai) {
        chosen[i] = (int)ai;
        std::map<Tuple, int> image;
        Tuple m(i + 1);
        for (const auto& t : h.elements()) {
          for (int c = 0; c <= i; ++c) m[c] = auts[chosen[c]][t[perm[c]]];
          image[m]++;
        }
        if (image == prefix[i] && pick(i + 1)) return true;
      }
      chosen[i] = -1;
      return false;
    };
    if (pick(0)) {
      EquivalenceWitness w;
      w.coord_perm = perm;
      for (int i = 0; i < n; ++i) w.coord_aut.push_back(auts[chosen[i]]);
      return {true, w};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {};
}

std::optional<Subgroup> representability_search(const RankTable& p, const GroupPtr& gamma,
                                                int n_max, long order_cap) {
  auto target = rebase(p, Rat(gamma->order()));
  if (!target) return std::nullopt;
  {
    GammaPossibleReport gp = gamma_possible(*target, *gamma);
    if (!gp.possible) return std::nullopt;
  }
  if (p.n > n_max || p.n < 1) return std::nullopt;
  Int size = int_pow(Int(gamma->order()), p.n);
  if (size > order_cap)
    throw scale_error("representability search capped at |Gamma|^n <= " +
                      std::to_string(order_cap));
  std::vector<GroupPtr> factors(p.n, gamma);
  GroupProduct g(factors);
  for (const auto& sub : enumerate_subgroups(g, order_cap)) {
    RankTable cand = rank_table(sub);
    if (isomorphic(*target, cand)) return sub;
  }
  return std::nullopt;
}

}  // namespace gpm
