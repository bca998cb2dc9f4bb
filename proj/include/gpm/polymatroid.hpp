#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpm/group.hpp"
#include "gpm/numeric.hpp"
#include "gpm/subset.hpp"

namespace gpm {

// The base b of the rank scale.  Ranks are kept multiplicatively: the table
// stores b^{r(S)} as an exact rational, so b itself is only needed for
// operations that mention b^{|S|} (Tutte, subcardinality).
struct Base {
  enum class Kind { group_order, rational };
  Kind kind = Kind::group_order;
  Rat value = 0;  // 0 = unresolved marker (heterogeneous product)

  static Base group_order(Rat v = 0) { return {Kind::group_order, std::move(v)}; }
  static Base rational(Rat v) { return {Kind::rational, std::move(v)}; }
  bool resolved() const { return value > 0; }
};

// The rank table of a polymatroid on ground set {1..n}: card(S) = b^{r(S)}.
// For P(H,b) this is the exact integer |H_S|.
struct RankTable {
  int n = 0;
  Base base;
  std::vector<int> factor_orders;  // |Gamma_x| per coordinate when subgroup-sourced
  std::vector<Rat> card;           // size 2^n, card[0] == 1
  bool validated = false;          // axioms guaranteed by provenance

  Mask full() const { return full_mask(n); }
  const Rat& card_of(Mask s) const { return card[s]; }
  double rank_real(Mask s) const;  // log_b card(S); requires resolved base
  bool has_loop() const;
};

// Sum of coeff * t^{log_b m}: pairs (coeff, m) with distinct m, zero
// coefficients removed, sorted by m descending.
struct LogPolynomial {
  std::vector<std::pair<Int, Rat>> terms;
  Base base;
  bool is_zero() const { return terms.empty(); }
  std::string to_string() const;
};

// Sum of coeff * (u-1)^{log_b m1} (v-1)^{log_b m2}.
struct TuttePoly {
  std::vector<std::tuple<Int, Rat, Rat>> terms;
  Base base;
};

// Capacity vector, encoded multiplicatively: a_x = log_b A_x.
struct AlphaVector {
  std::vector<Int> A;
  static AlphaVector from_factor_orders(const RankTable& p);
  static AlphaVector uniform(int n, Int A);
};

struct AxiomReport {
  bool p1 = false, p2 = false, p3 = false, p3_prime = false;
  std::optional<bool> subcardinal, integer_valued;
  // first counterexamples, when an axiom fails
  std::optional<std::pair<Mask, int>> p2_fail;   // (S, x): card(S+x) < card(S)
  std::optional<std::pair<Mask, Mask>> p3_fail;  // (S, T)
  struct P3Prime {
    Mask s, t;
    int x;
  };
  std::optional<P3Prime> p3p_fail;
  bool all_pass() const { return p1 && p2 && p3 && p3_prime; }
};

struct GammaPossibleReport {
  bool possible = false;
  std::optional<Mask> failing_set;
  bool strong_checked = false;
  bool strong_possible = false;
  std::optional<std::pair<Mask, Mask>> strong_failing;  // (S, T)
};

struct EquivalenceWitness {
  std::vector<int> coord_perm;              // new coordinate i takes old coord_perm[i]
  std::vector<std::vector<int>> coord_aut;  // automorphism applied per new coordinate
};

struct EquivalenceReport {
  bool equivalent = false;
  std::optional<EquivalenceWitness> witness;
};

RankTable rank_table(const Subgroup& h, Base b = Base::group_order());
RankTable rank_table_from_subset(const RawSubset& l, Base b = Base::group_order());

// An explicit table from integer ranks: card(S) = base^{rank(S)}.
RankTable rank_table_from_ranks(int n, const std::vector<int>& rank, const Rat& base);

AxiomReport check_axioms(const RankTable& p);

std::vector<Mask> flats(const RankTable& p);
std::map<std::pair<Mask, Mask>, Int> mobius(const RankTable& p);

LogPolynomial char_poly(const RankTable& p);         // subset sum; loop -> 0
LogPolynomial char_poly_mobius(const RankTable& p);  // flats/Moebius route
Rat eval_at_power(const LogPolynomial& f, long k);   // value at t = b^k

RankTable delete_subset(const RankTable& p, Mask s);
RankTable contract_subset(const RankTable& p, Mask s);

RankTable a_dual(const RankTable& p, const AlphaVector& a);

TuttePoly tutte(const RankTable& p);
Rat tutte_eval_exact(const TuttePoly& t, long alpha, long beta);  // u-1=b^a, v-1=b^b
double tutte_eval_real(const RankTable& p, double u, double v);

GammaPossibleReport gamma_possible(const RankTable& p, const FiniteGroup& gamma,
                                   bool strong = false);

// Rank-preserving ground-set bijection between two tables with equal bases.
bool isomorphic(const RankTable& p, const RankTable& q,
                std::vector<int>* witness = nullptr);

// Rewrites p's ranks over a new rational base (card'(S) = nb^{r(S)}), when all
// ranks are exactly expressible; nullopt otherwise.
std::optional<RankTable> rebase(const RankTable& p, const Rat& new_base);

EquivalenceReport equivalent_realizations(const Subgroup& h, const Subgroup& h2,
                                          int gamma_cap = 24, int n_cap = 5);

std::optional<Subgroup> representability_search(const RankTable& p, const GroupPtr& gamma,
                                                int n_max, long order_cap = 256);

// JSON (nlohmann) serialization lives in io.hpp.

}  // namespace gpm
