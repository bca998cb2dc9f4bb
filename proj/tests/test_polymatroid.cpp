#include <doctest.h>

#include <random>

#include "gpm/bundled.hpp"
#include "gpm/errors.hpp"
#include "gpm/polymatroid.hpp"
#include "support/random_subgroups.hpp"

using namespace gpm;

namespace {

Subgroup binary_row_space_example() {
  // rows of the first 3x6 binary matrix; rank 3 over GF(2)
  return bundled::binary_code_a();
}

}  // namespace

TEST_CASE("rank table of the s3 subgroup") {
  RankTable p = rank_table(bundled::s3_mixed());
  CHECK(p.n == 2);
  CHECK(p.base.resolved());
  CHECK(p.base.value == 6);
  CHECK(p.card[0b00] == 1);
  CHECK(p.card[0b01] == 2);
  CHECK(p.card[0b10] == 6);
  CHECK(p.card[0b11] == 6);
}

TEST_CASE("rank table edge cases") {
  GroupPtr z2 = cyclic_group(2);
  GroupProduct g({z2, z2, z2});
  RankTable p = rank_table(trivial_subgroup(g));
  for (const auto& c : p.card) CHECK(c == 1);
  CHECK(p.has_loop());

  // binary row space: rank by independent GF(2) elimination of the matrix
  int rows[3][6] = {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}};
  RankTable q = rank_table(binary_row_space_example());
  for (Mask s = 0; s < (Mask)(1 << 6); ++s) {
    auto cols = bits_of(s);
    int basis[6] = {0, 0, 0, 0, 0, 0};
    int rank = 0;
    for (int r = 0; r < 3; ++r) {
      int v = 0;
      for (size_t c = 0; c < cols.size(); ++c) v |= rows[r][cols[c]] << c;
      for (int bit = 5; bit >= 0 && v; --bit) {
        if (!((v >> bit) & 1)) continue;
        if (!basis[bit]) {
          basis[bit] = v;
          ++rank;
          v = 0;
        } else {
          v ^= basis[bit];
        }
      }
    }
    CHECK(q.card[s] == Rat(1 << rank));
  }
  CHECK(q.card[q.full()] == 8);
}

TEST_CASE("raw subsets need no axioms") {
  RankTable p = rank_table_from_subset(bundled::nonsubmodular_subset(), Base::group_order());
  CHECK_FALSE(p.validated);
  CHECK(p.card[0b011] == 3);
  CHECK(p.card[0b110] == 3);
  CHECK(p.card[0b111] == 5);
  CHECK(p.card[0b010] == 2);

  auto rep = check_axioms(p);
  CHECK(rep.p1);
  CHECK(rep.p2);
  CHECK_FALSE(rep.p3);
  CHECK_FALSE(rep.p3_prime);
  REQUIRE(rep.p3_fail.has_value());
  CHECK(rep.p3_fail->first == 0b011);
  CHECK(rep.p3_fail->second == 0b110);

  // a subgroup's elements as a raw subset pass all axioms
  RawSubset raw{bundled::s3_mixed().parent(), bundled::s3_mixed().elements()};
  CHECK(check_axioms(rank_table_from_subset(raw, Base::group_order())).all_pass());

  // singleton identity: all ranks zero
  GroupPtr z2 = cyclic_group(2);
  GroupProduct g({z2, z2});
  RawSubset single{g, {{0, 0}}};
  RankTable sp = rank_table_from_subset(single, Base::group_order());
  for (const auto& c : sp.card) CHECK(c == 1);
}

TEST_CASE("uniform matroid axioms") {
  RankTable u23 = bundled::uniform_table(2, 3, 2);
  auto rep = check_axioms(u23);
  CHECK(rep.all_pass());
  REQUIRE(rep.subcardinal.has_value());
  CHECK(*rep.subcardinal);
  CHECK(*rep.integer_valued);
}

TEST_CASE("flats and mobius of the dual") {
  RankTable p = rank_table(bundled::s3_mixed());
  RankTable dual = a_dual(p, AlphaVector::from_factor_orders(p));
  CHECK(flats(dual) == std::vector<Mask>{0b00, 0b10, 0b11});
  auto mu = mobius(dual);
  CHECK(mu[{0b00, 0b00}] == 1);
  CHECK(mu[{0b00, 0b10}] == -1);
  CHECK(mu[{0b00, 0b11}] == 0);

  // boolean lattice: full product
  Subgroup full = full_subgroup(bundled::s3_pair().restricted(0b11));
  RankTable fp = rank_table(full);
  auto ffl = flats(fp);
  CHECK(ffl.size() == 4);
  auto fmu = mobius(fp);
  CHECK(fmu[{0b00, 0b11}] == 1);
  CHECK(fmu[{0b00, 0b01}] == -1);

  // with a loop, the empty set is not a flat
  GroupPtr z2 = cyclic_group(2);
  RankTable lp = rank_table(trivial_subgroup(GroupProduct({z2})));
  CHECK(flats(lp) == std::vector<Mask>{0b1});
}

TEST_CASE("characteristic polynomial, two routes") {
  RankTable p = rank_table(bundled::s3_mixed());
  LogPolynomial direct = char_poly(p);
  LogPolynomial via_mobius = char_poly_mobius(p);
  CHECK(direct.terms == via_mobius.terms);
  REQUIRE(direct.terms.size() == 2);
  CHECK(direct.terms[0] == std::make_pair(Int(1), Rat(6)));
  CHECK(direct.terms[1] == std::make_pair(Int(-1), Rat(3)));
  CHECK(direct.to_string() == "t - t^log_6(3)");

  RankTable dual = a_dual(p, AlphaVector::from_factor_orders(p));
  LogPolynomial chid = char_poly(dual);
  CHECK(chid.terms == char_poly_mobius(dual).terms);
  CHECK(chid.terms == direct.terms);

  GroupPtr z2 = cyclic_group(2);
  RankTable lp = rank_table(trivial_subgroup(GroupProduct({z2, z2})));
  CHECK(char_poly(lp).is_zero());
}

TEST_CASE("evaluation at powers of the base") {
  RankTable p = rank_table(bundled::s3_mixed());
  LogPolynomial chi = char_poly(p);
  CHECK(eval_at_power(chi, 1) == 3);
  CHECK(eval_at_power(chi, 2) == 27);  // 36 - 9
  CHECK(eval_at_power(chi, 0) == 0);
  CHECK(eval_at_power(chi, -1) == Rat(1, 6) - Rat(1, 3));
}

TEST_CASE("deletion and contraction agree with projections and kernels") {
  Subgroup h = bundled::s3_mixed();
  RankTable p = rank_table(h);
  for (Mask s : {Mask(0b01), Mask(0b10)}) {
    CHECK(delete_subset(p, s).card == rank_table(project(h, p.full() & ~s)).card);
    CHECK(contract_subset(p, s).card == rank_table(kernel_contract(h, s)).card);
  }
  CHECK(contract_subset(p, 0).card == p.card);
}

TEST_CASE("a-duality") {
  RankTable p = rank_table(bundled::s3_mixed());
  AlphaVector a = AlphaVector::from_factor_orders(p);
  RankTable dual = a_dual(p, a);
  CHECK(dual.card[0b00] == 1);
  CHECK(dual.card[0b01] == 6);  // r*({1}) = 1
  CHECK(dual.card[0b10] == 2);  // r*({2}) = log_6 2
  CHECK(dual.card[0b11] == 6);

  // involution
  CHECK(a_dual(dual, a).card == p.card);

  // r*(E): card*(E) = prod A / card(E)
  CHECK(dual.card[0b11] == Rat(36) / p.card[0b11]);

  // uniform: U_{1,3} dual over A=(2,2,2) is U_{2,3}
  RankTable u13 = bundled::uniform_table(1, 3, 2);
  RankTable u23 = bundled::uniform_table(2, 3, 2);
  CHECK(a_dual(u13, AlphaVector::uniform(3, 2)).card == u23.card);

  // precondition violation
  GroupPtr z6 = cyclic_group(6);
  RankTable q = rank_table(full_subgroup(GroupProduct({z6})));
  AlphaVector small = AlphaVector::uniform(1, 2);
  CHECK_THROWS_AS(a_dual(q, small), domain_error);
}

TEST_CASE("minors of duals (dual of deletion is contraction)") {
  std::mt19937_64 rng(11);
  for (const auto& h : testsupport::random_subgroups(12, rng, 72)) {
    RankTable p = rank_table(h);
    AlphaVector a = AlphaVector::from_factor_orders(p);
    RankTable dual = a_dual(p, a);
    for (Mask s = 0; s < (Mask)(size_t(1) << p.n); ++s) {
      if (s == (Mask)((size_t(1) << p.n) - 1)) continue;
      auto keep = p.full() & ~s;
      AlphaVector restricted;
      for (int x : bits_of(keep)) restricted.A.push_back(a.A[x]);
      // (P*_a \ S)*_a = P/S and (P*_a / S)*_a = P \ S
      CHECK(a_dual(delete_subset(dual, s), restricted).card == contract_subset(p, s).card);
      CHECK(a_dual(contract_subset(dual, s), restricted).card == delete_subset(p, s).card);
    }
  }
}

TEST_CASE("tutte polynomial") {
  RankTable p = rank_table(bundled::s3_mixed());
  TuttePoly t = tutte(p);
  // (alpha, beta) = (1, 0): sum over S of card(E)/card(S) = 6 + 3 + 1 + 1
  CHECK(tutte_eval_exact(t, 1, 0) == 11);

  // empty ground set: T = 1
  GroupPtr z2 = cyclic_group(2);
  Subgroup h = full_subgroup(GroupProduct({z2}));
  RankTable single = rank_table(h);
  TuttePoly t1 = tutte(single);
  CHECK(tutte_eval_exact(t1, 0, 0) == 2);  // coloop: u at u=2
  RankTable empty = delete_subset(single, 0b1);
  CHECK(empty.n == 0);
  // empty table has unresolved group_order base; give it one
  empty.base = Base::rational(2);
  CHECK(tutte_eval_exact(tutte(empty), 1, 1) == 1);
}

TEST_CASE("tutte recursion at exact points") {
  std::mt19937_64 rng(5);
  auto subgroups = testsupport::random_subgroups(10, rng, 64);
  for (const auto& h : subgroups) {
    RankTable p = rank_table(h);
    if (!p.base.resolved() || p.n < 1) continue;
    Rat b = p.base.value;
    TuttePoly tp = tutte(p);
    for (auto [alpha, beta] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {2, 1}}) {
      for (int x = 0; x < p.n; ++x) {
        Mask bx = Mask(1) << x;
        RankTable del = delete_subset(p, bx);
        RankTable con = contract_subset(p, bx);
        // (u-1)^{r(E)-r(E-x)} T(del) + (v-1)^{1-r({x})} T(con)
        Rat factor_del_base = p.card[p.full()] / p.card[p.full() & ~bx];
        Rat factor_con_base = b / p.card[bx];
        Rat lhs = tutte_eval_exact(tp, alpha, beta);
        Rat rhs = rat_pow(factor_del_base, alpha) * tutte_eval_exact(tutte(del), alpha, beta) +
                  rat_pow(factor_con_base, beta) * tutte_eval_exact(tutte(con), alpha, beta);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("coloop factor multiplies the tutte polynomial by u") {
  // append a free Z/2 coordinate to the binary code: a coloop
  GroupPtr z2 = cyclic_group(2);
  GroupProduct g7(std::vector<GroupPtr>(7, z2));
  Subgroup code = bundled::binary_code_a();
  std::vector<Tuple> gens;
  for (const auto& t : code.generators()) {
    Tuple t7 = t;
    t7.push_back(0);
    gens.push_back(t7);
  }
  gens.push_back(Tuple{0, 0, 0, 0, 0, 0, 1});
  Subgroup h = subgroup_closure(g7, gens);
  RankTable p = rank_table(h);
  TuttePoly tp = tutte(p);
  TuttePoly td = tutte(delete_subset(p, Mask(1) << 6));
  for (auto [alpha, beta] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {2, 1}}) {
    Rat u = rat_pow(Rat(2), alpha) + 1;
    CHECK(tutte_eval_exact(tp, alpha, beta) == u * tutte_eval_exact(td, alpha, beta));
  }
}

TEST_CASE("gamma possible") {
  GroupPtr z6 = cyclic_group(6);
  Subgroup h = bundled::z6_cube();
  RankTable p = rank_table(h);
  auto rep = gamma_possible(p, *z6);
  CHECK(rep.possible);
  auto strong = gamma_possible(p, *z6, true);
  CHECK(strong.strong_checked);
  CHECK(strong.strong_possible);

  // half-integer ranks over Z/4 are possible: card singleton 2 divides 4
  GroupPtr z4 = cyclic_group(4);
  auto half = bundled::half_rank_table();
  CHECK(gamma_possible(half, *z4).possible);

  // ... but not over Z/6: 6^{1/2} is not an integer, so no such table exists;
  // a table with card 5 fails divisibility instead
  RankTable bad = bundled::uniform_table(1, 2, 2);
  bad.card[0b01] = 5;
  bad.base = Base::rational(2);
  auto rep2 = gamma_possible(bad, *cyclic_group(2));
  CHECK_FALSE(rep2.possible);
  CHECK(*rep2.failing_set == 0b01);

  // possible in the plain sense yet failing the contraction-closure reading:
  // card(E)/card({1}) = 4 does not divide 6 (needs a non-prime-power order)
  RankTable edge;
  edge.n = 2;
  edge.base = Base::rational(6);
  edge.card = {Rat(1), Rat(3), Rat(6), Rat(12)};
  CHECK(check_axioms(edge).all_pass());
  auto both = gamma_possible(edge, *z6, true);
  CHECK(both.possible);
  CHECK(both.strong_checked);
  CHECK_FALSE(both.strong_possible);
  REQUIRE(both.strong_failing.has_value());
  CHECK(both.strong_failing->first == 0b01);
  CHECK(both.strong_failing->second == 0b11);
}

TEST_CASE("isomorphism and rebase") {
  RankTable u23 = bundled::uniform_table(2, 3, 2);
  auto rebased = rebase(u23, 4);
  REQUIRE(rebased.has_value());
  CHECK(rebased->card[0b001] == 4);
  CHECK(rebased->card[0b111] == 16);

  std::vector<int> perm;
  CHECK(isomorphic(u23, u23, &perm));
  CHECK(perm == std::vector<int>{0, 1, 2});

  RankTable u13 = bundled::uniform_table(1, 3, 2);
  CHECK_FALSE(isomorphic(u23, u13));

  // asymmetric table: isomorphism must find the right permutation
  Subgroup h = bundled::s3_mixed();
  RankTable p = rank_table(h);
  RankTable swapped = p;
  std::swap(swapped.card[0b01], swapped.card[0b10]);
  CHECK(isomorphic(p, swapped, &perm));
  CHECK(perm == std::vector<int>{1, 0});
}

TEST_CASE("equivalent realizations") {
  Subgroup h = bundled::s3_mixed();
  auto self = equivalent_realizations(h, h);
  CHECK(self.equivalent);

  // swap the two coordinates
  std::vector<Tuple> swapped;
  for (const auto& t : h.elements()) swapped.push_back({t[1], t[0]});
  Subgroup h2(h.parent(), swapped);
  auto rep = equivalent_realizations(h, h2);
  CHECK(rep.equivalent);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->coord_perm == std::vector<int>{1, 0});

  // different rank tables reject quickly
  auto diff = equivalent_realizations(h, bundled::s3_diagonal());
  CHECK_FALSE(diff.equivalent);

  // applying an automorphism to one coordinate keeps the realization equivalent
  GroupPtr s3 = symmetric_group(3);
  int c12 = *s3->element_by_name("213");
  std::vector<Tuple> conj;
  for (const auto& t : h.elements())
    conj.push_back({t[0], s3->mul(s3->mul(c12, t[1]), s3->inv(c12))});
  Subgroup h3(h.parent(), conj);
  auto rep3 = equivalent_realizations(h, h3);
  CHECK(rep3.equivalent);
}

TEST_CASE("equivalence search caps") {
  GroupPtr d13 = dihedral_group(13);  // order 26 > default gamma cap
  GroupProduct g({d13, d13});
  Subgroup h = trivial_subgroup(g);
  CHECK_THROWS_AS(equivalent_realizations(h, h), scale_error);

  GroupPtr z2 = cyclic_group(2);
  GroupProduct wide(std::vector<GroupPtr>(6, z2));
  Subgroup t = trivial_subgroup(wide);
  CHECK_THROWS_AS(equivalent_realizations(t, t), scale_error);

  GroupPtr z3 = cyclic_group(3);
  GroupProduct het({z2, z3});
  Subgroup ht = trivial_subgroup(het);
  CHECK_THROWS_AS(equivalent_realizations(ht, ht), capability_error);
}

TEST_CASE("rank table coordinate cap") {
  GroupPtr z1 = cyclic_group(1);
  GroupProduct g(std::vector<GroupPtr>(21, z1));
  CHECK_THROWS_AS(rank_table(trivial_subgroup(g)), scale_error);
}

TEST_CASE("representability search") {
  // U_{2,3} is found over Z/2 (the parity-check code)
  RankTable u23 = bundled::uniform_table(2, 3, 2);
  auto found = representability_search(u23, cyclic_group(2), 3);
  REQUIRE(found.has_value());
  CHECK(found->size() == 4);
  CHECK(isomorphic(*rebase(u23, 2), rank_table(*found)));

  // U_{1,1} over any group: the full group on one coordinate
  RankTable u11 = bundled::uniform_table(1, 1, 6);
  auto found6 = representability_search(u11, cyclic_group(6), 1);
  REQUIRE(found6.has_value());
  CHECK(found6->size() == 6);

  // U_{2,3} is graphic, hence regular, hence realized over Z/4 as well: the
  // exhaustive scan of Z/4^3 turns up the addition graph {(a, b, a+b)}
  RankTable u23q = bundled::uniform_table(2, 3, 4);
  auto found4 = representability_search(u23q, cyclic_group(4), 3);
  REQUIRE(found4.has_value());
  CHECK(found4->size() == 16);
  CHECK(isomorphic(*rebase(u23q, 4), rank_table(*found4)));

  // the actual Z/4 excluded minor: r(S) = min(1, |S|/2) on four elements has
  // no realization, while each of its single-element deletions does
  CHECK_FALSE(representability_search(bundled::half_rank_table(), cyclic_group(4), 4)
                  .has_value());
  RankTable del = delete_subset(bundled::half_rank_table(), 0b1000);
  CHECK(representability_search(del, cyclic_group(4), 3).has_value());
}

TEST_CASE("axiom sweep over random subgroups") {
  std::mt19937_64 rng(23);
  for (const auto& h : testsupport::random_subgroups(40, rng)) {
    RankTable p = rank_table(h);
    auto rep = check_axioms(p);
    CHECK(rep.all_pass());
    CHECK(char_poly(p).terms == char_poly_mobius(p).terms);
    // surjective projections: card(S) divides card(T) for S inside T
    for (Mask t = 0; t < (Mask)(size_t(1) << p.n); ++t)
      for (int x = 0; x < p.n; ++x) {
        if (t & (Mask(1) << x)) continue;
        CHECK(divides(p.card[t].get_num(), p.card[t | (Mask(1) << x)].get_num()));
      }
  }
}
