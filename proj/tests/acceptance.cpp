// Acceptance suite: each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gpm/bundled.hpp"
#include "gpm/codes.hpp"
#include "gpm/critical.hpp"
#include "gpm/errors.hpp"
#include "gpm/hypergraph.hpp"
#include "gpm/laplacian.hpp"
#include "gpm/reptheory.hpp"
#include "support/random_subgroups.hpp"

using namespace gpm;

namespace {

struct Criterion {
  std::string name;
  bool (*fn)(std::string& why);
};

std::vector<Subgroup>& criterion2_pool() {
  static std::vector<Subgroup> pool = [] {
    std::mt19937_64 rng(20240601);
    return testsupport::random_subgroups(120, rng, 216);
  }();
  return pool;
}

// ---- criterion 1: the S3 pair end to end -----------------------------------

bool criterion1(std::string& why) {
  Subgroup h = bundled::s3_mixed();
  RankTable p = rank_table(h);
  if (!(p.card[0b00] == 1 && p.card[0b01] == 2 && p.card[0b10] == 6 &&
        p.card[0b11] == 6)) {
    why = "rank table is not (1,2,6,6)";
    return false;
  }
  RankTable dual = a_dual(p, AlphaVector::from_factor_orders(p));
  if (!(dual.card[0b01] == 6 && dual.card[0b10] == 2 && dual.card[0b11] == 6)) {
    why = "dual ranks wrong";
    return false;
  }
  if (flats(dual) != std::vector<Mask>{0b00, 0b10, 0b11}) {
    why = "dual flats wrong";
    return false;
  }
  auto mu = mobius(dual);
  if (!(mu[{0, 0b10}] == -1 && mu[{0, 0b11}] == 0)) {
    why = "dual Moebius values wrong";
    return false;
  }
  LogPolynomial chi = char_poly(dual);
  std::vector<std::pair<Int, Rat>> want{{Int(1), Rat(6)}, {Int(-1), Rat(3)}};
  if (chi.terms != want) {
    why = "dual characteristic polynomial is not t - t^{log_6 3}";
    return false;
  }
  auto rep = dual_crapo_rota(h, 2);
  if (!(rep.match && rep.lhs == 27 && rep.rhs == 27)) {
    why = "dual critical identity at k=2 is not 27 = 27";
    return false;
  }
  return true;
}

// ---- criterion 2: critical identity across the random pool -----------------

bool criterion2(std::string& why) {
  int checked = 0;
  for (const auto& h : criterion2_pool()) {
    for (int k : {1, 2}) {
      if (std::pow((double)h.size(), k) > 1e8) continue;
      auto rep = verify_crapo_rota(h, Base::group_order(), k);
      if (!rep.match) {
        std::ostringstream o;
        o << "mismatch at |G|=" << h.parent().order() << " |H|=" << h.size()
          << " k=" << k;
        why = o.str();
        return false;
      }
      ++checked;
    }
  }
  if ((int)criterion2_pool().size() < 100) {
    why = "pool smaller than 100 subgroups";
    return false;
  }
  why = std::to_string(checked) + " identities over " +
        std::to_string(criterion2_pool().size()) + " subgroups";
  return true;
}

// ---- criterion 3: spectra ---------------------------------------------------

bool criterion3(std::string& why) {
  auto names = [](const RSpectrum& s) {
    std::multiset<std::pair<std::vector<int>, std::string>> out;
    for (const auto& e : s.entries)
      out.insert({e.irrep, e.mult.get_str() + "." + e.dim.get_str()});
    return out;
  };
  using Set = std::multiset<std::pair<std::vector<int>, std::string>>;
  if (names(r_spectrum(bundled::s3_diagonal())) !=
      Set{{{0, 0}, "1.1"}, {{1, 1}, "1.1"}, {{2, 2}, "1.4"}}) {
    why = "diagonal spectrum wrong";
    return false;
  }
  if (names(r_spectrum(bundled::s3_sign_pair())) !=
      Set{{{0, 0}, "1.1"}, {{1, 1}, "1.1"}}) {
    why = "sign-matched spectrum wrong";
    return false;
  }
  if (names(r_spectrum(bundled::s3_mixed())) !=
      Set{{{0, 0}, "1.1"}, {{1, 1}, "1.1"}, {{2, 0}, "1.2"}, {{2, 1}, "1.2"}}) {
    why = "mixed spectrum wrong";
    return false;
  }
  // aggregate identity for every S on all three subgroups
  for (const Subgroup& h :
       {bundled::s3_diagonal(), bundled::s3_sign_pair(), bundled::s3_mixed()}) {
    RSpectrum spec = r_spectrum(h);
    for (Mask s = 0; s < 4; ++s) {
      Int agg = 0;
      for (const auto& e : spec.entries)
        if (subset_of(s, e.triv)) agg += e.mult * e.dim;
      if (agg != aggregate_dimension(h, s)) {
        why = "aggregate identity fails at S=" + mask_to_string(s);
        return false;
      }
    }
  }
  return true;
}

// ---- criterion 4: MacWilliams across the pool -------------------------------

bool criterion4(std::string& why) {
  auto rep = macwilliams_check(bundled::s3_mixed());
  if (!(rep.match && rep.lhs == std::vector<Int>{6, 12, 18})) {
    why = "the S3 instance is not 6 + 12t + 18t^2";
    return false;
  }
  int checked = 0;
  for (const auto& h : criterion2_pool()) {
    if (!h.parent().homogeneous()) continue;  // the identity is for Gamma-codes
    if (!macwilliams_check(h).match) {
      why = "mismatch at |H|=" + std::to_string(h.size());
      return false;
    }
    ++checked;
  }
  if (checked < 30) {
    why = "too few homogeneous codes in the pool: " + std::to_string(checked);
    return false;
  }
  why = std::to_string(checked) + " codes verified";
  return true;
}

// ---- criterion 5: Greene identities -----------------------------------------

bool criterion5(std::string& why) {
  int checked = 0;
  for (const auto& h : criterion2_pool()) {
    if (!h.parent().homogeneous()) continue;
    auto g = greene_check(h, {-1, 0, 1, 2}, 20, 0xC0FFEE + checked);
    auto dg = dual_greene_check(h, {-1, 0, 1, 2}, 20, 0xBEEF + checked);
    if (!g.exact_ok || !dg.exact_ok) {
      why = "exact point mismatch";
      return false;
    }
    if (!g.float_ok || !dg.float_ok) {
      std::ostringstream o;
      o << "float mismatch, rel err " << std::max(g.max_rel_err, dg.max_rel_err);
      why = o.str();
      return false;
    }
    ++checked;
  }
  why = std::to_string(checked) + " codes, 8 exact points and 40 samples each";
  return checked >= 30;
}

// ---- criterion 6: hypergraph counting ---------------------------------------

bool criterion6(std::string& why) {
  std::vector<Hypergraph> cases;
  cases.push_back(bundled::four_edge_hypergraph());
  std::mt19937_64 rng(909090);
  while (cases.size() < 12) {
    int nv = 2 + (int)(rng() % 6);
    std::ostringstream text;
    int budget = 14;
    int edges = 2 + (int)(rng() % 4);
    for (int e = 0; e < edges && budget >= 2; ++e) {
      int size = 2 + (int)(rng() % 3);
      size = std::min(size, budget);
      for (int i = 0; i < size; ++i) text << (i ? " " : "") << "v" << (rng() % nv);
      text << "\n";
      budget -= size;
    }
    std::stringstream in(text.str());
    cases.push_back(parse_hypergraph(in));
  }

  std::vector<GroupPtr> gammas = {cyclic_group(2), cyclic_group(3),
                                  abelian_product_group({2, 2}), cyclic_group(6)};
  int colorings = 0, flows = 0;
  for (const auto& h : cases) {
    for (long lambda = 2; lambda <= 6; ++lambda) {
      if (std::pow((double)lambda, (double)h.vertices.size()) > 1e8) continue;
      if (count_colorings(h, lambda) != chromatic_value(h, lambda)) {
        why = "coloring mismatch at lambda=" + std::to_string(lambda);
        return false;
      }
      ++colorings;
    }
    long cols = 0;
    for (const auto& e : h.edges) cols += (long)e.size() - 1;
    for (const auto& gamma : gammas) {
      if (std::pow((double)gamma->order(), (double)cols) > 1e8) continue;
      if (count_nzflows(h, gamma) != flow_value(h, gamma)) {
        why = "flow mismatch for group of order " + std::to_string(gamma->order());
        return false;
      }
      ++flows;
    }
  }
  why = std::to_string(colorings) + " coloring and " + std::to_string(flows) +
        " flow identities on " + std::to_string(cases.size()) + " hypergraphs";
  return true;
}

// ---- criterion 7: Laplacian spectra and homology ----------------------------

bool criterion7(std::string& why) {
  QuotientComplex chen(bundled::z6_cube());
  auto rep = laplacian_spectrum(chen, 0);
  if (rep.char_poly != std::vector<Int>{0, 33, -12, 1}) {
    why = "dimension-0 characteristic polynomial is not t(t^2 - 12t + 33)";
    return false;
  }

  QuotientComplex ca(bundled::binary_code_a());
  QuotientComplex cb(bundled::binary_code_b());
  auto ra = laplacian_spectrum(ca, 5);
  auto rb = laplacian_spectrum(cb, 5);
  if (ra.integer_roots != rb.integer_roots || !ra.splits_over_z || !rb.splits_over_z) {
    why = "the two binary quotients have different top spectra";
    return false;
  }

  // coloop-free test cases: predicted spectrum must equal the computed one
  GroupPtr z2 = cyclic_group(2);
  GroupPtr z6 = cyclic_group(6);
  std::vector<Subgroup> cases = {bundled::binary_code_a(), bundled::binary_code_b()};
  {
    GroupProduct g3(std::vector<GroupPtr>(3, z2));
    cases.push_back(subgroup_closure(g3, {{1, 1, 0}, {0, 1, 1}}));  // even-weight code
    GroupProduct g4(std::vector<GroupPtr>(4, z2));
    cases.push_back(subgroup_closure(g4, {{1, 1, 1, 1}}));  // repetition code
    GroupProduct h2(std::vector<GroupPtr>(2, z6));
    cases.push_back(subgroup_closure(h2, {{1, 1}}));
    cases.push_back(subgroup_closure(h2, {{1, 5}}));
    GroupProduct h3(std::vector<GroupPtr>(3, z6));
    cases.push_back(subgroup_closure(h3, {{1, 1, 1}}));
    cases.push_back(subgroup_closure(h3, {{1, 5, 1}}));
  }
  for (const auto& h : cases) {
    auto predicted = predicted_top_spectrum(h);
    if (!predicted.hypothesis_ok) {
      why = "a curated case unexpectedly has a rank-dropping coordinate";
      return false;
    }
    QuotientComplex c(h);
    auto computed = laplacian_spectrum(c, c.n() - 1);
    if (!computed.splits_over_z) {
      why = "top spectrum did not split over the integers";
      return false;
    }
    if (predicted.eigen_mult.size() != computed.integer_roots.size()) {
      why = "prediction has the wrong number of distinct eigenvalues";
      return false;
    }
    for (size_t i = 0; i < predicted.eigen_mult.size(); ++i) {
      if (predicted.eigen_mult[i].first != computed.integer_roots[i].first ||
          predicted.eigen_mult[i].second != computed.integer_roots[i].second) {
        why = "prediction disagrees with the computed spectrum";
        return false;
      }
    }
  }

  // Betti identities on every test case (plus the irrational-spectrum one)
  std::vector<Subgroup> betti_cases = cases;
  betti_cases.push_back(bundled::z6_cube());
  betti_cases.push_back(bundled::s3_mixed());
  for (const auto& h : betti_cases) {
    auto th = verify_top_homology(h);
    if (!th.betti_matches_triv || (!th.chi_skipped && !th.betti_matches_chi)) {
      why = "top Betti number disagrees with the dual count";
      return false;
    }
    QuotientComplex c(h);
    auto eu = euler_check(c);
    if (!eu.euler_matches || !eu.lower_bettis_vanish) {
      why = "Euler characteristic check failed";
      return false;
    }
  }
  return true;
}

// ---- criterion 8: axiom sweeps ----------------------------------------------

bool criterion8(std::string& why) {
  for (const auto& h : criterion2_pool()) {
    auto rep = check_axioms(rank_table(h));
    if (!rep.all_pass()) {
      why = "a subgroup table failed the axioms";
      return false;
    }
  }
  auto rep = check_axioms(
      rank_table_from_subset(bundled::nonsubmodular_subset(), Base::group_order()));
  if (rep.p3 || !rep.p3_fail ||
      *rep.p3_fail != std::make_pair(Mask(0b011), Mask(0b110))) {
    why = "the five-tuple subset did not fail P3 first at S={1,2}, T={2,3}";
    return false;
  }
  if (rep.p3_prime) {
    why = "P3' unexpectedly passed on the five-tuple subset";
    return false;
  }
  why = std::to_string(criterion2_pool().size()) +
        " subgroup tables pass; the raw subset fails at ({1,2},{2,3})";
  return true;
}

// ---- criterion 9: excluded-minor desk checks --------------------------------

bool criterion9(std::string& why) {
  // Full enumeration over Z/4: U_{2,3} is graphic, hence regular, hence
  // realized (the scan finds the addition graph {(a,b,a+b)}); the actual
  // abelian excluded minor, r(S) = min(1,|S|/2) on four elements, has no
  // realization among all subgroups of (Z/4)^4 while all its single-element
  // deletions and contractions are realized.
  GroupPtr z4 = cyclic_group(4);
  RankTable u23 = bundled::uniform_table(2, 3, 4);
  auto u23_found = representability_search(u23, z4, 3);
  if (!u23_found || !isomorphic(*rebase(u23, 4), rank_table(*u23_found))) {
    why = "the Z/4 realization of U_{2,3} was not found by the full scan";
    return false;
  }
  RankTable half = bundled::half_rank_table();
  if (representability_search(half, z4, 4).has_value()) {
    why = "a subgroup of (Z/4)^4 claims to realize the half-rank excluded minor";
    return false;
  }
  for (int x = 0; x < 4; ++x) {
    if (!representability_search(delete_subset(half, Mask(1) << x), z4, 3)
             .has_value() ||
        !representability_search(contract_subset(half, Mask(1) << x), z4, 3)
             .has_value()) {
      why = "a minor of the excluded minor was not realized";
      return false;
    }
  }
  // sanity: the same search succeeds over Z/2
  if (!representability_search(bundled::uniform_table(2, 3, 2), cyclic_group(2), 3)
           .has_value()) {
    why = "the binary realization of U_{2,3} was not found";
    return false;
  }

  // two-coordinate restriction over S3: exactly the full S3 x S3 realizes
  // the rank-2 restriction of U_{2,3}
  GroupPtr s3 = symmetric_group(3);
  GroupProduct s3sq({s3, s3});
  RankTable u22 = bundled::uniform_table(2, 2, 6);
  auto rebased = rebase(u22, 6);
  int realizers = 0;
  auto subs = enumerate_subgroups(s3sq);
  for (const auto& sub : subs) {
    if (isomorphic(*rebased, rank_table(sub))) ++realizers;
  }
  if (realizers != 1) {
    why = "expected exactly one subgroup of S3^2 with the U_{2,2} table, got " +
          std::to_string(realizers);
    return false;
  }

  // three-coordinate fixture: any realization of U_{2,3} over S3 would be the
  // graph of a surjective homomorphism S3 x S3 -> S3; enumerate all of them
  // through commuting pairs of endomorphisms of S3
  std::vector<std::vector<int>> endos;
  {
    int x = *s3->element_by_name("213");  // (12)
    int y = *s3->element_by_name("231");  // (123)
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        // relations x^2 = y^3 = (xy)^2 = e
        if (s3->mul(a, a) != s3->identity()) continue;
        if (s3->mul(b, s3->mul(b, b)) != s3->identity()) continue;
        int ab = s3->mul(a, b);
        if (s3->mul(ab, ab) != s3->identity()) continue;
        // build the endomorphism from generator images by closure
        std::vector<int> img(6, -1);
        img[s3->identity()] = s3->identity();
        img[x] = a;
        img[y] = b;
        bool ok = true;
        bool changed = true;
        std::vector<int> known = {s3->identity(), x, y};
        while (changed && ok) {
          changed = false;
          size_t sz = known.size();
          for (size_t i = 0; i < sz && ok; ++i)
            for (size_t j = 0; j < sz && ok; ++j) {
              int c = s3->mul(known[i], known[j]);
              int fc = s3->mul(img[known[i]], img[known[j]]);
              if (img[c] == -1) {
                img[c] = fc;
                known.push_back(c);
                changed = true;
              } else if (img[c] != fc) {
                ok = false;
              }
            }
        }
        if (ok && (int)known.size() == 6) endos.push_back(img);
      }
  }
  if (endos.size() != 10) {  // 1 trivial + 3 sign-like + 6 automorphisms
    why = "endomorphism enumeration of S3 found " + std::to_string(endos.size()) +
          " maps, expected 10";
    return false;
  }
  RankTable u23_s3 = *rebase(bundled::uniform_table(2, 3, 6), 6);
  GroupProduct s3cube({s3, s3, s3});
  int graphs = 0;
  for (const auto& f1 : endos)
    for (const auto& f2 : endos) {
      bool commute = true;
      for (int g = 0; g < 6 && commute; ++g)
        for (int hh = 0; hh < 6 && commute; ++hh)
          commute = s3->mul(f1[g], f2[hh]) == s3->mul(f2[hh], f1[g]);
      if (!commute) continue;
      ++graphs;
      std::vector<Tuple> elems;
      for (int g = 0; g < 6; ++g)
        for (int hh = 0; hh < 6; ++hh)
          elems.push_back({g, hh, s3->mul(f1[g], f2[hh])});
      Subgroup graph(s3cube, std::move(elems));
      if (isomorphic(u23_s3, rank_table(graph))) {
        why = "a homomorphism graph claims to realize U_{2,3} over S3";
        return false;
      }
    }
  why = std::to_string(subs.size()) + " subgroups of S3^2 scanned; " +
        std::to_string(graphs) + " commuting homomorphism graphs refuted";
  return true;
}

const Criterion kCriteria[] = {
    {"1. S3-pair end to end (rank, dual, flats, chi, k=2 identity)", criterion1},
    {"2. critical identity, k in {1,2}, 100+ random subgroups", criterion2},
    {"3. spectra of the three bundled subgroups + aggregate identity", criterion3},
    {"4. MacWilliams identity across the pool and the S3 instance", criterion4},
    {"5. Greene and dual Greene, exact points and float samples", criterion5},
    {"6. hypergraph coloring and flow counts vs characteristic polynomials", criterion6},
    {"7. Laplacian spectra, predictions, Betti and Euler identities", criterion7},
    {"8. axiom sweep + the non-submodular five-tuple counterexample", criterion8},
    {"9. excluded-minor desk checks over Z/4 and S3", criterion9},
};

}  // namespace

int main() {
  bool all = true;
  for (const auto& c : kCriteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    bool pass = false;
    try {
      pass = c.fn(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << ms << " ms)";
    if (!why.empty()) std::cout << "  [" << why << "]";
    std::cout << "\n";
    all = all && pass;
  }
  std::cout << (all ? "ACCEPTANCE: all criteria passed\n"
                    : "ACCEPTANCE: failures present\n");
  return all ? 0 : 1;
}
