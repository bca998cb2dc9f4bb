#include "gpm/paper_suite.hpp"

#include <map>
#include <set>
#include <sstream>

#include "gpm/bundled.hpp"
#include "gpm/codes.hpp"
#include "gpm/critical.hpp"
#include "gpm/hypergraph.hpp"
#include "gpm/laplacian.hpp"
#include "gpm/reptheory.hpp"

namespace gpm {

namespace {

struct Check {
  std::string name;
  bool (*fn)(std::string& detail);
};

bool eq_detail(std::string& detail, const std::string& got, const std::string& want) {
  detail = "got " + got + ", want " + want;
  return got == want;
}

bool check_s3_rank_table(std::string& d) {
  RankTable p = rank_table(bundled::s3_mixed());
  std::ostringstream got;
  got << p.card[0] << "," << p.card[1] << "," << p.card[2] << "," << p.card[3];
  return eq_detail(d, got.str(), "1,2,6,6");
}

bool check_s3_dual_char_poly(std::string& d) {
  RankTable p = rank_table(bundled::s3_mixed());
  RankTable dual = a_dual(p, AlphaVector::from_factor_orders(p));
  LogPolynomial chi = char_poly(dual);
  return eq_detail(d, chi.to_string(), "t - t^log_6(3)");
}

bool check_s3_dual_mobius(std::string& d) {
  RankTable p = rank_table(bundled::s3_mixed());
  RankTable dual = a_dual(p, AlphaVector::from_factor_orders(p));
  auto mu = mobius(dual);
  auto fl = flats(dual);
  bool ok = fl == std::vector<Mask>{0b00, 0b10, 0b11} && mu[{0, 0}] == 1 &&
            mu[{0, 0b10}] == -1 && mu[{0, 0b11}] == 0;
  d = ok ? "flats {},{2},{1,2} with mu 1,-1,0" : "unexpected flats or mu";
  return ok;
}

bool check_crapo_rota_s3(std::string& d) {
  auto r1 = verify_crapo_rota(bundled::s3_mixed(), Base::group_order(), 1);
  auto r2 = verify_crapo_rota(bundled::s3_mixed(), Base::group_order(), 2);
  std::ostringstream got;
  got << r1.lhs->get_str() << "/" << r1.rhs << "," << r2.lhs->get_str() << "/" << r2.rhs;
  return eq_detail(d, got.str(), "3/3,27/27") && r1.match && r2.match;
}

bool check_dual_crapo_rota_s3(std::string& d) {
  auto r = dual_crapo_rota(bundled::s3_mixed(), 2);
  std::ostringstream got;
  got << r.lhs << "/" << r.rhs;
  return eq_detail(d, got.str(), "27/27") && r.match;
}

bool check_not_submodular(std::string& d) {
  RankTable p = rank_table_from_subset(bundled::nonsubmodular_subset(), Base::group_order());
  auto rep = check_axioms(p);
  bool ok = !rep.p3 && rep.p3_fail == std::make_pair(Mask(0b011), Mask(0b110));
  d = ok ? "P3 fails first at S={1,2}, T={2,3}" : "unexpected axiom report";
  return ok;
}

std::string spectrum_names(const RSpectrum& s) {
  static const char* irr[] = {"1", "s", "t"};
  std::string out;
  for (const auto& e : s.entries) {
    if (!out.empty()) out += ",";
    out += irr[e.irrep[0]];
    out += "x";
    out += irr[e.irrep[1]];
    if (e.mult != 1) out += "*" + e.mult.get_str();
  }
  return out;
}

bool check_spectrum_mixed(std::string& d) {
  return eq_detail(d, spectrum_names(r_spectrum(bundled::s3_mixed())), "1x1,sxs,tx1,txs");
}

bool check_spectrum_diagonal(std::string& d) {
  return eq_detail(d, spectrum_names(r_spectrum(bundled::s3_diagonal())), "1x1,sxs,txt");
}

bool check_spectrum_sign_pair(std::string& d) {
  return eq_detail(d, spectrum_names(r_spectrum(bundled::s3_sign_pair())), "1x1,sxs");
}

bool check_dual_rank_from_spectrum(std::string& d) {
  RSpectrum s = r_spectrum(bundled::s3_mixed());
  std::ostringstream got;
  got << rank_from_spectrum(s, 0b01) << "," << rank_from_spectrum(s, 0b10);
  return eq_detail(d, got.str(), "6,2");  // r*({1}) = 1, r*({2}) = log_6 2
}

bool check_rr_not_submodular(std::string& d) {
  auto fx = submodularity_counterexample_rR();
  std::ostringstream got;
  got << fx.lhs_product << "<" << fx.rhs_product;
  return eq_detail(d, got.str(), "9/4<3") && fx.violates;
}

bool check_macwilliams_s3(std::string& d) {
  auto r = macwilliams_check(bundled::s3_mixed());
  std::ostringstream got;
  for (size_t i = 0; i < r.lhs.size(); ++i) got << (i ? "," : "") << r.lhs[i];
  return eq_detail(d, got.str(), "6,12,18") && r.match;
}

bool check_abelian_dual_z6(std::string& d) {
  Subgroup h = bundled::z6_cube();
  Subgroup hd = abelian_dual_subgroup(h);
  RankTable dual_table = rank_table(hd);
  RankTable p = rank_table(h);
  RankTable adual = a_dual(p, AlphaVector::from_factor_orders(p));
  bool ok = dual_table.card == adual.card;
  d = ok ? "P(H') equals the a-dual table" : "tables differ";
  return ok;
}

bool check_whitney_gf3(std::string& d) {
  // subspace of (Z/3)^3 spanned by (1,1,0) and (0,1,1): dual = orthogonal complement
  GroupPtr z3 = cyclic_group(3);
  GroupProduct g({z3, z3, z3});
  Subgroup h = subgroup_closure(g, {{1, 1, 0}, {0, 1, 1}});
  Subgroup hd = abelian_dual_subgroup(h);
  bool ok = hd.size() == 3 && hd.contains({1, 2, 1});
  d = ok ? "dual is the classical orthogonal complement" : "unexpected dual";
  return ok;
}

bool check_star_graph_matrix(std::string& d) {
  StarGraphMatrix m = star_graph(bundled::four_edge_hypergraph());
  const int want[4][9] = {{1, 0, 1, 0, 0, 1, 0, 0, 0},
                          {0, 1, 0, 1, 1, -1, 0, 0, 0},
                          {-1, -1, 0, 0, 0, 0, 0, 0, 1},
                          {0, 0, -1, -1, -1, 0, 0, 0, -1}};
  bool ok = m.rows == 4 && m.cols == 9;
  for (int r = 0; r < 4 && ok; ++r)
    for (int c = 0; c < 9 && ok; ++c) ok = m.a[r][c] == want[r][c];
  d = ok ? "matches the 4x9 signed incidence matrix" : "matrix differs";
  return ok;
}

bool check_hyper_ranks(std::string& d) {
  auto p = hyper_polymatroid(bundled::four_edge_hypergraph());
  std::ostringstream got;
  got << p.rank[0b1000] << "," << p.rank[0b1111];
  return eq_detail(d, got.str(), "1,3");
}

bool check_coloring_example(std::string& d) {
  Hypergraph h = bundled::four_edge_hypergraph();
  for (long lambda : {2, 3, 4}) {
    if (count_colorings(h, lambda) != chromatic_value(h, lambda)) {
      d = "mismatch at lambda=" + std::to_string(lambda);
      return false;
    }
  }
  d = "brute force equals lambda^kappa * chi for lambda=2,3,4";
  return true;
}

bool check_flow_example(std::string& d) {
  Hypergraph h = bundled::four_edge_hypergraph();
  for (int q : {2, 3}) {
    GroupPtr gamma = cyclic_group(q);
    if (count_nzflows(h, gamma) != flow_value(h, gamma)) {
      d = "mismatch for Z/" + std::to_string(q);
      return false;
    }
  }
  d = "kernel enumeration equals chi_{P*} for Z/2 and Z/3";
  return true;
}

bool check_chen_quotient(std::string& d) {
  Subgroup h = bundled::z6_cube();
  QuotientComplex c(h);
  std::multiset<long> edges{c.face_count(0b011), c.face_count(0b101), c.face_count(0b110)};
  bool ok = c.faces_in_dim(0) == 3 && edges == std::multiset<long>{1, 2, 3};
  d = ok ? "3 vertices; edge multiplicities {1,2,3}" : "unexpected face counts";
  return ok;
}

bool check_chen_spectrum(std::string& d) {
  QuotientComplex c(bundled::z6_cube());
  auto rep = laplacian_spectrum(c, 0);
  // t(t^2 - 12t + 33), ascending: 0, 33, -12, 1
  std::vector<Int> want{Int(0), Int(33), Int(-12), Int(1)};
  bool ok = rep.char_poly == want && rep.integer_roots.size() == 1 &&
            rep.integer_roots[0] == std::make_pair(Int(0), 1) &&
            rep.residual == std::vector<Int>{Int(33), Int(-12), Int(1)};
  d = ok ? "char poly t^3 - 12 t^2 + 33 t, residual roots 6 +/- sqrt(3)"
         : "unexpected spectrum";
  return ok;
}

std::string eig_string(const std::vector<std::pair<Int, int>>& eigs) {
  std::string out;
  for (const auto& [e, m] : eigs) {
    if (!out.empty()) out += ",";
    out += e.get_str() + "^" + std::to_string(m);
  }
  return out;
}

bool check_binary_top_spectra(std::string& d) {
  QuotientComplex ca(bundled::binary_code_a());
  QuotientComplex cb(bundled::binary_code_b());
  auto ra = laplacian_spectrum(ca, 5);
  auto rb = laplacian_spectrum(cb, 5);
  bool ok = ra.integer_roots == rb.integer_roots && ra.splits_over_z &&
            eig_string(ra.integer_roots) == "12^1,8^3,4^3,0^1";
  d = "spectra " + eig_string(ra.integer_roots) + " and " + eig_string(rb.integer_roots);
  return ok;
}

bool check_single_gamma_vertex_spectrum(std::string& d) {
  // one coordinate, trivial subgroup: the augmented Delta_0 is all ones
  GroupPtr z4 = cyclic_group(4);
  GroupProduct g({z4});
  QuotientComplex c(trivial_subgroup(g));
  auto rep = laplacian_spectrum(c, 0, /*augmented=*/true);
  bool ok = eig_string(rep.integer_roots) == "4^1,0^3";
  d = "augmented spectrum " + eig_string(rep.integer_roots);
  return ok;
}

bool check_top_homology_binary(std::string& d) {
  auto ra = verify_top_homology(bundled::binary_code_a());
  auto rb = verify_top_homology(bundled::binary_code_b());
  bool ok = ra.betti == 1 && rb.betti == 1 && ra.betti_matches_triv &&
            ra.betti_matches_chi && rb.betti_matches_triv && rb.betti_matches_chi;
  d = "betti " + ra.betti.get_str() + " and " + rb.betti.get_str() +
      ", both match triv distribution and chi";
  return ok;
}

const Check kChecks[] = {
    {"s3 rank table 1,2,6,6", check_s3_rank_table},
    {"s3 dual char poly t - t^log6(3)", check_s3_dual_char_poly},
    {"s3 dual flats and mobius", check_s3_dual_mobius},
    {"crapo-rota on s3 pair, k=1,2", check_crapo_rota_s3},
    {"dual crapo-rota on s3 pair, k=2", check_dual_crapo_rota_s3},
    {"five-tuple subset breaks P3 at ({1,2},{2,3})", check_not_submodular},
    {"spectrum of s3 mixed subgroup", check_spectrum_mixed},
    {"spectrum of s3 diagonal", check_spectrum_diagonal},
    {"spectrum of sign-matched pairs", check_spectrum_sign_pair},
    {"dual ranks from the spectrum", check_dual_rank_from_spectrum},
    {"spectrum rank function breaks submodularity", check_rr_not_submodular},
    {"macwilliams identity on s3 code", check_macwilliams_s3},
    {"abelian dual subgroup over Z/6 cube", check_abelian_dual_z6},
    {"orthogonal complement over Z/3", check_whitney_gf3},
    {"four-edge hypergraph incidence matrix", check_star_graph_matrix},
    {"four-edge hypergraph ranks", check_hyper_ranks},
    {"coloring counts vs characteristic polynomial", check_coloring_example},
    {"nowhere-zero flow counts vs dual", check_flow_example},
    {"Z/6 cube quotient face counts", check_chen_quotient},
    {"Z/6 cube Delta_0 char poly", check_chen_spectrum},
    {"binary codes share the top spectrum", check_binary_top_spectra},
    {"single-factor augmented Delta_0", check_single_gamma_vertex_spectrum},
    {"top Betti equals dual count (binary codes)", check_top_homology_binary},
};

}  // namespace

std::vector<SuiteResult> run_paper_suite() {
  std::vector<SuiteResult> out;
  for (const auto& check : kChecks) {
    SuiteResult r;
    r.name = check.name;
    try {
      r.pass = check.fn(r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gpm
