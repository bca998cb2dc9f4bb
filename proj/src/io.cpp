#include "gpm/io.hpp"

namespace gpm {

namespace {

Json rat_json(const Rat& q) { return q.get_str(); }

Json mask_json(Mask s) {
  Json arr = Json::array();
  for (int e : elements_of(s)) arr.push_back(e);
  return arr;
}

}  // namespace

Json rank_table_json(const RankTable& p) {
  Json out;
  out["n"] = p.n;
  Json b;
  b["kind"] = p.base.kind == Base::Kind::group_order ? "group_order" : "rational";
  b["value"] = p.base.resolved() ? Json(p.base.value.get_str()) : Json(nullptr);
  out["b"] = b;
  Json card;
  for (Mask s = 0; s < (Mask)p.card.size(); ++s)
    card[std::to_string(s)] = p.card[s].get_str();
  out["card"] = card;
  return out;
}

Json log_polynomial_json(const LogPolynomial& f) {
  Json arr = Json::array();
  for (const auto& [c, m] : f.terms)
    arr.push_back({c.get_str(), m.get_num().get_str(), m.get_den().get_str()});
  return arr;
}

Json axiom_report_json(const AxiomReport& r) {
  Json out;
  out["P1"] = r.p1;
  out["P2"] = r.p2;
  out["P3"] = r.p3;
  out["P3prime"] = r.p3_prime;
  out["subcardinal"] = r.subcardinal ? Json(*r.subcardinal) : Json(nullptr);
  out["integer_valued"] = r.integer_valued ? Json(*r.integer_valued) : Json(nullptr);
  if (r.p3_fail) {
    out["P3_counterexample"] = {{"S", mask_json(r.p3_fail->first)},
                                {"T", mask_json(r.p3_fail->second)}};
  }
  if (r.p3p_fail) {
    out["P3prime_counterexample"] = {{"S", mask_json(r.p3p_fail->s)},
                                     {"T", mask_json(r.p3p_fail->t)},
                                     {"x", r.p3p_fail->x}};
  }
  return out;
}

Json crapo_rota_json(const CrapoRotaReport& r) {
  Json out;
  out["lhs"] = r.lhs ? Json(r.lhs->get_str()) : Json(nullptr);
  out["rhs_num"] = r.rhs.get_num().get_str();
  out["rhs_den"] = r.rhs.get_den().get_str();
  out["match"] = r.match;
  out["k"] = r.k;
  if (r.brute_force_skipped) out["brute_force_skipped"] = true;
  return out;
}

Json dual_crapo_rota_json(const DualCrapoRotaReport& r) {
  Json out;
  out["lhs"] = r.lhs.get_str();
  out["rhs_num"] = r.rhs.get_num().get_str();
  out["rhs_den"] = r.rhs.get_den().get_str();
  out["match"] = r.match;
  out["k"] = r.k;
  return out;
}

Json spectrum_json(const RSpectrum& s) {
  Json arr = Json::array();
  for (const auto& e : s.entries) {
    Json entry;
    entry["irrep"] = e.irrep;
    entry["dim"] = e.dim.get_str();
    entry["mult"] = e.mult.get_str();
    entry["triv"] = mask_json(e.triv);
    arr.push_back(entry);
  }
  Json out;
  out["entries"] = arr;
  out["total_dim"] = s.total_dim.get_str();
  return out;
}

Json weight_enumerator_json(const WeightEnumerator& w) {
  Json arr = Json::array();
  for (const auto& c : w.c) arr.push_back(c.get_str());
  return arr;
}

Json greene_json(const GreeneReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.exact_points) {
    Json pt;
    pt["a"] = p.a;
    pt["t"] = rat_json(p.t);
    pt["lhs"] = rat_json(p.lhs);
    pt["rhs"] = rat_json(p.rhs);
    pt["match"] = p.match;
    pts.push_back(pt);
  }
  Json out;
  out["exact_points"] = pts;
  out["float_samples"] = r.float_samples;
  out["max_rel_err"] = r.max_rel_err;
  out["exact_ok"] = r.exact_ok;
  out["float_ok"] = r.float_ok;
  return out;
}

Json macwilliams_json(const MacWilliamsReport& r) {
  Json out;
  Json lhs = Json::array(), rhs = Json::array();
  for (const auto& c : r.lhs) lhs.push_back(c.get_str());
  for (const auto& c : r.rhs) rhs.push_back(c.get_str());
  out["lhs"] = lhs;
  out["rhs"] = rhs;
  out["match"] = r.match;
  if (!r.match) out["first_mismatch_degree"] = r.first_mismatch_degree;
  return out;
}

Json laplacian_json(const SpectrumReport& r) {
  Json out;
  out["dim"] = r.dim;
  out["augmented"] = r.augmented;
  Json cp = Json::array();
  for (const auto& c : r.char_poly) cp.push_back(c.get_str());
  out["char_poly_ascending"] = cp;
  Json roots = Json::array();
  for (const auto& [root, mult] : r.integer_roots)
    roots.push_back({{"eigenvalue", root.get_str()}, {"multiplicity", mult}});
  out["integer_roots"] = roots;
  Json res = Json::array();
  for (const auto& c : r.residual) res.push_back(c.get_str());
  out["residual"] = res;
  out["psd_consistent"] = r.psd_consistent;
  out["splits_over_z"] = r.splits_over_z;
  return out;
}

Json complex_dump_json(const QuotientComplex& c) {
  Json out;
  out["n"] = c.n();
  Json faces = Json::array();
  for (Mask s = 1; s < (Mask)(size_t(1) << c.n()); ++s) {
    Json fs;
    fs["S"] = mask_json(s);
    Json reps = Json::array();
    for (const auto& rep : c.reps(s)) reps.push_back(rep);
    fs["reps"] = reps;
    faces.push_back(fs);
  }
  out["faces"] = faces;
  Json bnds = Json::array();
  for (int j = 1; j <= c.n() - 1; ++j) {
    auto b = c.boundary(j);
    Json triplets = Json::array();
    for (const auto& [r, col, v] : b.entries) triplets.push_back({r, col, v});
    bnds.push_back({{"dim", j}, {"rows", b.rows}, {"cols", b.cols},
                    {"entries", triplets}});
  }
  out["boundaries"] = bnds;
  return out;
}

Json euler_json(const EulerReport& r) {
  Json out;
  out["alternating_sum"] = r.alternating_sum.get_str();
  out["top_betti"] = r.top_betti.get_str();
  out["euler_matches"] = r.euler_matches;
  out["lower_bettis_vanish"] = r.lower_bettis_vanish;
  Json b = Json::array();
  for (const auto& x : r.reduced_betti) b.push_back(x.get_str());
  out["reduced_betti"] = b;
  return out;
}

Json top_homology_json(const TopHomologyReport& r) {
  Json out;
  out["betti"] = r.betti.get_str();
  out["triv_empty"] = r.triv_empty.get_str();
  out["chi_dual"] = r.chi_dual_value ? Json(r.chi_dual_value->get_str()) : Json(nullptr);
  out["betti_matches_triv"] = r.betti_matches_triv;
  out["betti_matches_chi"] = r.betti_matches_chi;
  out["chi_skipped"] = r.chi_skipped;
  return out;
}

Json tutte_json(const TuttePoly& t) {
  Json arr = Json::array();
  for (const auto& [c, m1, m2] : t.terms)
    arr.push_back({c.get_str(), m1.get_str(), m2.get_str()});
  return arr;
}

}  // namespace gpm
