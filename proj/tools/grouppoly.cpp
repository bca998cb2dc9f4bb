#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gpm/bundled.hpp"
#include "gpm/codes.hpp"
#include "gpm/critical.hpp"
#include "gpm/errors.hpp"
#include "gpm/hypergraph.hpp"
#include "gpm/io.hpp"
#include "gpm/laplacian.hpp"
#include "gpm/paper_suite.hpp"
#include "gpm/reptheory.hpp"

using namespace gpm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string group_spec;
  std::string gens_path;
  std::string base_spec = "group";
  std::string json_path;
  long cap = 1000000;
};

GroupProduct load_product(const CommonOpts& opt) {
  if (opt.group_spec.empty()) throw domain_error("--group is required");
  std::vector<GroupPtr> factors;
  std::stringstream ss(opt.group_spec);
  std::string part;
  while (std::getline(ss, part, ',')) factors.push_back(construct_group(part));
  return GroupProduct(std::move(factors));
}

Subgroup load_subgroup(const CommonOpts& opt) {
  GroupProduct g = load_product(opt);
  if (opt.gens_path.empty()) {
    if (g.order() > opt.cap)
      throw scale_error("product order exceeds --cap " + std::to_string(opt.cap));
    return full_subgroup(g);
  }
  return subgroup_from_file(g, opt.gens_path, (size_t)opt.cap);
}

Base parse_base(const std::string& spec) {
  if (spec == "group") return Base::group_order();
  Rat v;
  auto slash = spec.find('/');
  if (slash == std::string::npos)
    v = Rat(Int(spec));
  else
    v = Rat(Int(spec.substr(0, slash))) / Rat(Int(spec.substr(slash + 1)));
  return Base::rational(v);
}

void emit(const CommonOpts& opt, Json report) {
  if (!report.is_object()) report = Json{{"result", std::move(report)}};
  report["schema"] = 1;
  if (!opt.json_path.empty()) {
    std::ofstream out(opt.json_path);
    out << report.dump(2) << "\n";
  }
}

void add_common(CLI::App* cmd, CommonOpts& opt, bool needs_group = true) {
  auto* g = cmd->add_option("--group", opt.group_spec,
                            "comma-separated factor specs, e.g. symmetric:3,symmetric:3");
  if (needs_group) g->required();
  cmd->add_option("--gens", opt.gens_path,
                  "generator file (one tuple per line, coordinates joined by '|'); "
                  "omitted = the full product");
  cmd->add_option("--b", opt.base_spec, "rank base: 'group' or a rational like 4 or 5/2");
  cmd->add_option("--json", opt.json_path, "write the JSON report here");
  cmd->add_option("--cap", opt.cap, "closure/enumeration cap");
}

std::string rank_string(const RankTable& p, Mask s) {
  long j;
  if (p.base.resolved() && log_exact(p.base.value, p.card[s], j))
    return std::to_string(j);
  std::ostringstream out;
  out << "log_" << (p.base.resolved() ? p.base.value.get_str() : "b") << "("
      << p.card[s].get_str() << ")";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polymatroid toolkit for subgroups of finite group products"};
  app.require_subcommand(1);

  CommonOpts opt;
  int k = 2;
  long lambda = 2;
  int dim = -1;
  std::string a_list = "-1,0,1,2";
  std::string hyp_path;
  std::string gamma_spec;
  std::string verify_which;
  std::string hyper_which;
  std::string lap_which;

  auto* rank_cmd = app.add_subcommand("rank", "rank table of P(H,b)");
  add_common(rank_cmd, opt);

  auto* flats_cmd = app.add_subcommand("flats", "flats and Moebius values");
  add_common(flats_cmd, opt);

  auto* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial");
  add_common(charpoly_cmd, opt);

  auto* dual_cmd = app.add_subcommand("dual", "a-dual rank table (A_x = |Gamma_x|)");
  add_common(dual_cmd, opt);

  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial terms");
  add_common(tutte_cmd, opt);

  auto* weights_cmd = app.add_subcommand("weights", "weight enumerators of H and R(H)");
  add_common(weights_cmd, opt);

  auto* spectrum_cmd = app.add_subcommand("rep-spectrum", "the multiset R(H)");
  add_common(spectrum_cmd, opt);

  auto* verify_cmd = app.add_subcommand("verify", "verify an identity");
  verify_cmd->add_option("which", verify_which,
                         "crapo-rota | dual-crapo-rota | greene | dual-greene | "
                         "macwilliams | axioms")
      ->required();
  add_common(verify_cmd, opt);
  verify_cmd->add_option("--k", k, "tuple length for the critical identities");
  verify_cmd->add_option("--a", a_list, "comma-separated exact points for greene");

  auto* hyper_cmd = app.add_subcommand("hypergraph", "coloring and flow counts");
  hyper_cmd->add_option("which", hyper_which, "chromatic | flow")->required();
  hyper_cmd->add_option("--hypergraph", hyp_path, "hypergraph file")->required();
  hyper_cmd->add_option("--lambda", lambda, "number of colors");
  hyper_cmd->add_option("--gamma", gamma_spec, "abelian group spec for flows");
  hyper_cmd->add_option("--json", opt.json_path, "write the JSON report here");
  hyper_cmd->add_option("--cap", opt.cap, "enumeration budget");

  auto* lap_cmd = app.add_subcommand("laplacian", "quotient complex computations");
  lap_cmd->add_option("which", lap_which, "spectrum | betti | euler")->required();
  add_common(lap_cmd, opt);
  lap_cmd->add_option("--dim", dim, "dimension (default: top)");

  auto* suite_cmd = app.add_subcommand("paper-suite", "run the bundled example fixtures");
  suite_cmd->add_option("--json", opt.json_path, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rank_cmd->parsed()) {
      Subgroup h = load_subgroup(opt);
      RankTable p = rank_table(h, parse_base(opt.base_spec));
      for (Mask s = 0; s < (Mask)p.card.size(); ++s)
        std::cout << mask_to_string(s) << " |H_S| = " << p.card[s]
                  << "  r = " << rank_string(p, s) << "\n";
      emit(opt, rank_table_json(p));
      return kExitOk;
    }
    if (flats_cmd->parsed()) {
      Subgroup h = load_subgroup(opt);
      RankTable p = rank_table(h, parse_base(opt.base_spec));
      auto fl = flats(p);
      auto mu = mobius(p);
      Json j;
      j["flats"] = Json::array();
      for (Mask f : fl) {
        std::cout << "flat " << mask_to_string(f);
        if (!p.has_loop()) std::cout << "  mu(closure(empty), F) = " << mu[{fl.front(), f}];
        std::cout << "\n";
        Json entry;
        entry["set"] = elements_of(f);
        entry["mu_from_bottom"] = mu[{fl.front(), f}].get_str();
        j["flats"].push_back(entry);
      }
      emit(opt, j);
      return kExitOk;
    }
    if (charpoly_cmd->parsed()) {
      Subgroup h = load_subgroup(opt);
      RankTable p = rank_table(h, parse_base(opt.base_spec));
      LogPolynomial chi = char_poly(p);
      std::cout << "chi_P = " << chi.to_string() << "\n";
      emit(opt, log_polynomial_json(chi));
      return kExitOk;
    }
    if (dual_cmd->parsed()) {
      Subgroup h = load_subgroup(opt);
      RankTable p = rank_table(h, parse_base(opt.base_spec));
      RankTable dual = a_dual(p, AlphaVector::from_factor_orders(p));
      for (Mask s = 0; s < (Mask)dual.card.size(); ++s)
        std::cout << mask_to_string(s) << " card* = " << dual.card[s]
                  << "  r* = " << rank_string(dual, s) << "\n";
      emit(opt, rank_table_json(dual));
      return kExitOk;
    }
    if (tutte_cmd->parsed()) {
      Subgroup h = load_subgroup(opt);
      RankTable p = rank_table(h, parse_base(opt.base_spec));
      TuttePoly t = tutte(p);
      for (const auto& [c, m1, m2] : t.terms)
        std::cout << c << " * (u-1)^log_b(" << m1 << ") * (v-1)^log_b(" << m2 << ")\n";
      emit(opt, tutte_json(t));
      return kExitOk;
    }
    if (weights_cmd->parsed()) {
      Subgroup h = load_subgroup(opt);
      WeightEnumerator w = weight_enumerator(h);
      WeightEnumerator wr = dual_weight_enumerator(h);
      auto dump = [](const char* name, const WeightEnumerator& e) {
        std::cout << name << " coefficients:";
        for (const auto& c : e.c) std::cout << " " << c;
        std::cout << "\n";
      };
      dump("W_H", w);
      dump("W_R(H)", wr);
      Json j;
      j["W_H"] = weight_enumerator_json(w);
      j["W_R"] = weight_enumerator_json(wr);
      emit(opt, j);
      return kExitOk;
    }
    if (spectrum_cmd->parsed()) {
      Subgroup h = load_subgroup(opt);
      RSpectrum spec = r_spectrum(h);
      for (const auto& e : spec.entries) {
        std::cout << "irrep (";
        for (size_t i = 0; i < e.irrep.size(); ++i)
          std::cout << (i ? "," : "") << e.irrep[i];
        std::cout << ") dim " << e.dim << " mult " << e.mult << " triv "
                  << mask_to_string(e.triv) << "\n";
      }
      emit(opt, spectrum_json(spec));
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      Subgroup h = load_subgroup(opt);
      bool ok = false;
      Json j;
      if (verify_which == "crapo-rota") {
        auto rep = verify_crapo_rota(h, parse_base(opt.base_spec), k);
        ok = rep.match;
        std::cout << "lhs " << (rep.lhs ? rep.lhs->get_str() : "(skipped)") << "  rhs "
                  << rep.rhs << "  " << (ok ? "MATCH" : "MISMATCH") << "\n";
        j = crapo_rota_json(rep);
      } else if (verify_which == "dual-crapo-rota") {
        auto rep = dual_crapo_rota(h, k);
        ok = rep.match;
        std::cout << "lhs " << rep.lhs << "  rhs " << rep.rhs << "  "
                  << (ok ? "MATCH" : "MISMATCH") << "\n";
        j = dual_crapo_rota_json(rep);
      } else if (verify_which == "greene" || verify_which == "dual-greene") {
        std::vector<long> a_values;
        std::stringstream ss(a_list);
        std::string part;
        while (std::getline(ss, part, ',')) a_values.push_back(std::stol(part));
        auto rep = verify_which == "greene" ? greene_check(h, a_values)
                                            : dual_greene_check(h, a_values);
        ok = rep.ok();
        for (const auto& pt : rep.exact_points)
          std::cout << "a=" << pt.a << " t=" << pt.t << " lhs=" << pt.lhs
                    << " rhs=" << pt.rhs << (pt.match ? " MATCH" : " MISMATCH") << "\n";
        std::cout << "float max rel err " << rep.max_rel_err << "\n";
        j = greene_json(rep);
      } else if (verify_which == "macwilliams") {
        auto rep = macwilliams_check(h);
        ok = rep.match;
        std::cout << (ok ? "MATCH" : "MISMATCH") << "\n";
        j = macwilliams_json(rep);
      } else if (verify_which == "axioms") {
        auto rep = check_axioms(rank_table(h, parse_base(opt.base_spec)));
        ok = rep.all_pass();
        std::cout << "P1 " << rep.p1 << " P2 " << rep.p2 << " P3 " << rep.p3
                  << " P3' " << rep.p3_prime << "\n";
        j = axiom_report_json(rep);
      } else {
        throw domain_error("unknown verification: " + verify_which);
      }
      emit(opt, j);
      return ok ? kExitOk : kExitVerifyFailed;
    }
    if (hyper_cmd->parsed()) {
      Hypergraph hg = hypergraph_from_file(hyp_path);
      Json j;
      bool ok = true;
      if (hyper_which == "chromatic") {
        Int brute = count_colorings(hg, lambda, (double)opt.cap);
        Int formula = chromatic_value(hg, lambda);
        ok = brute == formula;
        std::cout << "brute " << brute << "  lambda^kappa * chi " << formula << "  "
                  << (ok ? "MATCH" : "MISMATCH") << "\n";
        j["lambda"] = lambda;
        j["brute"] = brute.get_str();
        j["formula"] = formula.get_str();
        j["match"] = ok;
      } else if (hyper_which == "flow") {
        if (gamma_spec.empty()) throw domain_error("--gamma is required for flows");
        GroupPtr gamma = construct_group(gamma_spec);
        Int brute = count_nzflows(hg, gamma, (double)opt.cap);
        Int formula = flow_value(hg, gamma);
        ok = brute == formula;
        std::cout << "brute " << brute << "  chi_{P*}(|Gamma|) " << formula << "  "
                  << (ok ? "MATCH" : "MISMATCH") << "\n";
        j["gamma"] = gamma_spec;
        j["brute"] = brute.get_str();
        j["formula"] = formula.get_str();
        j["match"] = ok;
      } else {
        throw domain_error("unknown hypergraph computation: " + hyper_which);
      }
      emit(opt, j);
      return ok ? kExitOk : kExitVerifyFailed;
    }
    if (lap_cmd->parsed()) {
      Subgroup h = load_subgroup(opt);
      QuotientComplex c(h, opt.cap);
      if (lap_which == "spectrum") {
        int j = dim < 0 ? c.n() - 1 : dim;
        auto rep = laplacian_spectrum(c, j);
        std::cout << "char poly (ascending):";
        for (const auto& coeff : rep.char_poly) std::cout << " " << coeff;
        std::cout << "\ninteger roots:";
        for (const auto& [root, mult] : rep.integer_roots)
          std::cout << " " << root << "^" << mult;
        std::cout << "\nresidual degree " << (rep.residual.size() - 1) << "\n";
        emit(opt, laplacian_json(rep));
        return kExitOk;
      }
      if (lap_which == "betti") {
        auto rep = verify_top_homology(h);
        std::cout << "betti " << rep.betti << "  triv(empty) " << rep.triv_empty;
        if (rep.chi_dual_value) std::cout << "  chi_{P*}(b) " << *rep.chi_dual_value;
        std::cout << "  " << (rep.betti_matches_triv ? "MATCH" : "MISMATCH") << "\n";
        emit(opt, top_homology_json(rep));
        return rep.betti_matches_triv && (rep.chi_skipped || rep.betti_matches_chi)
                   ? kExitOk
                   : kExitVerifyFailed;
      }
      if (lap_which == "euler") {
        auto rep = euler_check(c);
        std::cout << "alternating sum " << rep.alternating_sum << "  top betti "
                  << rep.top_betti << "  "
                  << (rep.euler_matches ? "MATCH" : "MISMATCH") << "\n";
        emit(opt, euler_json(rep));
        return rep.euler_matches && rep.lower_bettis_vanish ? kExitOk : kExitVerifyFailed;
      }
      throw domain_error("unknown laplacian computation: " + lap_which);
    }
    if (suite_cmd->parsed()) {
      auto results = run_paper_suite();
      bool all = true;
      Json j = Json::array();
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
        all = all && r.pass;
        j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      }
      Json wrapper;
      wrapper["results"] = j;
      emit(opt, wrapper);
      return all ? kExitOk : kExitVerifyFailed;
    }
  } catch (const gpm::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
