#include "gpm/laplacian.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gpm/errors.hpp"

namespace gpm {

QuotientComplex::QuotientComplex(const Subgroup& h, long face_cap) : h_(h) {
  n_ = h.parent().arity();
  if (n_ < 1) throw domain_error("quotient complex needs at least one coordinate");
  size_t total = size_t(1) << n_;
  per_subset_.resize(total);

  Int face_total = 0;
  for (Mask s = 0; s < (Mask)total; ++s) {
    Int faces = h.parent().order_of_subset(s) / Int((long)project(h_, s).size());
    face_total += faces;
    if (face_total > face_cap) throw scale_error("face count exceeds cap");
  }

  for (Mask s = 0; s < (Mask)total; ++s) {
    SubsetFaces& sf = per_subset_[s];
    Subgroup hs = project(h_, s);
    sf.h_elements = hs.elements();
    // orbit scan of G_S in lexicographic order; first visit discovers the
    // lexicographic minimum of each coset, so reps come out sorted
    GroupProduct gs = h.parent().restricted(s);
    int arity = gs.arity();
    std::set<Tuple> visited;
    Tuple t(arity, 0);
    while (true) {
      if (!visited.count(t)) {
        sf.index_of[t] = (long)sf.reps.size();
        sf.reps.push_back(t);
        for (const auto& he : sf.h_elements) {
          Tuple orb = gs.mul(t, he);
          visited.insert(orb);
        }
      }
      int i = arity - 1;
      while (i >= 0) {
        if (++t[i] < gs.factor(i).order()) break;
        t[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }

  std::vector<long> per_dim(n_ + 1, 0);
  for (Mask s = 0; s < (Mask)total; ++s) {
    int dim = popcount(s);
    per_subset_[s].dim_offset = per_dim[dim];
    per_dim[dim] += (long)per_subset_[s].reps.size();
  }
}

long QuotientComplex::faces_in_dim(int j) const {
  if (j < 0 || j >= n_) return 0;
  long count = 0;
  for (Mask s = 0; s < (Mask)per_subset_.size(); ++s)
    if (popcount(s) == j + 1) count += (long)per_subset_[s].reps.size();
  return count;
}

Int QuotientComplex::total_faces() const {
  Int count = 0;
  for (Mask s = 1; s < (Mask)per_subset_.size(); ++s)
    count += (long)per_subset_[s].reps.size();
  return count;
}

Tuple QuotientComplex::face_rep(Mask s, const Tuple& tuple_over_s) const {
  const SubsetFaces& sf = per_subset_[s];
  GroupProduct gs = h_.parent().restricted(s);
  Tuple best;
  bool first = true;
  for (const auto& he : sf.h_elements) {
    Tuple orb = gs.mul(tuple_over_s, he);
    if (first || orb < best) {
      best = std::move(orb);
      first = false;
    }
  }
  return best;
}

long QuotientComplex::face_index(Mask s, const Tuple& tuple_over_s) const {
  Tuple rep = face_rep(s, tuple_over_s);
  auto it = per_subset_[s].index_of.find(rep);
  if (it == per_subset_[s].index_of.end())
    throw consistency_error("face representative not found");
  return it->second;
}

SparseIntMatrix QuotientComplex::boundary(int j) const {
  if (j < 1 || j > n_ - 1) throw domain_error("boundary dimension out of range");
  SparseIntMatrix b;
  b.rows = faces_in_dim(j - 1);
  b.cols = faces_in_dim(j);
  size_t total = per_subset_.size();
  for (Mask s = 0; s < (Mask)total; ++s) {
    if (popcount(s) != j + 1) continue;
    const SubsetFaces& sf = per_subset_[s];
    auto coords = bits_of(s);
    for (long f = 0; f < (long)sf.reps.size(); ++f) {
      const Tuple& rep = sf.reps[f];
      long col = sf.dim_offset + f;
      for (size_t i = 0; i < coords.size(); ++i) {
        Mask facet_mask = s & ~(Mask(1) << coords[i]);
        Tuple proj;
        proj.reserve(coords.size() - 1);
        for (size_t c = 0; c < coords.size(); ++c)
          if (c != i) proj.push_back(rep[c]);
        long row = per_subset_[facet_mask].dim_offset + face_index(facet_mask, proj);
        b.entries.emplace_back(row, col, (i % 2 == 0) ? 1 : -1);
      }
    }
  }
  return b;
}

SparseIntMatrix QuotientComplex::boundary0_augmented() const {
  SparseIntMatrix b;
  b.rows = 1;
  b.cols = faces_in_dim(0);
  for (long c = 0; c < b.cols; ++c) b.entries.emplace_back(0, c, 1);
  return b;
}

bool QuotientComplex::boundary_squares_to_zero() const {
  for (int j = 2; j <= n_ - 1; ++j) {
    auto prod = mat_mul(boundary(j - 1).dense(), boundary(j).dense());
    for (const auto& row : prod)
      for (const auto& v : row)
        if (v != 0) return false;
  }
  if (n_ >= 2) {
    auto prod = mat_mul(boundary0_augmented().dense(), boundary(1).dense());
    for (const auto& row : prod)
      for (const auto& v : row)
        if (v != 0) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<Int>> add_mat(std::vector<std::vector<Int>> a,
                                      const std::vector<std::vector<Int>>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
  return a;
}

bool alternating_signs(const std::vector<Int>& ascending) {
  // det(tI - M) with PSD M: coefficient of t^k has sign (-1)^{deg-k} or is 0
  int deg = (int)ascending.size() - 1;
  for (int k = 0; k <= deg; ++k) {
    if (ascending[k] == 0) continue;
    bool negative = ascending[k] < 0;
    if (((deg - k) % 2 == 1) != negative) return false;
  }
  return true;
}

}  // namespace

SpectrumReport laplacian_spectrum(const QuotientComplex& c, int j, bool augmented,
                                  long size_cap) {
  if (j < 0 || j > c.n() - 1) throw domain_error("dimension out of range");
  long m = c.faces_in_dim(j);
  if (m > size_cap) throw scale_error("Laplacian dimension exceeds cap");

  std::vector<std::vector<Int>> delta((size_t)m, std::vector<Int>((size_t)m, Int(0)));
  if (j >= 1) delta = add_mat(std::move(delta), gram_tt(c.boundary(j)));
  else if (augmented) delta = add_mat(std::move(delta), gram_tt(c.boundary0_augmented()));
  if (j + 1 <= c.n() - 1) delta = add_mat(std::move(delta), gram(c.boundary(j + 1)));

  SpectrumReport rep;
  rep.dim = j;
  rep.augmented = augmented;
  rep.char_poly = charpoly_berkowitz(delta);

  Int trace = 0;
  for (long i = 0; i < m; ++i) trace += delta[i][i];
  auto split = split_integer_roots(rep.char_poly, trace);
  rep.integer_roots = std::move(split.roots);
  rep.residual = std::move(split.residual);
  rep.splits_over_z = rep.residual.size() <= 1;
  // PSD: the full polynomial alternates, and the residual (in -t) keeps one sign
  bool resid_ok = true;
  for (size_t k = 0; k < rep.residual.size(); ++k) {
    Int v = rep.residual[k];
    if (v == 0) continue;
    bool negative = v < 0;
    int deg = (int)rep.residual.size() - 1;
    if ((((deg - (int)k) % 2) == 1) != negative) resid_ok = false;
  }
  rep.psd_consistent = alternating_signs(rep.char_poly) && resid_ok;
  return rep;
}

PredictedSpectrum predicted_top_spectrum(const Subgroup& h, bool require_hypothesis) {
  RankTable p = rank_table(h);
  PredictedSpectrum out;
  out.hypothesis_ok = true;
  Mask full = p.full();
  for (int x = 0; x < p.n; ++x) {
    if (p.card[full & ~(Mask(1) << x)] != p.card[full]) {
      out.hypothesis_ok = false;
      out.failing_x = x + 1;
      break;
    }
  }
  if (!out.hypothesis_ok && require_hypothesis)
    throw capability_error(
        "spectrum prediction needs card(E - x) = card(E) for all x; fails at x = " +
        std::to_string(*out.failing_x));

  auto d = exact_triv_distribution(h);
  std::map<Int, Int> agg;
  for (Mask s = 0; s < (Mask)d.size(); ++s) {
    if (d[s] == 0) continue;
    Int eig = 0;
    for (int x : bits_of(s)) eig += h.parent().factor(x).order();
    agg[eig] += d[s];
  }
  for (auto it = agg.rbegin(); it != agg.rend(); ++it)
    out.eigen_mult.emplace_back(it->first, it->second);
  return out;
}

ConeReport coloop_cone_check(const Subgroup& h, int x_one_based) {
  int x = x_one_based - 1;
  const GroupProduct& g = h.parent();
  int n = g.arity();
  if (x < 0 || x >= n) throw domain_error("coordinate out of range");
  RankTable p = rank_table(h);
  Mask full = p.full(), bx = Mask(1) << x;
  // coloop: card(E) = card(E-x) * |Gamma_x| with card({x}) = |Gamma_x| > 1
  bool coloop = g.factor(x).order() > 1 &&
                p.card[bx] == g.factor(x).order() &&
                p.card[full] == p.card[full & ~bx] * p.card[bx];
  if (!coloop) throw domain_error("coordinate " + std::to_string(x_one_based) +
                                  " is not a coloop");
  if (n < 2) throw domain_error("cone check needs at least two coordinates");

  ConeReport rep;
  rep.coordinate = x_one_based;
  QuotientComplex top(h);
  rep.top_eigs = laplacian_spectrum(top, n - 1).integer_roots;

  Subgroup base = project(h, full & ~bx);
  QuotientComplex basec(base);
  // reduced Laplacian on the base: the cone identity needs the empty face
  rep.base_eigs = laplacian_spectrum(basec, n - 2, /*augmented=*/n - 2 == 0).integer_roots;

  std::map<Int, long> lhs, rhs;
  for (const auto& [eig, mult] : rep.top_eigs) lhs[eig] += mult;
  for (const auto& [eig, mult] : rep.base_eigs) rhs[eig + 1] += mult;
  rep.shift_by_one = lhs == rhs;
  rep.asserted = g.factor(x).order() == 2;
  return rep;
}

Int top_betti(const QuotientComplex& c) {
  int n = c.n();
  long top = c.faces_in_dim(n - 1);
  long rank = n >= 2 ? rank_of(c.boundary(n - 1)) : rank_of(c.boundary0_augmented());
  return Int(top - rank);
}

TopHomologyReport verify_top_homology(const Subgroup& h) {
  TopHomologyReport rep;
  QuotientComplex c(h);
  rep.betti = top_betti(c);
  auto d = exact_triv_distribution(h);
  rep.triv_empty = d[0];
  rep.betti_matches_triv = rep.betti == rep.triv_empty;

  RankTable p = rank_table(h);
  if (p.base.resolved()) {
    RankTable dual = a_dual(p, AlphaVector::from_factor_orders(p));
    rep.chi_dual_value = eval_at_power(char_poly(dual), 1);
    rep.betti_matches_chi = Rat(rep.betti) == *rep.chi_dual_value;
  } else {
    rep.chi_skipped = true;
  }
  return rep;
}

EulerReport euler_check(const QuotientComplex& c) {
  EulerReport rep;
  const Subgroup& h = c.subgroup();
  int n = c.n();
  size_t total = size_t(1) << n;
  for (Mask s = 0; s < (Mask)total; ++s) {
    Int faces = h.parent().order_of_subset(s) / Int((long)project(h, s).size());
    rep.alternating_sum += (popcount(s) % 2 == 1) ? faces : -faces;
  }
  rep.top_betti = top_betti(c);
  Int expect = (n % 2 == 1) ? rep.top_betti : -rep.top_betti;
  rep.euler_matches = rep.alternating_sum == expect;

  // reduced Betti numbers from augmented boundaries
  std::vector<long> rank(n + 1, 0);  // rank[j] = rank of d_j (augmented at j=0)
  rank[0] = rank_of(c.boundary0_augmented());
  for (int j = 1; j <= n - 1; ++j) rank[j] = rank_of(c.boundary(j));
  rep.lower_bettis_vanish = true;
  for (int j = 0; j <= n - 1; ++j) {
    Int b = c.faces_in_dim(j) - rank[j] - (j + 1 <= n - 1 ? rank[j + 1] : 0);
    rep.reduced_betti.push_back(b);
    if (j < n - 1 && b != 0) rep.lower_bettis_vanish = false;
  }
  return rep;
}

}  // namespace gpm
