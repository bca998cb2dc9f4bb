#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gpm/exact_linalg.hpp"
#include "gpm/group.hpp"
#include "gpm/polymatroid.hpp"
#include "gpm/reptheory.hpp"

namespace gpm {

// Faces of X/H are cosets g*H_S of the projected subgroup, one face set per
// coordinate subset S; the representative is the lexicographic minimum of the
// coset.  Boundary over S = {x_1 < ... < x_j}: facet i drops x_i with sign
// (-1)^{i-1}; the facet map is representative-independent because the action
// preserves coordinate blocks.
class QuotientComplex {
 public:
  explicit QuotientComplex(const Subgroup& h, long face_cap = 1000000);

  int n() const { return n_; }
  const Subgroup& subgroup() const { return h_; }

  long faces_in_dim(int j) const;              // j in [0, n-1]
  Int total_faces() const;                     // all dimensions, empty face excluded
  const std::vector<Tuple>& reps(Mask s) const { return per_subset_[s].reps; }
  long face_count(Mask s) const { return (long)per_subset_[s].reps.size(); }

  // boundary matrix from dimension j to j-1 (1 <= j <= n-1); rows are
  // (j-1)-faces, columns are j-faces
  SparseIntMatrix boundary(int j) const;
  // augmented partial_0: single row of ones onto the empty face
  SparseIntMatrix boundary0_augmented() const;

  // index of the face containing the given tuple over subset S
  long face_index(Mask s, const Tuple& tuple_over_s) const;
  // canonical representative of that face
  Tuple face_rep(Mask s, const Tuple& tuple_over_s) const;

  bool boundary_squares_to_zero() const;

 private:
  struct SubsetFaces {
    std::vector<Tuple> reps;                 // lexicographic order
    std::map<Tuple, long> index_of;          // representative -> position
    std::vector<Tuple> h_elements;           // elements of H_S
    long dim_offset = 0;                     // first face id within its dimension
  };
  Subgroup h_;
  int n_;
  std::vector<SubsetFaces> per_subset_;  // indexed by mask
};

struct SpectrumReport {
  int dim = -1;
  bool augmented = false;
  std::vector<Int> char_poly;                  // ascending, monic
  std::vector<std::pair<Int, int>> integer_roots;  // (root, multiplicity), descending
  std::vector<Int> residual;                   // integer factor with no integer roots
  bool psd_consistent = false;                 // sign pattern consistent with PSD
  bool splits_over_z = false;                  // residual degree 0

  std::vector<std::pair<Int, int>> eigenvalues() const { return integer_roots; }
};

// Delta_j = d_j^t d_j + d_{j+1} d_{j+1}^t, assembled over the integers.
// `augmented` adds the empty-face row to d_0 (the reduced-complex convention
// with C_{-1} = C[empty]); the default matches the graph Laplacian in
// dimension 0.  The two agree in every dimension j >= 1.
SpectrumReport laplacian_spectrum(const QuotientComplex& c, int j, bool augmented = false,
                                  long size_cap = 300);

struct PredictedSpectrum {
  bool hypothesis_ok = false;  // card(E - x) == card(E) for every x
  std::optional<int> failing_x;
  std::vector<std::pair<Int, Int>> eigen_mult;  // (eigenvalue, multiplicity), descending
};

// Top-dimension spectrum from the triv distribution: eigenvalue
// sum_{x in S} |Gamma_x| with multiplicity d(S).  With require_hypothesis,
// refuses (capability_error) when the free-action hypothesis fails.
PredictedSpectrum predicted_top_spectrum(const Subgroup& h, bool require_hypothesis = true);

struct ConeReport {
  int coordinate = 0;  // 1-based
  std::vector<std::pair<Int, int>> top_eigs;    // Delta_{n-1}(X/H)
  std::vector<std::pair<Int, int>> base_eigs;   // Delta_{n-2}(X'/H'), augmented
  bool shift_by_one = false;                    // multisets match after +1
  bool asserted = false;                        // only asserted for |Gamma_x| = 2
};

ConeReport coloop_cone_check(const Subgroup& h, int x_one_based);

Int top_betti(const QuotientComplex& c);

struct TopHomologyReport {
  Int betti = 0;
  Int triv_empty = 0;  // d(empty)
  std::optional<Rat> chi_dual_value;  // chi_{P*}(|Gamma|) when orders are equal
  bool betti_matches_triv = false;
  bool betti_matches_chi = false;  // false when chi route skipped
  bool chi_skipped = false;
};

TopHomologyReport verify_top_homology(const Subgroup& h);

struct EulerReport {
  Int alternating_sum = 0;        // sum over S of (-1)^{|S|-1} |G_S|/|H_S|, with S=empty
  Int top_betti = 0;
  bool euler_matches = false;     // alternating_sum == (-1)^{n-1} betti
  bool lower_bettis_vanish = false;
  std::vector<Int> reduced_betti;  // dimensions 0..n-1
};

EulerReport euler_check(const QuotientComplex& c);

}  // namespace gpm
