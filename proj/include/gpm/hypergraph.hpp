#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gpm/exact_linalg.hpp"
#include "gpm/group.hpp"
#include "gpm/polymatroid.hpp"

namespace gpm {

// Multiset hyperedges over named vertices; an edge is a sorted list of vertex
// indices with repetition.
struct Hypergraph {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> edges;

  int edge_size(int x) const { return (int)edges[x].size(); }
};

// File format: one edge per line, vertices whitespace-separated (repeat for
// multiplicity); "vertex z" declares an isolated vertex.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph hypergraph_from_file(const std::string& path);

// Signed incidence matrix of the union-of-stars graph: one block of |x|-1
// columns per edge, anchored at the edge's maximum-indexed vertex (or the
// minimum-indexed one, used to confirm anchor independence).  Loop columns at
// the anchor are zero.
struct StarGraphMatrix {
  long rows = 0, cols = 0;
  std::vector<std::vector<int>> a;            // dense rows x cols, entries -1/0/1
  std::vector<std::pair<int, int>> block;     // per edge: [begin, end) column range
  std::vector<int> anchor;                    // per edge: anchor vertex
  int kappa = 0;                              // components, isolated vertices included
};

StarGraphMatrix star_graph(const Hypergraph& h, bool min_anchor = false);

// Integer polymatroid: rank(S) = column rank of the union of blocks in S.
struct IntPolymatroid {
  int n = 0;
  std::vector<int> rank;  // 2^n entries
};

IntPolymatroid hyper_polymatroid(const Hypergraph& h, bool min_anchor = false);

// card(S) = base^{rank(S)} as an exact table.
RankTable to_rank_table(const IntPolymatroid& p, const Rat& base);

// a_x = |x|-1 encoded multiplicatively over the given base.
AlphaVector flow_alpha(const Hypergraph& h, const Rat& base);

// Brute-force proper colorings with lambda colors; lambda^|V| <= budget.
Int count_colorings(const Hypergraph& h, long lambda, double budget = 1e8);

// lambda^{kappa} * chi_{P(H)}(lambda), exact.
Int chromatic_value(const Hypergraph& h, long lambda);

// Nowhere-zero flows with values in an abelian group: gamma-vectors in the
// kernel of A(H) whose blocks are all non-identity-free.
Int count_nzflows(const Hypergraph& h, const GroupPtr& gamma, double budget = 1e8);

// chi_{P(H)^{*a}}(|Gamma|) with a_x = |x|-1, exact.
Int flow_value(const Hypergraph& h, const GroupPtr& gamma);

// Proper-coloring count for lambda = |Gamma| computed through the group
// machinery: |Gamma|^kappa * chi_{P(H')}(|Gamma|) for the image subgroup H'.
Int coloring_count_via_group(const Hypergraph& h, const GroupPtr& gamma,
                             size_t cap = 1000000);

// Total unimodularity spot check: every square submatrix up to max_size has
// determinant in {-1,0,1}.
bool totally_unimodular_upto(const StarGraphMatrix& m, int max_size = 5);

}  // namespace gpm
