#pragma once

#include "gpm/group.hpp"
#include "gpm/hypergraph.hpp"
#include "gpm/polymatroid.hpp"

namespace gpm {
namespace bundled {

GroupProduct s3_pair();

// order-6 subgroup of S3 x S3 generated by ((12),(12)) and (e,(123));
// projections have orders 2 and 6
Subgroup s3_mixed();

// diagonal embedding of S3 in S3 x S3
Subgroup s3_diagonal();

// {(sigma, tau) : sign(sigma) = sign(tau)}, order 18
Subgroup s3_sign_pair();

// subgroup of (Z/6)^3 generated by (1,2,3) and (2,1,4); order 36, quotient
// complex has 3 vertices and 6 edges with an irrational Laplacian spectrum
Subgroup z6_cube();

// row spaces of two 3x6 binary matrices with the same dual weight
// distribution: {110000, 001100, 000011} and {100111, 010100, 001100}
Subgroup binary_code_a();
Subgroup binary_code_b();

// V = {a,b,c,d}, E = {{a,b,c},{a,b,b,d},{a,b,b,b},{c,d}}
Hypergraph four_edge_hypergraph();

// five tuples in {0,1}^3 whose projection counts violate submodularity
RawSubset nonsubmodular_subset();

// uniform matroids as explicit tables over the given base
RankTable uniform_table(int d, int n, const Rat& base);

// r(S) = min(1, |S|/2) on four elements over base 4
RankTable half_rank_table();

}  // namespace bundled
}  // namespace gpm
