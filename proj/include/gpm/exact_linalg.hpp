#pragma once

#include <vector>

#include "gpm/numeric.hpp"

namespace gpm {

// Sparse integer matrix in (row, col, value) triplets.
struct SparseIntMatrix {
  long rows = 0, cols = 0;
  std::vector<std::tuple<long, long, int>> entries;

  std::vector<std::vector<Int>> dense() const;
  SparseIntMatrix transpose() const;
};

// rank over Q by fraction-free Gaussian elimination
long rank_rational(std::vector<std::vector<Rat>> m);
long rank_of(const SparseIntMatrix& m);

// C = A * B over Z (dense)
std::vector<std::vector<Int>> mat_mul(const std::vector<std::vector<Int>>& a,
                                      const std::vector<std::vector<Int>>& b);

// A^t * A for a sparse matrix, returned dense (cols x cols)
std::vector<std::vector<Int>> gram_tt(const SparseIntMatrix& a);
// A * A^t, dense (rows x rows)
std::vector<std::vector<Int>> gram(const SparseIntMatrix& a);

// Characteristic polynomial det(lambda I - M) of an integer matrix by the
// division-free Samuelson-Berkowitz algorithm.  Ascending coefficients,
// monic: result[deg] == 1.
std::vector<Int> charpoly_berkowitz(const std::vector<std::vector<Int>>& m);

// Repeatedly divides out integer roots in [0, root_bound] found by divisor
// tests on the constant term; returns (root, multiplicity) pairs sorted
// descending and the residual factor (ascending coefficients, possibly {1}).
struct IntegerRootSplit {
  std::vector<std::pair<Int, int>> roots;
  std::vector<Int> residual;
};
IntegerRootSplit split_integer_roots(std::vector<Int> poly, const Int& root_bound);

// Horner evaluation.
Int poly_eval(const std::vector<Int>& poly, const Int& x);

}  // namespace gpm
