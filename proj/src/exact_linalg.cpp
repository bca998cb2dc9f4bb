#include "gpm/exact_linalg.hpp"

#include <algorithm>

#include "gpm/errors.hpp"

namespace gpm {

std::vector<std::vector<Int>> SparseIntMatrix::dense() const {
  std::vector<std::vector<Int>> m((size_t)rows, std::vector<Int>((size_t)cols, Int(0)));
  for (const auto& [r, c, v] : entries) m[r][c] += v;
  return m;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t;
  t.rows = cols;
  t.cols = rows;
  for (const auto& [r, c, v] : entries) t.entries.emplace_back(c, r, v);
  return t;
}

long rank_rational(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  long rank = 0;
  size_t pr = 0;
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t piv = pr;
    while (piv < rows && m[piv][pc] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[pr], m[piv]);
    Rat inv = Rat(1) / m[pr][pc];
    for (size_t c = pc; c < cols; ++c) m[pr][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || m[r][pc] == 0) continue;
      Rat f = m[r][pc];
      for (size_t c = pc; c < cols; ++c) m[r][c] -= f * m[pr][c];
    }
    ++pr;
    ++rank;
  }
  return rank;
}

long rank_of(const SparseIntMatrix& m) {
  std::vector<std::vector<Rat>> d((size_t)m.rows, std::vector<Rat>((size_t)m.cols, Rat(0)));
  for (const auto& [r, c, v] : m.entries) d[r][c] += v;
  return rank_rational(std::move(d));
}

std::vector<std::vector<Int>> mat_mul(const std::vector<std::vector<Int>>& a,
                                      const std::vector<std::vector<Int>>& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<Int>> out(n, std::vector<Int>(m, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j)
        if (b[l][j] != 0) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

std::vector<std::vector<Int>> gram_tt(const SparseIntMatrix& a) {
  // group entries per row, then accumulate products of co-row entries
  std::vector<std::vector<std::pair<long, int>>> by_row((size_t)a.rows);
  for (const auto& [r, c, v] : a.entries) by_row[r].emplace_back(c, v);
  std::vector<std::vector<Int>> out((size_t)a.cols, std::vector<Int>((size_t)a.cols, Int(0)));
  for (const auto& row : by_row)
    for (const auto& [c1, v1] : row)
      for (const auto& [c2, v2] : row) out[c1][c2] += (long)v1 * v2;
  return out;
}

std::vector<std::vector<Int>> gram(const SparseIntMatrix& a) {
  return gram_tt(a.transpose());
}

std::vector<Int> charpoly_berkowitz(const std::vector<std::vector<Int>>& m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw domain_error("characteristic polynomial needs a square matrix");
  if (n == 0) return {Int(1)};

  // poly holds descending coefficients of the char poly of the leading
  // principal r x r block; starts with the 1 x 1 block
  std::vector<Int> poly{Int(1), -m[0][0]};
  for (size_t r = 1; r < n; ++r) {
    // s_j = R * A^j * C for the leading block A, row R = m[r][0..r-1],
    // column C = m[0..r-1][r], a = m[r][r]
    std::vector<Int> vec(r);
    for (size_t i = 0; i < r; ++i) vec[i] = m[i][r];
    std::vector<Int> s;
    s.reserve(r);
    for (size_t j = 0; j + 1 <= r; ++j) {
      Int dot = 0;
      for (size_t i = 0; i < r; ++i) dot += m[r][i] * vec[i];
      s.push_back(dot);
      if (j + 2 <= r) {
        std::vector<Int> next(r, Int(0));
        for (size_t i = 0; i < r; ++i) {
          if (vec[i] == 0) continue;
          for (size_t i2 = 0; i2 < r; ++i2) next[i2] += m[i2][i] * vec[i];
        }
        vec = std::move(next);
      }
    }
    // first column of the (r+2) x (r+1) Toeplitz transform
    std::vector<Int> col;
    col.reserve(r + 2);
    col.push_back(Int(1));
    col.push_back(-m[r][r]);
    for (size_t j = 0; j + 1 <= r; ++j) col.push_back(-s[j]);
    std::vector<Int> next(r + 2, Int(0));
    for (size_t i = 0; i < poly.size(); ++i)
      for (size_t j = 0; i + j < r + 2 && j < col.size(); ++j)
        next[i + j] += poly[i] * col[j];
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());  // ascending
  return poly;
}

Int poly_eval(const std::vector<Int>& poly, const Int& x) {
  Int out = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) out = out * x + *it;
  return out;
}

namespace {

// exact synthetic division by (x - root); poly ascending, must divide evenly
std::vector<Int> deflate(const std::vector<Int>& poly, const Int& root) {
  std::vector<Int> q(poly.size() - 1, Int(0));
  Int carry = 0;
  for (size_t i = poly.size(); i-- > 1;) {
    carry = poly[i] + carry * root;
    q[i - 1] = carry;
  }
  if (poly[0] + carry * root != 0) throw consistency_error("inexact deflation");
  return q;
}

}  // namespace

IntegerRootSplit split_integer_roots(std::vector<Int> poly, const Int& root_bound) {
  IntegerRootSplit out;
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  if (poly.empty()) throw domain_error("zero polynomial");

  int zero_mult = 0;
  while (poly.size() > 1 && poly[0] == 0) {
    poly.erase(poly.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Int(0), zero_mult);

  for (Int d = 1; d <= root_bound && poly.size() > 1; ++d) {
    if (!divides(d, poly[0])) continue;
    int mult = 0;
    while (poly.size() > 1 && poly_eval(poly, d) == 0) {
      poly = deflate(poly, d);
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(d, mult);
  }
  std::sort(out.roots.rbegin(), out.roots.rend());
  out.residual = std::move(poly);
  return out;
}

}  // namespace gpm
