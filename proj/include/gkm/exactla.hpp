#pragma once

// Exact linear algebra over the rationals via integer-only elimination.
// Rank is all the engine ever needs: kernel dimensions for the graded rank
// counts and full-rank certificates for determinant tests.

#include "gkm/poly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gkm {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // dense row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  IntMatrix transpose() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }
};

namespace detail {

inline void strip_row_content(IntMatrix& m, int row, int from_col) {
  Int g = 0;
  for (int j = from_col; j < m.cols; ++j) {
    if (m.at(row, j) != 0) g = gcd(g, m.at(row, j));
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (int j = from_col; j < m.cols; ++j)
    if (m.at(row, j) != 0) m.at(row, j) /= g;
}

}  // namespace detail

// Rank over Q by fraction-free cross-multiplication elimination.  Every
// entry stays an exact integer; rows are divided by their content after each
// update to keep growth down, which changes nothing about the rank.  Pivots
// are chosen with minimal absolute value in the current column.
inline int rank(IntMatrix m) {
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      if (pivot < 0 ||
          mpz_cmpabs(m.at(i, col).get_mpz_t(), m.at(pivot, col).get_mpz_t()) < 0)
        pivot = i;
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = col; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));

    const Int p = m.at(r, col);
    for (int i = r + 1; i < m.rows; ++i) {
      const Int q = m.at(i, col);
      if (q == 0) continue;
      const Int g = gcd(p, q);
      const Int pp = p / g, qq = q / g;
      m.at(i, col) = 0;
      for (int j = col + 1; j < m.cols; ++j)
        m.at(i, j) = pp * m.at(i, j) - qq * m.at(r, j);
      detail::strip_row_content(m, i, col + 1);
    }
    ++r;
  }
  return r;
}

inline int kernel_dimension(const IntMatrix& m) { return m.cols - rank(m); }

struct PolyMatrix {
  int n = 0;
  std::vector<Poly> a;  // dense row-major, n x n

  explicit PolyMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}

  Poly& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Poly& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

namespace detail {

// Exact determinant by dynamic programming over column subsets
// (O(2^n n) ring multiplications); only used as the fallback when random
// evaluation keeps vanishing.
inline Poly determinant_exact(const PolyMatrix& m) {
  const int n = m.n;
  std::vector<Poly> d(std::size_t(1) << n);
  d[0] = Poly(Int(1));
  for (std::uint32_t mask = 1; mask < d.size(); ++mask) {
    const int row = __builtin_popcount(mask) - 1;
    Poly acc;
    int seen = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const Poly sub = m.at(row, j) * d[mask & ~(1u << j)];
      acc += (seen % 2 == 0) ? sub : -sub;
      ++seen;
    }
    d[mask] = std::move(acc);
  }
  return d[d.size() - 1];
}

}  // namespace detail

// Whether det(m) is nonzero as a polynomial.  Evaluation at seeded random
// integer points decides almost every nonzero case immediately and can never
// yield a false positive; if all evaluations vanish the exact determinant is
// computed, so the answer is sound in both directions and deterministic for
// a fixed seed.
inline bool nonzero_determinant(const PolyMatrix& m, std::uint64_t seed = 12345) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::array<Int, 3> point;
    for (auto& x : point) x = Int(static_cast<long>(rng() % 199) - 99);
    IntMatrix eval(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) eval.at(i, j) = m.at(i, j).evaluate(point);
    if (rank(std::move(eval)) == m.n) return true;
  }
  return !detail::determinant_exact(m).is_zero();
}

}  // namespace gkm
