#include "gkm/exactla.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace gkm;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = Int(rows[i][j]);
  return m;
}

// Naive oracle: Gaussian elimination over Q with explicit rationals.
int rank_rational_oracle(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows, std::vector<mpq_class>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) a[i][j] = mpq_class(m.at(i, j));
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[r]);
    for (int i = r + 1; i < m.rows; ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class factor = a[i][c] / a[r][c];
      for (int j = c; j < m.cols; ++j) a[i][j] -= factor * a[r][j];
    }
    ++r;
  }
  return r;
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  IntMatrix m(rows, cols);
  for (auto& x : m.a) x = Int(static_cast<long>(rng() % 11) - 5);
  return m;
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(rank(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(rank(from_rows({{0, 0}, {0, 0}})) == 0);
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(IntMatrix(0, 5)) == 0);
}

TEST_CASE("kernel dimension") {
  CHECK(kernel_dimension(from_rows({{1, 0}, {0, 1}})) == 0);
  CHECK(kernel_dimension(IntMatrix(3, 4)) == 4);
  CHECK(kernel_dimension(from_rows({{1, 1, 1}})) == 2);
}

TEST_CASE("rank properties on random matrices") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    const IntMatrix m = random_matrix(rng, rows, cols);

    const int r = rank(m);
    CHECK(r == rank_rational_oracle(m));
    CHECK(r == rank(m.transpose()));
    CHECK(kernel_dimension(m) + r == cols);

    // Row scaling and swaps do not change the rank.
    IntMatrix scaled = m;
    for (int j = 0; j < cols; ++j) scaled.at(0, j) *= 7;
    CHECK(rank(scaled) == r);
    if (rows > 1) {
      IntMatrix swapped = m;
      for (int j = 0; j < cols; ++j) std::swap(swapped.at(0, j), swapped.at(1, j));
      CHECK(rank(swapped) == r);
    }
  }
}

TEST_CASE("rank survives coefficient growth") {
  // Hilbert-like matrix scaled to integers: notoriously ill-conditioned in
  // floating point, exact here.
  const int n = 8;
  IntMatrix m(n, n);
  Int lcm = 1;
  for (int k = 1; k <= 2 * n; ++k) lcm = lcm * k / gcd(lcm, Int(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = lcm / (i + j + 1);
  CHECK(rank(m) == n);
}

TEST_CASE("nonzero determinant of polynomial matrices") {
  PolyMatrix diag(3);
  diag.at(0, 0) = Poly::variable(1);
  diag.at(1, 1) = Poly::variable(2) * Poly::variable(2);
  diag.at(2, 2) = s_poly(1);
  CHECK(nonzero_determinant(diag));

  PolyMatrix repeated(3);
  for (int j = 0; j < 3; ++j) {
    repeated.at(0, j) = Poly::variable(j + 1);
    repeated.at(1, j) = Poly::variable(j + 1);  // same row twice
    repeated.at(2, j) = s_poly(j + 1);
  }
  CHECK_FALSE(nonzero_determinant(repeated));

  // Zero determinant that is invisible to naive sampling of a single entry:
  // product structure (x)(x) - (x^2)(1).
  PolyMatrix sneaky(2);
  sneaky.at(0, 0) = Poly::variable(1);
  sneaky.at(0, 1) = Poly::variable(1) * Poly::variable(1);
  sneaky.at(1, 0) = Poly(Int(1));
  sneaky.at(1, 1) = Poly::variable(1);
  CHECK_FALSE(nonzero_determinant(sneaky));
}
