#include "flagiso/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flagiso;

namespace {

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

} // namespace

TEST(Linalg, NullspaceIsAnnihilatedAndHasComplementaryDimension) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    // Rank-deficient by construction: product of thin factors.
    std::size_t inner = 1 + trial % 4;
    QMatrix m = random_matrix(rng, 6, inner, 3) * random_matrix(rng, inner, 7, 3);
    QMatrix k = linalg::nullspace(m);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(k.cols() + linalg::rank(m), 7u);
  }
}

TEST(Linalg, ColumnEchelonIsCanonical) {
  std::mt19937 rng(11);
  QMatrix a = random_matrix(rng, 5, 3, 4);
  QMatrix change = random_matrix(rng, 3, 3, 2);
  change(0, 0) += 10;
  change(1, 1) += 10;
  change(2, 2) += 10;
  std::vector<std::size_t> p1, p2;
  QMatrix e1 = linalg::column_echelon(a, &p1);
  QMatrix e2 = linalg::column_echelon(a * change, &p2);
  EXPECT_EQ(e1, e2);
  EXPECT_EQ(p1, p2);
}

TEST(Linalg, SolveFindsConsistentSolutions) {
  QMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 3;
  std::vector<Rational> x;
  ASSERT_TRUE(linalg::solve(m, {Rational(1), Rational(2)}, x));
  EXPECT_EQ(x[0], Rational(1, 5));
  EXPECT_EQ(x[1], Rational(3, 5));
  QMatrix s(2, 1);
  s(0, 0) = 1;
  s(1, 0) = 1;
  EXPECT_FALSE(linalg::solve(s, {Rational(1), Rational(2)}, x));
}

TEST(Linalg, SparseSystemMatchesDenseNullspace) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t inner = 1 + trial % 5;
    QMatrix m = random_matrix(rng, 12, inner, 2) * random_matrix(rng, inner, 8, 2);
    // Some rational rows too.
    for (std::size_t c = 0; c < 8; ++c) m(0, c) /= 3;
    linalg::SparseSystem sys(8);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      std::vector<linalg::SparseSystem::Term> row;
      for (std::size_t c = 0; c < 8; ++c) row.emplace_back(c, m(r, c));
      sys.add(row);
    }
    QMatrix k = sys.solve();
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(k.cols(), linalg::nullspace(m).cols());
  }
}

TEST(Linalg, SparseSystemWithNoEquationsIsEverything) {
  linalg::SparseSystem sys(3);
  EXPECT_EQ(sys.solve().cols(), 3u);
}
