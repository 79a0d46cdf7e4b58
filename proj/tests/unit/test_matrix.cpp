#include <gtest/gtest.h>

#include <random>

#include "k3/matrix.hpp"
#include "k3/modarith.hpp"
#include "k3/multipoly.hpp"
#include "oracles.hpp"

using namespace k3;

TEST(Determinant, MatchesCofactorExpansionUpToSixBySix) {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<long> e(-50, 50);
  std::uniform_int_distribution<int> sparse(0, 3);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      oracle::Grid grid(n, std::vector<mpz_class>(n));
      Matrix<Scalar> m(n, n, Scalar(0));
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          // Every fourth trial is sparse to exercise pivoting.
          const long v = (trial % 4 == 0 && sparse(gen) != 0) ? 0 : e(gen);
          grid[r][c] = v;
          m(r, c) = Scalar(v);
        }
      }
      const mpz_class expected = oracle::cofactor_determinant(grid);
      EXPECT_EQ(determinant(m), Scalar(expected));
      EXPECT_EQ(bareiss_determinant(m), Scalar(expected));

      Matrix<Scalar> q(n, n, Scalar(0));
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) q(r, c) = Scalar(mpq_class(grid[r][c], 3));
      }
      mpq_class scale = 1;
      for (std::size_t k = 0; k < n; ++k) scale /= 3;
      EXPECT_EQ(determinant(q), Scalar(mpq_class(expected) * scale));

      const std::uint64_t p = modarith::kDefaultPrime;
      Matrix<Scalar> mp(n, n, Scalar::modular(0, p));
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) mp(r, c) = m(r, c).reduce_mod(p);
      }
      EXPECT_EQ(determinant(mp), Scalar(expected).reduce_mod(p));
    }
  }
}

TEST(Determinant, PolynomialEntries) {
  const auto vars = VariableTable::make({"a", "b", "c", "d"});
  const CoeffRing zz = CoeffRing::integers();
  Matrix<MultiPoly> m(2, 2, MultiPoly(vars, zz));
  for (std::size_t i = 0; i < 4; ++i) m(i / 2, i % 2) = MultiPoly::variable(vars, zz, i);
  const auto det = bareiss_determinant(m);
  EXPECT_EQ(det, m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
}

TEST(Rank, ModPAndInteger) {
  // Rows 0 and 1 are independent, row 2 = row 0 + 2 row 1.
  std::vector<mpz_class> a{1, 2, 3, 4, 0, 1, 1, 0, 1, 4, 5, 4};
  EXPECT_EQ(integer_rank(a, 3, 4), 2U);
  std::vector<std::uint64_t> r;
  for (const auto& v : a) r.push_back(v.get_ui());
  EXPECT_EQ(rank_mod_p(r, 3, 4, 101), 2U);
  EXPECT_EQ(integer_rank(std::vector<mpz_class>(6, 0), 2, 3), 0U);
  // Rank drops modulo 5 but not over Q.
  std::vector<mpz_class> b{1, 0, 0, 5};
  EXPECT_EQ(integer_rank(b, 2, 2), 2U);
  EXPECT_EQ(rank_mod_p({1, 0, 0, 0}, 2, 2, 5), 1U);
}
