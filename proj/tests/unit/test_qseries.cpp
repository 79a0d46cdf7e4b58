#include <gtest/gtest.h>

#include "k3/invariants.hpp"
#include "k3/qseries.hpp"
#include "oracles.hpp"

using namespace k3;

namespace {

QSeries poly(int valuation, std::initializer_list<long> c) {
  std::vector<mpq_class> v;
  for (long x : c) v.emplace_back(x);
  return QSeries(valuation, std::move(v));
}

}  // namespace

TEST(DivisorSigma, MatchesBruteForce) {
  for (unsigned k : {0U, 1U, 3U, 5U}) {
    for (unsigned long n = 1; n <= 60; ++n) EXPECT_EQ(divisor_sigma(k, n), oracle::sigma(k, n));
  }
}

TEST(Eisenstein, E4) {
  const auto e4 = eisenstein(4, 5);
  EXPECT_EQ(e4.coefficient(0), 1);
  EXPECT_EQ(e4.coefficient(1), 240);
  EXPECT_EQ(e4.coefficient(2), 2160);
  for (unsigned long n = 1; n <= 5; ++n) EXPECT_EQ(e4.coefficient(static_cast<int>(n)), 240 * oracle::sigma(3, n));
}

TEST(Eisenstein, E6) {
  const auto e6 = eisenstein(6, 5);
  EXPECT_EQ(e6.coefficient(1), -504);
  EXPECT_EQ(e6.coefficient(2), -504 * oracle::sigma(5, 2));
  EXPECT_EQ(e6.coefficient(2), -16632);
  EXPECT_THROW(eisenstein(8, 5), PreconditionError);
}

TEST(Series, Arithmetic) {
  EXPECT_EQ(poly(0, {1, 1, 0, 0}) * poly(0, {1, -1, 0, 0}), poly(0, {1, 0, -1, 0}));
  const auto geometric = poly(0, {1, -1, 0, 0, 0, 0}).reciprocal();
  for (int e = 0; e <= 5; ++e) EXPECT_EQ(geometric.coefficient(e), 1);
  EXPECT_THROW(geometric.coefficient(6), PreconditionError);
  EXPECT_THROW(QSeries::zero(5).reciprocal(), PreconditionError);
}

TEST(Series, LaurentPrecision) {
  const auto a = poly(1, {2, 3, 5, 7});  // known through q^4
  const auto inv = a.reciprocal();
  EXPECT_EQ(inv.valuation(), -1);
  EXPECT_EQ(inv.precision(), 2);
  const auto one = a * inv;
  EXPECT_EQ(one.coefficient(0), 1);
  for (int e = 1; e <= one.precision(); ++e) EXPECT_EQ(one.coefficient(e), 0);
}

TEST(Series, DivisionUndoesMultiplication) {
  const auto a = poly(-2, {3, 1, 4, 1, 5, 9, 2, 6});
  const auto b = poly(0, {2, 7, 1, 8, 2, 8, 1, 8});
  const auto back = (a * b) / b;
  for (int e = -2; e <= back.precision(); ++e) EXPECT_EQ(back.coefficient(e), a.coefficient(e));
}

TEST(Series, CuspFormLeadingTerms) {
  const auto d = eisenstein(4, 6).pow(3) - eisenstein(6, 6).pow(2);
  EXPECT_EQ(d.valuation(), 1);
  EXPECT_EQ(d.coefficient(0), 0);
  EXPECT_EQ(d.coefficient(1), 3 * 240 + 2 * 504);
  EXPECT_EQ(d.coefficient(1), 1728);
  EXPECT_EQ(d.coefficient(2), -41472);
}

TEST(Borcherds, DisplayedCoefficients) {
  const auto b = borcherds_input(2);
  EXPECT_EQ(b.valuation(), -1);
  EXPECT_EQ(b.coefficient(-1), 1);
  EXPECT_EQ(b.coefficient(0), 264);
  EXPECT_EQ(b.coefficient(1), 8244);
  EXPECT_EQ(b.coefficient(2), 139520);
  EXPECT_EQ(b.coefficient(0), grading_constants().relation_weight);
}

TEST(Borcherds, TruncationStabilityAndIntegrality) {
  const auto a = borcherds_input(10);
  const auto b = borcherds_input(50);
  for (int e = -1; e <= 10; ++e) EXPECT_EQ(a.coefficient(e), b.coefficient(e));
  for (int e = -1; e <= 50; ++e) EXPECT_EQ(b.coefficient(e).get_den(), 1) << e;
}

TEST(Borcherds, ReconstructsNumerator) {
  for (int n : {5, 20}) {
    const auto e4 = eisenstein(4, n + 2);
    const auto product = borcherds_input(n) * (e4.pow(3) - eisenstein(6, n + 2).pow(2));
    const auto expected = e4.scaled(1728);
    for (int e = 0; e <= product.precision(); ++e) EXPECT_EQ(product.coefficient(e), expected.coefficient(e));
  }
}
