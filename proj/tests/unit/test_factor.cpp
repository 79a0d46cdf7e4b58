#include <gtest/gtest.h>

#include <random>

#include "k3/factor.hpp"

using namespace k3;
using zpoly::ZPoly;

namespace {

ZPoly P(std::initializer_list<long> low_to_high) {
  ZPoly p;
  for (long c : low_to_high) p.emplace_back(c);
  return p;
}

ZPoly product(const std::vector<zpoly::Factor>& fs) {
  ZPoly out{1};
  for (const auto& f : fs) {
    for (int k = 0; k < f.multiplicity; ++k) out = zpoly::multiply(out, f.poly);
  }
  return out;
}

int total_degree(const std::vector<zpoly::Factor>& fs) {
  int d = 0;
  for (const auto& f : fs) d += zpoly::degree(f.poly) * f.multiplicity;
  return d;
}

}  // namespace

TEST(ZPoly, GcdOfCommonFactor) {
  const ZPoly a = zpoly::multiply(P({-1, 1}), P({1, 0, 1}));  // (x - 1)(x^2 + 1)
  const ZPoly b = zpoly::multiply(P({-1, 1}), P({2, 3}));     // (x - 1)(3x + 2)
  EXPECT_EQ(zpoly::gcd(a, b), P({-1, 1}));
  EXPECT_EQ(zpoly::gcd(P({1, 0, 1}), P({2, 3})), P({1}));
}

TEST(ZPoly, GcdRemovesContent) {
  EXPECT_EQ(zpoly::gcd(P({-6, 6}), P({4, -4})), P({-1, 1}));
}

TEST(ZPoly, SquarefreePart) {
  ZPoly f = zpoly::multiply(P({-1, 1}), P({-1, 1}));
  f = zpoly::multiply(f, P({2, 0, 1}));
  EXPECT_EQ(zpoly::squarefree_part(f), zpoly::multiply(P({-1, 1}), P({2, 0, 1})));
}

TEST(ZPoly, IrreducibleStaysWhole) {
  // x^4 - 10x^2 + 1 splits modulo every prime but is irreducible over Q.
  const auto fs = zpoly::factor(P({1, 0, -10, 0, 1}));
  ASSERT_EQ(fs.size(), 1U);
  EXPECT_EQ(fs[0].poly, P({1, 0, -10, 0, 1}));
  EXPECT_EQ(fs[0].multiplicity, 1);
}

TEST(ZPoly, CyclotomicSplitting) {
  // x^12 - 1 = Phi1 Phi2 Phi3 Phi4 Phi6 Phi12.
  ZPoly f(13, 0);
  f[0] = -1;
  f[12] = 1;
  const auto fs = zpoly::factor(f);
  ASSERT_EQ(fs.size(), 6U);
  EXPECT_EQ(product(fs), f);
  EXPECT_EQ(fs.back().poly, P({1, 0, -1, 0, 1}));
}

TEST(ZPoly, MultiplicitiesAndContent) {
  // -4 (2x + 3)^3 (x^2 - 2)
  ZPoly f = P({-4});
  for (int i = 0; i < 3; ++i) f = zpoly::multiply(f, P({3, 2}));
  f = zpoly::multiply(f, P({-2, 0, 1}));
  const auto fs = zpoly::factor(f);
  ASSERT_EQ(fs.size(), 2U);
  EXPECT_EQ(fs[0].poly, P({3, 2}));
  EXPECT_EQ(fs[0].multiplicity, 3);
  EXPECT_EQ(fs[1].poly, P({-2, 0, 1}));
  EXPECT_EQ(fs[1].multiplicity, 1);
}

TEST(ZPoly, RandomProductsOfKnownIrreducibles) {
  std::mt19937_64 gen(8);
  std::uniform_int_distribution<long> c(-30, 30);
  for (int trial = 0; trial < 25; ++trial) {
    // Linear factors and shifted x^2 + k (k > 0) quadratics are irreducible.
    std::vector<ZPoly> parts;
    ZPoly f{1};
    int expected_degree = 0;
    for (int k = 0; k < 4; ++k) {
      ZPoly piece;
      if (k % 2 == 0) {
        long a = c(gen);
        if (a == 0) a = 1;
        piece = P({c(gen), a});
      } else {
        piece = P({1 + std::abs(c(gen)), 0, 1});
      }
      f = zpoly::multiply(f, piece);
      expected_degree += zpoly::degree(piece);
    }
    const auto fs = zpoly::factor(f);
    EXPECT_EQ(total_degree(fs), expected_degree);
    EXPECT_EQ(zpoly::primitive_part(product(fs)), zpoly::primitive_part(f));
    for (const auto& factor : fs) EXPECT_LE(zpoly::degree(factor.poly), 2);
  }
}

TEST(ZPoly, LargeCoefficientsDegreeTwentyFour) {
  // x^20 + x + 1 times large linear factors; only the reassembly is checked.
  ZPoly base(21, 0);
  base[0] = 1;
  base[1] = 1;
  base[20] = 1;
  ZPoly f = zpoly::multiply(base, P({123456789, 987654321}));
  f = zpoly::multiply(f, P({-1000003, 7}));
  f = zpoly::multiply(f, P({-1000003, 7}));
  const auto fs = zpoly::factor(f);
  EXPECT_EQ(product(fs), zpoly::primitive_part(f));
  EXPECT_EQ(total_degree(fs), 23);
  bool found_square = false;
  for (const auto& factor : fs) {
    if (factor.poly == P({-1000003, 7})) found_square = factor.multiplicity == 2;
  }
  EXPECT_TRUE(found_square);
}
