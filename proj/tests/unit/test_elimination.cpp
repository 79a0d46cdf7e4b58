#include <gtest/gtest.h>

#include <random>

#include "k3/elimination.hpp"
#include "k3/modarith.hpp"
#include "k3/multipoly.hpp"
#include "k3/poly_text.hpp"
#include "k3/weierstrass.hpp"
#include "oracles.hpp"

using namespace k3;

namespace {

const CoeffRing ZZ = CoeffRing::integers();

BinaryForm<Scalar> form(std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(x);
  return BinaryForm<Scalar>(std::move(v));
}

BinaryForm<Scalar> from_q(const std::vector<mpq_class>& c) {
  std::vector<Scalar> v;
  for (const auto& x : c) v.emplace_back(x);
  return BinaryForm<Scalar>(std::move(v));
}

BinaryForm<Scalar> random_form(std::mt19937_64& gen, int degree, long bound = 9) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Scalar> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(coeff(gen));
  return BinaryForm<Scalar>(std::move(c));
}

std::vector<oracle::Linear> random_linears(std::mt19937_64& gen, int count) {
  std::uniform_int_distribution<long> e(-7, 7);
  std::vector<oracle::Linear> out;
  for (int i = 0; i < count; ++i) {
    long a = e(gen);
    const long b = e(gen);
    if (a == 0 && b == 0) a = 1;
    out.push_back({mpq_class(a, 1 + i % 3), mpq_class(b)});
  }
  return out;
}

MultiPoly var(const VariableTablePtr& vars, const char* name) { return MultiPoly::variable(vars, ZZ, name); }

}  // namespace

TEST(Sylvester, SmallestCase) {
  const auto m = sylvester_matrix(form({2, 3}), form({5, 7}));
  ASSERT_EQ(m.rows(), 2U);
  EXPECT_EQ(m(0, 0), Scalar(2));
  EXPECT_EQ(m(0, 1), Scalar(3));
  EXPECT_EQ(m(1, 0), Scalar(5));
  EXPECT_EQ(m(1, 1), Scalar(7));
  EXPECT_EQ(resultant(form({2, 3}), form({5, 7})), Scalar(2 * 7 - 3 * 5));
}

TEST(Sylvester, SymbolicLinearResultant) {
  const auto vars = VariableTable::make({"a0", "a1", "b0", "b1"});
  const BinaryForm<MultiPoly> f(std::vector<MultiPoly>{var(vars, "a0"), var(vars, "a1")});
  const BinaryForm<MultiPoly> g(std::vector<MultiPoly>{var(vars, "b0"), var(vars, "b1")});
  EXPECT_EQ(resultant(f, g), parse_poly("a0 * b1 - a1 * b0", vars, ZZ));
}

TEST(Sylvester, GenericOcticAndDuodecicLayout) {
  const auto m = sylvester_matrix(generic_g2(), generic_g3());
  ASSERT_EQ(m.rows(), 20U);
  ASSERT_EQ(m.cols(), 20U);
  for (std::size_t r = 0; r < 20; ++r) {
    const int expected_weight = r < 12 ? 4 : 6;
    const std::size_t shift = r < 12 ? r : r - 12;
    const std::size_t width = r < 12 ? 9 : 13;
    for (std::size_t c = 0; c < 20; ++c) {
      const bool in_band = c >= shift && c < shift + width;
      EXPECT_EQ(!m(r, c).is_zero(), in_band) << r << "," << c;
      if (in_band) EXPECT_EQ(weighted_degree(m(r, c)).degree, expected_weight);
    }
  }
  // Row 0 starts with u_{8,0}; row 12 with u_{12,0}.
  EXPECT_EQ(format_poly(m(0, 0)), "1 * u_{8,0}");
  EXPECT_EQ(format_poly(m(12, 0)), "1 * u_{12,0}");
}

TEST(Sylvester, MonomialCaseIsIdentity) {
  std::vector<Scalar> f(9, Scalar(0)), g(13, Scalar(0));
  f[0] = 1;
  g[12] = 1;
  const auto m = sylvester_matrix(BinaryForm<Scalar>(f), BinaryForm<Scalar>(g));
  for (std::size_t r = 0; r < 20; ++r) {
    for (std::size_t c = 0; c < 20; ++c) EXPECT_EQ(m(r, c), Scalar(r == c ? 1 : 0));
  }
  EXPECT_EQ(resultant(BinaryForm<Scalar>(f), BinaryForm<Scalar>(g)), Scalar(1));
}

TEST(Resultant, RootProductOracle) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto fl = random_linears(gen, 1 + trial % 6);
    const auto gl = random_linears(gen, 1 + (trial / 6) % 5);
    const auto f = from_q(oracle::expand_linear(fl));
    const auto g = from_q(oracle::expand_linear(gl));
    EXPECT_EQ(resultant(f, g), Scalar(oracle::root_product_resultant(fl, gl)));
  }
}

TEST(Resultant, SwapSignAndMultiplicativity) {
  std::mt19937_64 gen(22);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + trial % 5;
    const int n = 1 + trial % 7;
    const auto f = random_form(gen, m);
    const auto g = random_form(gen, n);
    const auto h = random_form(gen, 2);
    const Scalar sign((m * n) % 2 == 0 ? 1 : -1);
    EXPECT_EQ(resultant(f, g), sign * resultant(g, f));
    EXPECT_EQ(resultant(f, g * h), resultant(f, g) * resultant(f, h));
  }
}

TEST(Resultant, VanishesExactlyOnCommonFactors) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto common = random_form(gen, 1 + trial % 3);
    auto f = random_form(gen, 2);
    auto g = random_form(gen, 3);
    if (trial % 2 == 0) {
      f = f * common;
      g = g * common;
    }
    if (f.is_zero() || g.is_zero()) continue;
    const bool shares = binary_gcd(f, g).degree() > 0;
    EXPECT_EQ(resultant(f, g).is_zero(), shares);
    if (trial % 2 == 0 && !common.is_zero()) EXPECT_TRUE(shares);
  }
}

TEST(Discriminant, QuadraticConvention) {
  const auto vars = VariableTable::make({"a", "b", "c"});
  const BinaryForm<MultiPoly> f(std::vector<MultiPoly>{var(vars, "a"), var(vars, "b"), var(vars, "c")});
  EXPECT_EQ(discriminant_binary(f), parse_poly("4 * a * c - b^2", vars, ZZ));
}

TEST(Discriminant, DepressedCubic) {
  const auto vars = VariableTable::make({"p", "q"});
  const MultiPoly zero(vars, ZZ);
  const MultiPoly one = MultiPoly::constant(vars, Scalar(1));
  const BinaryForm<MultiPoly> f(std::vector<MultiPoly>{one, zero, var(vars, "p"), var(vars, "q")});
  // Roots 1, 2, -3 give p = -7, q = 6; the root-product formula fixes the
  // scalar in disc = c (4 p^3 + 27 q^2).
  const mpq_class constant =
      oracle::root_product_discriminant(1, {1, 2, -3}) / (4 * mpq_class(-343) + 27 * mpq_class(36));
  EXPECT_EQ(constant, 3);
  EXPECT_EQ(discriminant_binary(f), parse_poly("12 * p^3 + 81 * q^2", vars, ZZ));
}

TEST(Discriminant, RepeatedRoot) {
  EXPECT_EQ(discriminant_binary(form({0, 1, 0, 0})), Scalar(0));
  EXPECT_THROW(discriminant_binary(form({1, 2})), PreconditionError);
}

TEST(Discriminant, RootProductOracle) {
  std::mt19937_64 gen(24);
  std::uniform_int_distribution<long> e(-12, 12);
  for (int n = 2; n <= 9; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<mpq_class> roots;
      std::vector<oracle::Linear> lin;
      const mpq_class a0(e(gen) == 0 ? 3 : 2 + trial);
      for (int i = 0; i < n; ++i) {
        roots.emplace_back(e(gen), 1 + i % 2);
        lin.push_back({1, -roots.back()});
      }
      lin[0].a *= a0;
      lin[0].b *= a0;
      const auto f = from_q(oracle::expand_linear(lin));
      EXPECT_EQ(discriminant_binary(f), Scalar(oracle::root_product_discriminant(a0, roots)));
    }
  }
}

TEST(Discriminant, Homogeneity) {
  std::mt19937_64 gen(25);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 9;
    const auto f = random_form(gen, n);
    const Scalar lambda(2 + trial % 4);
    EXPECT_EQ(discriminant_binary(f.scaled(lambda)), lambda.pow(2 * (n - 1)) * discriminant_binary(f));
  }
}

TEST(Discriminant, VanishesExactlyOnRepeatedFactors) {
  std::mt19937_64 gen(26);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_form(gen, 2 + trial % 9);
    if (trial % 3 == 0) {
      const auto l = random_form(gen, 1);
      f = random_form(gen, trial % 7) * l * l;
    }
    if (f.is_zero() || f.degree() < 2) continue;
    bool squarefree = true;
    for (const auto& factor : gcd_and_squarefree(f)) squarefree = squarefree && factor.multiplicity == 1;
    EXPECT_EQ(!discriminant_binary(f).is_zero(), squarefree) << format_form(f);
  }
}

TEST(SquareFree, ExamplesFromTheTable) {
  const auto xxw = gcd_and_squarefree(form({0, 1, 0, 0}));
  ASSERT_EQ(xxw.size(), 2U);
  EXPECT_EQ(xxw[0].label(), "1 * x");
  EXPECT_EQ(xxw[0].multiplicity, 2);
  EXPECT_EQ(xxw[1].label(), "1 * w");
  EXPECT_TRUE(xxw[1].at_infinity);
  EXPECT_EQ(xxw[1].multiplicity, 1);

  const auto cube = gcd_and_squarefree(form({1, 0, 1}).pow(3));
  ASSERT_EQ(cube.size(), 1U);
  EXPECT_EQ(cube[0].label(), "1 * x^2 + 1 * w^2");
  EXPECT_EQ(cube[0].multiplicity, 3);
  EXPECT_THROW(gcd_and_squarefree(form({0, 0, 0})), PreconditionError);
}

TEST(SquareFree, DistinctLinearFactors) {
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<oracle::Linear> lin;
    for (int i = 0; i < 2 + trial % 8; ++i) {
      const mpq_class a(1 + i % 2);
      lin.push_back({a, -a * (i * 3 - trial)});  // root i * 3 - trial
    }
    if (trial % 4 == 0) lin.push_back({0, 1});
    const auto f = from_q(oracle::expand_linear(lin));
    const auto factors = gcd_and_squarefree(f);
    int degree = 0;
    for (const auto& factor : factors) {
      EXPECT_EQ(factor.multiplicity, 1);
      EXPECT_EQ(factor.degree(), 1);
      degree += factor.degree() * factor.multiplicity;
    }
    EXPECT_EQ(degree, f.degree());
  }
}

TEST(UnivariateDeterminant, AgreesWithBareiss) {
  std::mt19937_64 gen(27);
  std::uniform_int_distribution<long> e(-40, 40);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix<UPoly> m(n, n, UPoly(ZZ));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<Scalar> coeffs;
        for (int k = 0; k <= (r + c) % 4; ++k) coeffs.emplace_back(e(gen));
        m(r, c) = UPoly(ZZ, coeffs);
      }
    }
    const UPoly expected = bareiss_determinant(m);
    EXPECT_EQ(univariate_determinant(m), expected);
    const std::uint64_t p = modarith::kDefaultPrime;
    EXPECT_EQ(univariate_determinant(m, p), expected.reduce_mod(p));
  }
}

TEST(UnivariateDeterminant, SmallModulusIsRefused) {
  Matrix<UPoly> m(2, 2, UPoly(ZZ));
  const UPoly t = UPoly::variable(ZZ);
  m(0, 0) = t.pow(3);
  m(1, 1) = t.pow(3);
  EXPECT_THROW(univariate_determinant(m, 5), PreconditionError);
  EXPECT_EQ(univariate_determinant(m, 7), t.pow(6).reduce_mod(7));
}

TEST(ExactDivide, Examples) {
  const auto vars = binary_variables();
  const auto f = parse_poly("x^2 - w^2", vars, ZZ);
  EXPECT_EQ(exact_divide(f, parse_poly("x - w", vars, ZZ)), parse_poly("x + w", vars, ZZ));
  EXPECT_EQ(exact_divide(f, f), parse_poly("1", vars, ZZ));
  EXPECT_THROW(exact_divide(f, parse_poly("x - 2 * w", vars, ZZ)), InexactDivision);
}
