#include <gtest/gtest.h>

#include "k3/elimination.hpp"
#include "k3/invariants.hpp"
#include "k3/modarith.hpp"
#include "k3/random.hpp"
#include "surfaces.hpp"

using namespace k3;

namespace {

const std::uint64_t P = modarith::kDefaultPrime;

Mat2<Scalar> mat(long a, long b, long c, long d) { return {Scalar(a), Scalar(b), Scalar(c), Scalar(d)}; }

SurfaceParams with_nonzero_r96(Rng& rng) {
  for (;;) {
    auto u = random_surface(rng, 9);
    if (!r96(u).value.is_zero()) return u;
  }
}

}  // namespace

TEST(Sl2Act, Identity) {
  Rng rng(1);
  const auto u = random_surface(rng, 9);
  EXPECT_EQ(sl2_act(mat(1, 0, 0, 1), u), u);
}

TEST(Sl2Act, ShearOfPureOctic) {
  const auto u = surfaces::params(surfaces::monomials(8, {{0, 1}}), surfaces::monomials(12, {}));
  const auto moved = sl2_act(mat(1, 1, 0, 1), u);
  const std::vector<long> binomial{1, 8, 28, 56, 70, 56, 28, 8, 1};
  for (int i = 0; i <= 8; ++i) EXPECT_EQ(moved.g2[i], Scalar(binomial[i]));
  for (const auto& c : moved.g3) EXPECT_TRUE(c.is_zero());
}

TEST(Sl2Act, InverseAndComposition) {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = random_surface(rng, 9);
    const auto g = random_sl2(rng);
    const auto d = random_sl2(rng);
    const Mat2<Scalar> g_inv{g[3], -g[1], -g[2], g[0]};
    EXPECT_EQ(sl2_act(g_inv, sl2_act(g, u)), u);
    const Mat2<Scalar> gd{g[0] * d[0] + g[1] * d[2], g[0] * d[1] + g[1] * d[3], g[2] * d[0] + g[3] * d[2],
                          g[2] * d[1] + g[3] * d[3]};
    EXPECT_EQ(sl2_act(gd, u), sl2_act(d, sl2_act(g, u)));
  }
}

TEST(Sl2Act, RequiresDeterminantOne) {
  Rng rng(3);
  EXPECT_THROW(sl2_act(mat(2, 0, 0, 1), random_surface(rng, 9)), PreconditionError);
  EXPECT_THROW(sl2_act(mat(0, 1, 1, 0), random_surface(rng, 9)), PreconditionError);
}

TEST(GmAct, Weights) {
  Rng rng(4);
  const auto u = random_surface(rng, 9);
  EXPECT_EQ(gm_act(Scalar(1), u), u);
  const auto a = gm_act(Scalar(2), surfaces::params(surfaces::monomials(8, {{0, 1}}), surfaces::monomials(12, {})));
  EXPECT_EQ(a.g2[0], Scalar(16));
  const auto b = gm_act(Scalar(2), surfaces::params(surfaces::monomials(8, {}), surfaces::monomials(12, {{12, 1}})));
  EXPECT_EQ(b.g3[12], Scalar(64));
  EXPECT_THROW(gm_act(Scalar(0), u), PreconditionError);
}

TEST(R96, Examples) {
  const auto pure = surfaces::params(surfaces::monomials(8, {{0, 1}}), surfaces::monomials(12, {{12, 1}}));
  EXPECT_EQ(r96(pure).value, Scalar(1));
  EXPECT_EQ(r96(pure).declared_weight, 96);
  EXPECT_TRUE(r96(surfaces::bare_ii()).value.is_zero());
}

TEST(R96, HomogeneityOverIntegers) {
  Rng rng(5);
  const auto u = random_surface(rng, 9);
  EXPECT_EQ(r96(gm_act(Scalar(3), u)).value, Scalar(3).pow(96) * r96(u).value);
}

TEST(K552, Examples) {
  EXPECT_TRUE(k552(surfaces::bare_i2()).value.is_zero());
  Rng rng(6);
  const auto u = random_surface(rng, 9);
  EXPECT_FALSE(k552(u).value.is_zero());
  EXPECT_EQ(k552(u).declared_weight, 552);
  EXPECT_EQ(k552(gm_act(Scalar(2), u)).value, Scalar(2).pow(552) * k552(u).value);
  EXPECT_THROW(k552(surfaces::params(surfaces::monomials(8, {{8, -3}}), surfaces::monomials(12, {{12, 2}}))),
               DegenerateInput);
}

TEST(Delta264, PointwiseFactorization) {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = with_nonzero_r96(rng);
    const auto d = delta264(u);
    EXPECT_EQ(d.declared_weight, 264);
    EXPECT_EQ(k552(u).value, r96(u).value.pow(3) * d.value);
  }
}

TEST(Delta264, Homogeneity) {
  Rng rng(8);
  const auto u = with_nonzero_r96(rng);
  EXPECT_EQ(delta264(gm_act(Scalar(2), u)).value, Scalar(2).pow(264) * delta264(u).value);
}

TEST(Delta264, UndefinedOnTheResultantDivisor) {
  EXPECT_THROW(delta264(surfaces::bare_ii()), PreconditionError);
  EXPECT_THROW(delta264(surfaces::ii_in_u()), PreconditionError);
}

TEST(Invariants, SymmetryUnderSl2) {
  Rng rng(9);
  for (int trial = 0; trial < 8; ++trial) {
    const auto u = with_nonzero_r96(rng);
    const auto v = sl2_act(random_sl2(rng), u);
    EXPECT_EQ(r96(v).value, r96(u).value);
    EXPECT_EQ(k552(v).value, k552(u).value);
    EXPECT_EQ(delta264(v).value, delta264(u).value);
  }
}

TEST(Invariants, HomogeneityModP) {
  Rng rng(10);
  for (int trial = 0; trial < 6; ++trial) {
    const auto u = random_surface(rng, 9).reduce_mod(P);
    const long l[] = {2, 3, 5};
    const Scalar lambda = Scalar(l[trial % 3]).reduce_mod(P);
    const auto v = gm_act(lambda, u);
    EXPECT_EQ(r96(v).value, lambda.pow(96) * r96(u).value);
    EXPECT_EQ(k552(v).value, lambda.pow(552) * k552(u).value);
    EXPECT_EQ(delta264(v).value, lambda.pow(264) * delta264(u).value);
  }
}

TEST(Invariants, ModularEvaluationMatchesReduction) {
  Rng rng(11);
  const auto u = with_nonzero_r96(rng);
  EXPECT_EQ(k552(u.reduce_mod(P)).value, k552(u).value.reduce_mod(P));
  EXPECT_EQ(r96(u.reduce_mod(P)).value, r96(u).value.reduce_mod(P));
}

TEST(Invariants, VanishingLoci) {
  Rng rng(12);
  const std::vector<SurfaceParams> cases{surfaces::bare_i2(), surfaces::bare_ii(), surfaces::i2_in_u(),
                                         surfaces::ii_in_u(), surfaces::shared_double_root(),
                                         surfaces::non_minimal(), random_surface(rng, 9), random_surface(rng, 2)};
  for (const auto& u : cases) {
    const auto forms = assemble(u);
    EXPECT_EQ(r96(u).value.is_zero(), binary_gcd(forms.g2, forms.g3).degree() > 0);
    bool squarefree = true;
    for (const auto& f : gcd_and_squarefree(forms.h)) squarefree = squarefree && f.multiplicity == 1;
    EXPECT_EQ(k552(u).value.is_zero(), !squarefree);
  }
}

TEST(Invariants, NamesAndWeights) {
  EXPECT_EQ(parse_invariant_name("k552"), InvariantName::k552);
  EXPECT_FALSE(parse_invariant_name("k553").has_value());
  EXPECT_EQ(declared_weight(InvariantName::r96), 96);
  EXPECT_EQ(declared_weight(InvariantName::k552), 552);
  EXPECT_EQ(declared_weight(InvariantName::delta264), 264);
}

TEST(Slice, RandomLineIsDivisible) {
  Rng rng(13);
  const auto u0 = random_surface(rng, 9);
  const auto u1 = random_surface(rng, 9);
  const auto rec = slice_divisibility(u0, u1);
  EXPECT_TRUE(rec.divisible);
  EXPECT_EQ(rec.quotient_degree, rec.k552_degree - 3 * rec.r96_degree);
  EXPECT_LE(rec.k552_degree, 138);
  EXPECT_LE(rec.r96_degree, 20);
  EXPECT_EQ(rec.quotient * rec.r96.pow(3), rec.k552);
  // The endpoints agree with pointwise evaluation.
  EXPECT_EQ(rec.k552.evaluate(Scalar(0)), k552(u0).value);
  EXPECT_EQ(rec.r96.evaluate(Scalar(0)), r96(u0).value);
  SurfaceParams sum = u0;
  for (std::size_t i = 0; i < 9; ++i) sum.g2[i] += u1.g2[i];
  for (std::size_t i = 0; i < 13; ++i) sum.g3[i] += u1.g3[i];
  EXPECT_EQ(rec.k552.evaluate(Scalar(1)), k552(sum).value);
}

TEST(Slice, ConstantLineIsThePointwiseCheck) {
  Rng rng(14);
  const auto u0 = with_nonzero_r96(rng);
  const auto rec = slice_divisibility(u0, SurfaceParams::zero(CoeffRing::integers()));
  EXPECT_TRUE(rec.divisible);
  EXPECT_EQ(rec.quotient_degree, 0);
  EXPECT_EQ(rec.quotient.coeff(0), delta264(u0).value);
}

TEST(Slice, ConsistentAcrossPrimes) {
  Rng rng(15);
  const auto u0 = random_surface(rng, 9);
  const auto u1 = random_surface(rng, 9);
  const auto exact = slice_divisibility(u0, u1);
  for (std::uint64_t p : {P, std::uint64_t{1000003}}) {
    const auto rec = slice_divisibility(u0, u1, p);
    EXPECT_TRUE(rec.divisible);
    EXPECT_EQ(rec.quotient, exact.quotient.reduce_mod(p));
  }
}

TEST(Slice, ResultantVanishingOnTheLine) {
  EXPECT_THROW(slice_divisibility(surfaces::bare_ii(), surfaces::bare_ii()), PreconditionError);
}

TEST(Grading, Constants) {
  const auto c = grading_constants();
  EXPECT_EQ(c.canonical_weight, -(9 * 4 + 13 * 6));
  EXPECT_EQ(c.canonical_weight, -114);
  EXPECT_EQ(c.modular_dim, 18);
  EXPECT_EQ(c.borcherds_weight, 132);
  EXPECT_EQ(c.relation_weight, 264);
  EXPECT_EQ(c.relation_weight, 2 * c.borcherds_weight);
  EXPECT_EQ(c.ambient_variable_count, 22);
  EXPECT_EQ(c.r96_weight, 96);
  EXPECT_EQ(c.k552_weight, 552);
  EXPECT_EQ(std::count(c.variable_weights.begin(), c.variable_weights.end(), 4), 9);
  EXPECT_EQ(std::count(c.variable_weights.begin(), c.variable_weights.end(), 6), 13);
  const auto pres = character_extension();
  EXPECT_EQ(pres.extension_generator_weight, 132);
  EXPECT_EQ(pres.relation_weight, 264);
  EXPECT_EQ(pres.extension_character, "det");
}
