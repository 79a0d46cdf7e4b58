#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "k3/binary_form.hpp"
#include "k3/matrix.hpp"
#include "k3/upoly.hpp"

namespace k3 {

/// (m+n) x (m+n) Sylvester matrix: n shifted rows of f's coefficients, then
/// m shifted rows of g's. Coefficients are used exactly as stored.
template <class C>
Matrix<C> sylvester_matrix(const BinaryForm<C>& f, const BinaryForm<C>& g) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 1 || n < 1) throw PreconditionError("Sylvester matrix needs forms of degree >= 1");
  const auto size = static_cast<std::size_t>(m + n);
  Matrix<C> s(size, size, int_like(f[0], 0));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s(r, r + i) = f[i];
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s(n + r, r + i) = g[i];
  }
  return s;
}

template <class C>
C determinant_of(const Matrix<C>& m) {
  if constexpr (std::is_same_v<C, Scalar>) {
    return determinant(m);
  } else {
    return bareiss_determinant(m);
  }
}

/// Res(f, g) as the determinant of sylvester_matrix(f, g). Res(x^m, w^n) = 1.
template <class C>
C resultant(const BinaryForm<C>& f, const BinaryForm<C>& g) {
  return determinant_of(sylvester_matrix(f, g));
}

/// disc(f) := Res(df/dx, df/dw), homogeneous of degree 2(n-1) in the coefficients.
///
/// For f = a0 * prod (x - r_i w) this equals
/// (-1)^(n(n-1)/2) n^(n-2) a0^(2n-2) prod_{i<j} (r_i - r_j)^2.
template <class C>
C discriminant_binary(const BinaryForm<C>& f) {
  if (f.degree() < 2) throw PreconditionError("discriminant needs a form of degree >= 2");
  const auto [fx, fw] = binary_partials(f);
  return resultant(fx, fw);
}

/// Tag recorded alongside invariant values so that the global scale can be reconciled.
inline constexpr const char* kDiscriminantConvention =
    "disc(f)=Res(df/dx,df/dw); Res via Sylvester rows of the first form first";

/// An irreducible factor over Q of a binary form, or the place at infinity w = 0.
struct FormFactor {
  /// Rational coefficients; monic in x, or exactly `w` at infinity.
  BinaryForm<Scalar> form;
  int multiplicity = 0;
  bool at_infinity = false;

  int degree() const noexcept { return form.degree(); }
  std::string label() const;
};

/// Complete factorization of a nonzero binary form with integer or rational
/// coefficients: f = unit * prod factor^multiplicity, degrees times
/// multiplicities summing to deg f. Finite places come first (by degree),
/// then `w` if it divides f.
std::vector<FormFactor> gcd_and_squarefree(const BinaryForm<Scalar>& f);

/// Monic gcd over Q, including the power of w; degree 0 when coprime.
BinaryForm<Scalar> binary_gcd(const BinaryForm<Scalar>& f, const BinaryForm<Scalar>& g);

/// Determinant of a matrix with univariate polynomial entries.
///
/// With a modulus, entries are reduced mod p and the determinant is
/// interpolated from evaluations at 0..D (D = row-degree bound, p > D).
/// Without one, integer entries are handled multimodularly: enough 62-bit
/// primes to exceed twice the permanent bound prod_i sum_j |M_ij|_1, then CRT.
UPoly univariate_determinant(const Matrix<UPoly>& m,
                             std::optional<std::uint64_t> modulus = std::nullopt);

}  // namespace k3
