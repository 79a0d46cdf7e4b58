#pragma once

// Hand-built surfaces with known fiber configurations.

#include <map>

#include "k3/binary_form.hpp"
#include "k3/weierstrass.hpp"

namespace surfaces {

using k3::BinaryForm;
using k3::Scalar;

/// Form of the given degree from {power of w: coefficient}.
inline BinaryForm<Scalar> monomials(int degree, std::map<int, long> terms) {
  std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
  for (const auto& [j, v] : terms) c.at(static_cast<std::size_t>(j)) = Scalar(v);
  return BinaryForm<Scalar>(std::move(c));
}

inline k3::SurfaceParams params(const BinaryForm<Scalar>& g2, const BinaryForm<Scalar>& g3) {
  return k3::SurfaceParams::from_forms(g2, g3);
}

/// g2 = -3 w^8, g3 = 2 w^12 + x^2 w^10: I2 at x, non-minimal at w.
inline k3::SurfaceParams bare_i2() { return params(monomials(8, {{8, -3}}), monomials(12, {{12, 2}, {10, 1}})); }

/// g2 = x w^7, g3 = x w^11: II at x, non-minimal at w.
inline k3::SurfaceParams bare_ii() { return params(monomials(8, {{7, 1}}), monomials(12, {{11, 1}})); }

/// g2 = x^4 w^4, g3 = x^6 w^6.
inline k3::SurfaceParams non_minimal() { return params(monomials(8, {{4, 1}}), monomials(12, {{6, 1}})); }

/// g2 = -3 a^2, g3 = 2 a^3 + x^2 c with a = x^4 + x w^3 + w^4 and
/// c = x^10 + 3 x w^9 + w^10: one I2 fiber at x, otherwise I1, inside U.
inline k3::SurfaceParams i2_in_u() {
  const auto a = monomials(4, {{0, 1}, {3, 1}, {4, 1}});
  const auto c = monomials(10, {{0, 1}, {9, 3}, {10, 1}});
  const auto x2 = monomials(2, {{0, 1}});
  return params(a.pow(2).scaled(Scalar(-3)), a.pow(3).scaled(Scalar(2)) + x2 * c);
}

/// g2 = x A, g3 = x B with A, B generic of degrees 7 and 11: one II fiber at x.
inline k3::SurfaceParams ii_in_u() {
  const auto x = monomials(1, {{0, 1}});
  const auto a = monomials(7, {{0, 1}, {4, 2}, {7, 1}});
  const auto b = monomials(11, {{0, 1}, {6, 1}, {9, 3}, {11, 1}});
  return params(x * a, x * b);
}

/// g2 = x^2 A, g3 = x^2 B: g2 and g3 share the double root x (type IV there).
inline k3::SurfaceParams shared_double_root() {
  const auto x2 = monomials(2, {{0, 1}});
  const auto a = monomials(6, {{0, 1}, {3, 2}, {6, 1}});
  const auto b = monomials(10, {{0, 1}, {5, 1}, {8, 3}, {10, 1}});
  return params(x2 * a, x2 * b);
}

}  // namespace surfaces
