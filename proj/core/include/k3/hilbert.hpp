#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "k3/multipoly.hpp"

namespace k3 {

/// Coefficients of sum dim(R_k) t^k for k = 0..truncation.
struct HilbertSeries {
  std::vector<mpz_class> coefficients;

  int truncation() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  const mpz_class& operator[](std::size_t k) const { return coefficients.at(k); }
};

struct TorusWeight {
  int q;  // 2i - n for the coefficient of x^(n-i) w^i
  int t;  // G_m weight, 4 or 6
};

/// One entry per variable of surface_variables(), in the same order.
std::vector<TorusWeight> torus_weight_table();

/// Hilbert series of C[S]^SL2 through t^N by the Weyl character formula:
/// the q^-1 coefficient of (q^-1 - q) prod (1 - q^a t^b)^-1, each factor
/// expanded t-adically.
HilbertSeries molien_series(int N);

/// The derivation sum_j L_j d/du_j induced by gamma = [[1, 0], [eps, 1]] at
/// first order in eps. Raises q-weight by 2; kills every SL2 invariant.
MultiPoly raising_operator(const MultiPoly& p);

/// L_j, the image of u_j under the raising operator.
const std::vector<MultiPoly>& raising_images();

inline constexpr int kOracleDegreeBound = 24;

/// dim over Q of the kernel of the raising operator on the t-degree-d,
/// q-weight-0 part of C[S]. Refuses d > bound.
std::size_t invariant_dimension_oracle(int d, int bound = kOracleDegreeBound);

struct CharacterSeries {
  HilbertSeries plain;
  /// plain * (1 + t^132): the extension by the weight-132 form with character det.
  HilbertSeries with_characters;
};

CharacterSeries character_series(int N);

}  // namespace k3
