#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3/binary_form.hpp"
#include "k3/upoly.hpp"
#include "k3/weierstrass.hpp"

namespace k3 {

/// u -> gamma . u by substitution into g2 and g3; det gamma must be exactly 1.
/// Entries of gamma are lifted into the ring of u.
SurfaceParams sl2_act(const Mat2<Scalar>& gamma, const SurfaceParams& u);

/// Scales g2 by lambda^4 and g3 by lambda^6; lambda != 0.
SurfaceParams gm_act(const Scalar& lambda, const SurfaceParams& u);

enum class InvariantName { r96, k552, delta264 };

std::string_view to_string(InvariantName name);
std::optional<InvariantName> parse_invariant_name(std::string_view text);

/// Weight under gm_act, derived from the variable weights.
int declared_weight(InvariantName name);

struct InvariantValue {
  InvariantName name;
  Scalar value;
  int declared_weight;
};

/// Normalization used by all three invariants: r96 = Res(g2, g3),
/// k552 = Res(dh/dx, dh/dw), delta264 = k552 / r96^3.
inline constexpr const char* kConventionTag =
    "r96=Res(g2,g3);k552=Res(dh/dx,dh/dw);delta264=k552/r96^3;sylvester=first-form-rows-first";

/// Res(g2, g3); zero exactly when g2 and g3 share a root in P^1.
InvariantValue r96(const SurfaceParams& u);

/// disc(h); throws DegenerateInput when h vanishes identically.
InvariantValue k552(const SurfaceParams& u);

/// k552 / r96^3. PreconditionError when r96 = 0, InexactDivision if the
/// integer quotient is not exact.
InvariantValue delta264(const SurfaceParams& u);

InvariantValue evaluate_invariant(InvariantName name, const SurfaceParams& u);

/// g2, g3 along the line u0 + s u1.
std::pair<BinaryForm<UPoly>, BinaryForm<UPoly>> line_forms(const SurfaceParams& u0,
                                                           const SurfaceParams& u1);

struct SliceRecord {
  bool divisible = false;
  int k552_degree = -1;
  int r96_degree = -1;
  int quotient_degree = -1;
  std::optional<std::uint64_t> modulus;
  UPoly k552{CoeffRing::integers()};
  UPoly r96{CoeffRing::integers()};
  /// k552 / r96^3 when divisible.
  UPoly quotient{CoeffRing::integers()};
};

/// Exact division of k552(u0 + s u1) by r96(u0 + s u1)^3 in Z[s], or in F_p[s]
/// when a modulus is given. PreconditionError if r96 vanishes on the line.
SliceRecord slice_divisibility(const SurfaceParams& u0, const SurfaceParams& u1,
                               std::optional<std::uint64_t> modulus = std::nullopt);

struct GradingConstants {
  int canonical_weight;
  int modular_dim;
  int borcherds_weight;
  int relation_weight;
  int ambient_variable_count;
  std::vector<int> variable_weights;
  int r96_weight;
  int k552_weight;
};

/// Computed from the weight table of surface_variables().
GradingConstants grading_constants();

struct GradedRingPresentation {
  std::string base;
  int extension_generator_weight;
  int relation_weight;
  std::string extension_character;
};

/// base[s] / (s^2 - delta264) with s of weight 132 transforming by det.
GradedRingPresentation character_extension();

}  // namespace k3
