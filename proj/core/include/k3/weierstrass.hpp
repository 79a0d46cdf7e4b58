#pragma once

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "k3/binary_form.hpp"
#include "k3/multipoly.hpp"
#include "k3/scalar.hpp"

namespace k3 {

inline constexpr int kG2Degree = 8;
inline constexpr int kG3Degree = 12;
inline constexpr int kHDegree = 24;

/// Coefficients u of g2 (u_{8,0} .. u_{0,8}) and g3 (u_{12,0} .. u_{0,12}).
/// u_{i,j} multiplies x^i w^j.
struct SurfaceParams {
  std::array<Scalar, kG2Degree + 1> g2;
  std::array<Scalar, kG3Degree + 1> g3;

  static SurfaceParams zero(CoeffRing ring);
  static SurfaceParams from_forms(const BinaryForm<Scalar>& g2, const BinaryForm<Scalar>& g3);

  /// The common ring of all 22 entries; DomainError if they disagree.
  CoeffRing ring() const;
  SurfaceParams reduce_mod(std::uint64_t p) const;

  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;
};

/// u_{8,0}, ..., u_{0,8}, u_{12,0}, ..., u_{0,12} with weights 4 and 6.
const VariableTablePtr& surface_variables();

/// g2 and g3 with the 22 coefficient variables as indeterminates.
BinaryForm<MultiPoly> generic_g2(CoeffRing ring = CoeffRing::integers());
BinaryForm<MultiPoly> generic_g3(CoeffRing ring = CoeffRing::integers());

template <class C>
BinaryForm<C> weierstrass_discriminant(const BinaryForm<C>& g2, const BinaryForm<C>& g3) {
  return g2.pow(3).scaled(int_like(g2[0], 4)) + g3.pow(2).scaled(int_like(g3[0], 27));
}

struct WeierstrassForms {
  BinaryForm<Scalar> g2;
  BinaryForm<Scalar> g3;
  /// 4 g2^3 + 27 g3^2, possibly the zero form.
  BinaryForm<Scalar> h;
};

WeierstrassForms assemble(const SurfaceParams& u);

/// Vanishing order of an identically zero form.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

enum class KodairaKind { I0, In, II, III, IV, I0_star, In_star, IV_star, III_star, II_star, non_minimal };

struct KodairaType {
  KodairaKind kind = KodairaKind::I0;
  int n = 0;  // for In and In*

  /// "I0", "I2", "II", "I0*", "I1*", "IV*", "non-minimal", ...
  std::string tag() const;

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

/// Fiber type from (ord g2, ord g3, ord h) by the minimal Weierstrass table.
/// Throws PreconditionError("inconsistent triple ...") for triples that no
/// pair (g2, g3) can produce.
KodairaType kodaira_type(int m2, int m3, int d);

struct FiberPlace {
  /// Irreducible factor of h over Q, monic in x, or "w".
  std::string place;
  int residue_degree = 1;
  int m2 = 0;
  int m3 = 0;
  int d = 0;
  KodairaType kodaira;
};

struct FiberReport {
  std::vector<FiberPlace> places;
  bool in_U = false;
  bool h_is_zero = false;
  int euler_sum = 0;
};

/// Singular fibers of the model at every place of h; u must be over Z or Q.
FiberReport fiber_profile(const SurfaceParams& u);

enum class DegenerationComponent { a1, type_ii, deeper };

std::string to_string(DegenerationComponent c);

/// Which component of {k552 = 0} the point u lies on.
///
/// Only places with a minimal model enter the pattern: a1 when some In (n >= 2)
/// fiber appears and no place has m2, m3 >= 1; type_ii when the places with
/// m2, m3 >= 1 are all of type II and there is no In with n >= 2; otherwise
/// deeper. Throws PreconditionError unless disc(h) = 0, DegenerateInput if h = 0.
DegenerationComponent degeneration_component(const SurfaceParams& u);

}  // namespace k3
