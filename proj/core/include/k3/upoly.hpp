#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "k3/scalar.hpp"

namespace k3 {

/// Dense univariate polynomial over one CoeffRing, coefficients low to high.
class UPoly {
 public:
  explicit UPoly(CoeffRing ring) : ring_(ring) {}
  UPoly(CoeffRing ring, std::vector<Scalar> coeffs);

  static UPoly constant(const Scalar& c);
  /// The polynomial t.
  static UPoly variable(CoeffRing ring);
  static UPoly monomial(const Scalar& c, std::size_t degree);

  const CoeffRing& ring() const noexcept { return ring_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }
  const Scalar& leading() const;

  UPoly& operator+=(const UPoly& b);
  UPoly& operator-=(const UPoly& b);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a);
  UPoly scaled(const Scalar& c) const;
  UPoly pow(unsigned e) const;

  Scalar evaluate(const Scalar& t) const;
  UPoly derivative() const;
  UPoly reduce_mod(std::uint64_t p) const;

  friend bool operator==(const UPoly& a, const UPoly& b);

 private:
  void trim();

  CoeffRing ring_;
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; over Z every step must divide the leading coefficient.
std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g);

/// q with f == q * g, or InexactDivision.
UPoly exact_divide(const UPoly& f, const UPoly& g);

inline bool is_zero(const UPoly& p) noexcept { return p.is_zero(); }
inline UPoly int_like(const UPoly& proto, long k) { return UPoly::constant(proto.ring().from_int(k)); }
UPoly lift_like(const UPoly& proto, const Scalar& c);
inline UPoly divexact(const UPoly& a, const UPoly& b) { return exact_divide(a, b); }

}  // namespace k3
