#include "k3/upoly.hpp"

#include "k3/errors.hpp"

namespace k3 {

UPoly::UPoly(CoeffRing ring, std::vector<Scalar> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_ring(ring_, c.ring(), "UPoly construction");
  trim();
}

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.ring(), {c}); }

UPoly UPoly::variable(CoeffRing ring) { return UPoly(ring, {ring.zero(), ring.one()}); }

UPoly UPoly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, c.ring().zero());
  v[degree] = c;
  return UPoly(c.ring(), std::move(v));
}

const Scalar& UPoly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& b) {
  require_same_ring(ring_, b.ring_, "UPoly addition");
  if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), ring_.zero());
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& b) {
  require_same_ring(ring_, b.ring_, "UPoly subtraction");
  if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), ring_.zero());
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  require_same_ring(a.ring_, b.ring_, "UPoly multiplication");
  UPoly out(a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, a.ring_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

UPoly operator-(const UPoly& a) {
  UPoly out(a.ring_);
  out.coeffs_.reserve(a.coeffs_.size());
  for (const auto& c : a.coeffs_) out.coeffs_.push_back(-c);
  return out;
}

UPoly UPoly::scaled(const Scalar& c) const {
  require_same_ring(ring_, c.ring(), "UPoly scaling");
  UPoly out(ring_);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& x : coeffs_) out.coeffs_.push_back(x * c);
  out.trim();
  return out;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result = constant(ring_.one());
  UPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Scalar UPoly::evaluate(const Scalar& t) const {
  require_same_ring(ring_, t.ring(), "UPoly evaluation");
  Scalar acc = ring_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  UPoly out(ring_);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.coeffs_.push_back(coeffs_[i] * ring_.from_int(static_cast<long>(i)));
  }
  out.trim();
  return out;
}

UPoly UPoly::reduce_mod(std::uint64_t p) const {
  std::vector<Scalar> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.reduce_mod(p));
  return UPoly(CoeffRing::modular(p), std::move(v));
}

bool operator==(const UPoly& a, const UPoly& b) {
  require_same_ring(a.ring_, b.ring_, "UPoly comparison");
  return a.coeffs_ == b.coeffs_;
}

std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g) {
  require_same_ring(f.ring(), g.ring(), "UPoly division");
  if (g.is_zero()) throw InexactDivision("division by the zero polynomial");
  std::vector<Scalar> rem = f.coefficients();
  const auto dg = static_cast<std::size_t>(g.degree());
  const Scalar& lead = g.leading();
  std::vector<Scalar> quo;
  if (rem.size() > dg) quo.assign(rem.size() - dg, f.ring().zero());
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k].is_zero()) continue;
    const Scalar c = divexact(rem[k], lead);
    const std::size_t shift = k - dg;
    quo[shift] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[shift + j] -= c * g.coefficients()[j];
  }
  return {UPoly(f.ring(), std::move(quo)), UPoly(f.ring(), std::move(rem))};
}

UPoly exact_divide(const UPoly& f, const UPoly& g) {
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) throw InexactDivision("univariate division leaves a nonzero remainder");
  return q;
}

UPoly lift_like(const UPoly& proto, const Scalar& c) {
  return UPoly::constant(lift_like(proto.ring().one(), c));
}

}  // namespace k3
