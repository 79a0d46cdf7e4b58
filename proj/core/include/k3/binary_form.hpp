#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "k3/errors.hpp"
#include "k3/scalar.hpp"

namespace k3 {

namespace detail {
// Unqualified so that overloads declared after this header are found by ADL.
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}
}  // namespace detail

/// Homogeneous form of degree n in (x, w); entry i is the coefficient of x^(n-i) w^i.
///
/// C is any exact ring type with the free functions is_zero, int_like,
/// lift_like and divexact (Scalar, MultiPoly, UPoly).
template <class C>
class BinaryForm {
 public:
  explicit BinaryForm(std::vector<C> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw PreconditionError("a binary form needs at least one coefficient");
  }

  static BinaryForm zero(int degree, const C& proto) {
    if (degree < 0) throw PreconditionError("negative form degree");
    return BinaryForm(std::vector<C>(static_cast<std::size_t>(degree) + 1, int_like(proto, 0)));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::span<const C> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!detail::coeff_is_zero(c)) return false;
    }
    return true;
  }

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    a.require_same_degree(b);
    std::vector<C> out = a.coeffs_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + b.coeffs_[i];
    return BinaryForm(std::move(out));
  }

  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    a.require_same_degree(b);
    std::vector<C> out = a.coeffs_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - b.coeffs_[i];
    return BinaryForm(std::move(out));
  }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, int_like(a.coeffs_[0], 0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return BinaryForm(std::move(out));
  }

  BinaryForm scaled(const C& c) const {
    std::vector<C> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x * c);
    return BinaryForm(std::move(out));
  }

  BinaryForm pow(unsigned e) const {
    BinaryForm result(std::vector<C>{int_like(coeffs_[0], 1)});
    for (unsigned k = 0; k < e; ++k) result = result * *this;
    return result;
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void require_same_degree(const BinaryForm& b) const {
    if (b.coeffs_.size() != coeffs_.size()) {
      throw PreconditionError("binary forms of different degrees cannot be added");
    }
  }

  std::vector<C> coeffs_;
};

/// Row-major 2x2 matrix [[a, b], [c, d]].
template <class C>
using Mat2 = std::array<C, 4>;

/// (gamma . f)(x, w) = f(a x + b w, c x + d w) for gamma = [[a, b], [c, d]].
///
/// This is a right action: (gamma delta) . f = delta . (gamma . f).
template <class C>
BinaryForm<C> binary_substitute(const BinaryForm<C>& f, const Mat2<C>& gamma) {
  const int n = f.degree();
  const C zero = int_like(f[0], 0);
  const C one = int_like(f[0], 1);
  const BinaryForm<C> x_image(std::vector<C>{gamma[0], gamma[1]});
  const BinaryForm<C> w_image(std::vector<C>{gamma[2], gamma[3]});
  std::vector<BinaryForm<C>> x_pow{BinaryForm<C>(std::vector<C>{one})};
  std::vector<BinaryForm<C>> w_pow{BinaryForm<C>(std::vector<C>{one})};
  for (int k = 1; k <= n; ++k) {
    x_pow.push_back(x_pow.back() * x_image);
    w_pow.push_back(w_pow.back() * w_image);
  }
  std::vector<C> out(static_cast<std::size_t>(n) + 1, zero);
  for (int i = 0; i <= n; ++i) {
    if (is_zero(f[i])) continue;
    const BinaryForm<C> term = x_pow[n - i] * w_pow[i];
    for (int j = 0; j <= n; ++j) out[j] = out[j] + f[i] * term[j];
  }
  return BinaryForm<C>(std::move(out));
}

/// Substitution with scalar matrix entries lifted into the coefficient ring of f.
template <class C>
  requires(!std::is_same_v<C, Scalar>)
BinaryForm<C> binary_substitute(const BinaryForm<C>& f, const Mat2<Scalar>& gamma) {
  const Mat2<C> lifted{lift_like(f[0], gamma[0]), lift_like(f[0], gamma[1]),
                       lift_like(f[0], gamma[2]), lift_like(f[0], gamma[3])};
  return binary_substitute(f, lifted);
}

/// (df/dx, df/dw); both of degree n - 1, and x df/dx + w df/dw = n f.
template <class C>
std::pair<BinaryForm<C>, BinaryForm<C>> binary_partials(const BinaryForm<C>& f) {
  const int n = f.degree();
  if (n < 1) throw PreconditionError("partials of a degree-0 form");
  std::vector<C> dx, dw;
  dx.reserve(n);
  dw.reserve(n);
  for (int i = 0; i < n; ++i) {
    dx.push_back(f[i] * int_like(f[i], n - i));
    dw.push_back(f[i + 1] * int_like(f[i + 1], i + 1));
  }
  return {BinaryForm<C>(std::move(dx)), BinaryForm<C>(std::move(dw))};
}

}  // namespace k3
