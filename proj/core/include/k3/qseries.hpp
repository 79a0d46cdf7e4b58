#pragma once

#include <vector>

#include <gmpxx.h>

namespace k3 {

/// Truncated Laurent series sum_{e=v}^{N} c_e q^e with exact rational coefficients.
///
/// Coefficients above the precision N are unknown; no operation reads them.
class QSeries {
 public:
  /// coefficients[i] multiplies q^(valuation + i); the precision is the last exponent.
  QSeries(int valuation, std::vector<mpq_class> coefficients);
  /// The zero series known through q^precision.
  static QSeries zero(int precision);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Exponent of the leading nonzero term; precision + 1 for the zero series.
  int valuation() const noexcept { return valuation_; }
  int precision() const noexcept { return precision_; }
  /// Coefficient of q^e; throws PreconditionError beyond the precision.
  mpq_class coefficient(int e) const;
  QSeries truncated(int precision) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator/(const QSeries& a, const QSeries& b);
  QSeries scaled(const mpq_class& c) const;
  QSeries pow(unsigned k) const;
  /// 1 / a; the precision drops by twice the valuation.
  QSeries reciprocal() const;

  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  QSeries() = default;
  void normalize();

  int valuation_ = 0;
  int precision_ = 0;
  std::vector<mpq_class> coeffs_;
};

mpz_class divisor_sigma(unsigned k, unsigned long n);

/// E_4 = 1 + 240 sum sigma_3(n) q^n and E_6 = 1 - 504 sum sigma_5(n) q^n through q^N.
QSeries eisenstein(int k, int N);

/// 1728 E_4 / (E_4^3 - E_6^2) = q^-1 + 264 + ..., known through q^N.
QSeries borcherds_input(int N);

}  // namespace k3
