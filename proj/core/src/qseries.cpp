#include "k3/qseries.hpp"

#include <algorithm>
#include <string>

#include "k3/errors.hpp"

namespace k3 {

QSeries::QSeries(int valuation, std::vector<mpq_class> coefficients)
    : valuation_(valuation),
      precision_(valuation + static_cast<int>(coefficients.size()) - 1),
      coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw PreconditionError("use QSeries::zero for an empty series");
  normalize();
}

QSeries QSeries::zero(int precision) {
  QSeries s;
  s.valuation_ = precision + 1;
  s.precision_ = precision;
  return s;
}

void QSeries::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c != 0; });
  valuation_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

mpq_class QSeries::coefficient(int e) const {
  if (e > precision_) {
    throw PreconditionError("coefficient of q^" + std::to_string(e) + " is beyond the precision " +
                            std::to_string(precision_));
  }
  if (e < valuation_) return 0;
  return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

QSeries QSeries::truncated(int precision) const {
  if (precision > precision_) throw PreconditionError("cannot raise the precision of a series");
  if (precision < valuation_) return zero(precision);
  return QSeries(valuation_, std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + (precision - valuation_ + 1)));
}

namespace {

QSeries combine(const QSeries& a, const QSeries& b, int sign) {
  const int precision = std::min(a.precision(), b.precision());
  const int v = std::min(a.valuation(), b.valuation());
  if (v > precision) return QSeries::zero(precision);
  std::vector<mpq_class> out(static_cast<std::size_t>(precision - v + 1));
  for (int e = v; e <= precision; ++e) {
    out[e - v] = a.coefficient(e) + (sign > 0 ? b.coefficient(e) : -b.coefficient(e));
  }
  return QSeries(v, std::move(out));
}

}  // namespace

QSeries operator+(const QSeries& a, const QSeries& b) { return combine(a, b, 1); }
QSeries operator-(const QSeries& a, const QSeries& b) { return combine(a, b, -1); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int v = a.valuation_ + b.valuation_;
  // Relative precision of the product is the smaller of the two.
  const int precision = std::min(a.valuation_ + b.precision_, b.valuation_ + a.precision_);
  if (a.is_zero() || b.is_zero() || v > precision) return QSeries::zero(precision);
  std::vector<mpq_class> out(static_cast<std::size_t>(precision - v + 1));
  for (std::size_t i = 0; i < a.coeffs_.size() && i < out.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < out.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QSeries(v, std::move(out));
}

QSeries QSeries::scaled(const mpq_class& c) const {
  if (c == 0 || is_zero()) return zero(precision_);
  std::vector<mpq_class> out = coeffs_;
  for (auto& x : out) x *= c;
  return QSeries(valuation_, std::move(out));
}

QSeries QSeries::pow(unsigned k) const {
  if (k == 0) {
    // 1, known to the same relative precision as this series.
    std::vector<mpq_class> one(static_cast<std::size_t>(std::max(0, precision_ - valuation_)) + 1);
    one[0] = 1;
    return QSeries(0, std::move(one));
  }
  QSeries out = *this;
  for (unsigned i = 1; i < k; ++i) out = out * *this;
  return out;
}

QSeries QSeries::reciprocal() const {
  if (is_zero()) throw PreconditionError("reciprocal of the zero series");
  const int relative = precision_ - valuation_;
  std::vector<mpq_class> inv(static_cast<std::size_t>(relative) + 1);
  const mpq_class lead_inv = 1 / coeffs_[0];
  inv[0] = lead_inv;
  for (int n = 1; n <= relative; ++n) {
    mpq_class acc = 0;
    for (int k = 1; k <= n; ++k) acc += coeffs_[k] * inv[n - k];
    inv[n] = -acc * lead_inv;
  }
  return QSeries(-valuation_, std::move(inv));
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.reciprocal(); }

bool operator==(const QSeries& a, const QSeries& b) {
  return a.valuation_ == b.valuation_ && a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
}

mpz_class divisor_sigma(unsigned k, unsigned long n) {
  if (n == 0) throw PreconditionError("divisor sum of 0");
  mpz_class sum = 0;
  mpz_class term;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), d, k);
    sum += term;
    if (d != n / d) {
      mpz_ui_pow_ui(term.get_mpz_t(), n / d, k);
      sum += term;
    }
  }
  return sum;
}

QSeries eisenstein(int k, int N) {
  if (N < 0) throw PreconditionError("truncation order must be nonnegative");
  long factor = 0;
  if (k == 4) {
    factor = 240;
  } else if (k == 6) {
    factor = -504;
  } else {
    throw PreconditionError("eisenstein series of weight " + std::to_string(k) + " is not supported");
  }
  std::vector<mpq_class> c(static_cast<std::size_t>(N) + 1);
  c[0] = 1;
  for (int n = 1; n <= N; ++n) c[n] = mpq_class(factor * divisor_sigma(static_cast<unsigned>(k - 1), n));
  return QSeries(0, std::move(c));
}

QSeries borcherds_input(int N) {
  if (N < -1) throw PreconditionError("truncation order must be at least -1");
  // The denominator has valuation 1, so its reciprocal loses two orders of precision.
  const QSeries e4 = eisenstein(4, N + 2);
  const QSeries e6 = eisenstein(6, N + 2);
  const QSeries denominator = e4.pow(3) - e6.pow(2);
  return (e4.scaled(1728) / denominator).truncated(N);
}

}  // namespace k3
