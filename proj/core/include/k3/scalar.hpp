#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace k3 {

enum class Domain : std::uint8_t { integer, rational, modular };

std::string_view to_string(Domain d) noexcept;

class Scalar;

/// Describes one coefficient domain: Z, Q, or F_p for an odd prime p < 2^62.
struct CoeffRing {
  Domain domain = Domain::integer;
  std::uint64_t modulus = 0;

  static CoeffRing integers() noexcept { return {Domain::integer, 0}; }
  static CoeffRing rationals() noexcept { return {Domain::rational, 0}; }
  /// Validates that p is an odd prime below 2^62.
  static CoeffRing modular(std::uint64_t p);

  bool is_field() const noexcept { return domain != Domain::integer; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_integer(const mpz_class& v) const;
  /// Decimal integer, "p/q", or a decimal fraction such as "-1.25".
  Scalar parse(std::string_view text) const;

  std::string describe() const;

  friend bool operator==(const CoeffRing&, const CoeffRing&) = default;
};

/// Throws DomainError unless both rings coincide.
void require_same_ring(const CoeffRing& a, const CoeffRing& b, std::string_view op);

/// Exact scalar: arbitrary-precision integer, normalized rational, or residue mod p.
///
/// Mixed-domain arithmetic is rejected with DomainError; conversions between
/// domains are explicit (to_rational, reduce_mod).
class Scalar {
 public:
  Scalar() : rep_(mpz_class(0)) {}
  Scalar(int v) : rep_(mpz_class(v)) {}  // NOLINT: integer literals are integers
  Scalar(long v) : rep_(mpz_class(v)) {}  // NOLINT
  explicit Scalar(mpz_class v) : rep_(std::move(v)) {}
  explicit Scalar(mpq_class v);

  static Scalar rational(const mpz_class& num, const mpz_class& den);
  /// Residue of v modulo p; p is trusted (see CoeffRing::modular for validation).
  static Scalar modular(std::uint64_t v, std::uint64_t p);

  Domain domain() const noexcept { return static_cast<Domain>(rep_.index()); }
  CoeffRing ring() const noexcept;
  std::uint64_t modulus() const noexcept;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Sign of an integer or rational; throws DomainError on residues.
  int sign() const;

  const mpz_class& integer() const;
  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Scalar inverse() const;
  Scalar pow(unsigned long e) const;
  Scalar to_rational() const;
  Scalar reduce_mod(std::uint64_t p) const;

  std::string str() const;

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator-(const Scalar& a);

  /// Exact quotient: integers must divide, fields divide by a nonzero element.
  friend Scalar divexact(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  std::variant<mpz_class, mpq_class, Residue> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Ring interface used by the generic algorithms (BinaryForm, Bareiss, ...).
inline bool is_zero(const Scalar& s) noexcept { return s.is_zero(); }
inline Scalar int_like(const Scalar& proto, long k) { return proto.ring().from_int(k); }
/// c in the ring of proto; integers embed into every ring, other domains must match.
Scalar lift_like(const Scalar& proto, const Scalar& c);

}  // namespace k3
