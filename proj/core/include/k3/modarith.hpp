#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

// Word-sized arithmetic modulo an odd prime p < 2^62.
namespace k3::modarith {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

/// Largest prime below 2^62.
inline constexpr u64 kDefaultPrime = 4611686018427387847ULL;
inline constexpr u64 kMaxModulus = u64{1} << 62;

constexpr u64 add(u64 a, u64 b, u64 p) noexcept {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}

constexpr u64 sub(u64 a, u64 b, u64 p) noexcept { return a >= b ? a - b : a + (p - b); }

constexpr u64 neg(u64 a, u64 p) noexcept { return a == 0 ? 0 : p - a; }

constexpr u64 mul(u64 a, u64 b, u64 p) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 pow(u64 base, u64 exponent, u64 p) noexcept;

/// Inverse modulo p; throws k3::InexactDivision when a is not invertible.
u64 inverse(u64 a, u64 p);

u64 from_signed(std::int64_t v, u64 p) noexcept;
u64 reduce(const mpz_class& v, u64 p);

/// Symmetric representative in (-p/2, p/2].
std::int64_t to_signed(u64 a, u64 p) noexcept;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n) noexcept;

/// The `count` largest primes strictly below `bound`, in descending order.
std::vector<u64> primes_below(u64 bound, std::size_t count);

}  // namespace k3::modarith
