#include "k3/modarith.hpp"

#include <array>

#include "k3/errors.hpp"

namespace k3::modarith {

u64 pow(u64 base, u64 exponent, u64 p) noexcept {
  u64 result = 1 % p;
  base %= p;
  while (exponent != 0) {
    if (exponent & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    exponent >>= 1U;
  }
  return result;
}

u64 inverse(u64 a, u64 p) {
  // Extended Euclid; every intermediate is bounded by p < 2^62 in absolute value.
  std::int64_t r0 = p, r1 = a % p;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw InexactDivision("residue is not invertible modulo " + std::to_string(p));
  if (t0 < 0) t0 += p;
  return static_cast<u64>(t0);
}

u64 from_signed(std::int64_t v, u64 p) noexcept {
  if (v >= 0) return static_cast<u64>(v) % p;
  const u64 m = static_cast<u64>(-(v + 1)) % p;  // avoids overflow on INT64_MIN
  return sub(p - 1, m, p);
}

u64 reduce(const mpz_class& v, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64), "requires LP64");
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

std::int64_t to_signed(u64 a, u64 p) noexcept {
  return a > p / 2 ? -static_cast<std::int64_t>(p - a) : static_cast<std::int64_t>(a);
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This witness set is exact below 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> primes_below(u64 bound, std::size_t count) {
  std::vector<u64> out;
  out.reserve(count);
  u64 candidate = bound;
  while (out.size() < count && candidate > 2) {
    --candidate;
    if (is_prime(candidate)) out.push_back(candidate);
  }
  return out;
}

}  // namespace k3::modarith
