#include "k3/factor.hpp"

#include <algorithm>
#include <random>

#include "k3/errors.hpp"
#include "k3/modarith.hpp"

namespace k3::zpoly {

namespace ma = modarith;

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

mpz_class content(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  ZPoly out = f;
  trim(out);
  if (out.empty()) return out;
  mpz_class c = content(out);
  if (out.back() < 0) c = -c;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return out;
}

ZPoly derivative(const ZPoly& f) {
  ZPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<unsigned long>(i));
  trim(out);
  return out;
}

ZPoly multiply(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw InexactDivision("pseudo-remainder by zero");
  ZPoly r = a;
  trim(r);
  const int db = degree(b);
  const mpz_class& lb = b.back();
  int steps = degree(r) - db + 1;
  while (!r.empty() && degree(r) >= db) {
    const mpz_class lr = r.back();
    const std::size_t shift = static_cast<std::size_t>(degree(r) - db);
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= lr * b[j];
    trim(r);
    --steps;
  }
  if (steps > 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& x : r) x *= scale;
  }
  return r;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw InexactDivision("division by the zero polynomial");
  ZPoly r = a;
  trim(r);
  if (r.empty()) return ZPoly{};
  const int db = degree(b);
  if (degree(r) < db) return std::nullopt;
  ZPoly q(static_cast<std::size_t>(degree(r) - db) + 1, 0);
  while (!r.empty() && degree(r) >= db) {
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
    const std::size_t shift = static_cast<std::size_t>(degree(r) - db);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in) {
  ZPoly a = primitive_part(a_in);
  ZPoly b = primitive_part(b_in);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(b) > degree(a)) std::swap(a, b);
  mpz_class g = 1, h = 1;
  while (true) {
    const int delta = degree(a) - degree(b);
    ZPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) return ZPoly{1};
    mpz_class hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    const mpz_class divisor = g * hd;
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      mpz_class gd, hd1;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
  }
  return primitive_part(b);
}

ZPoly squarefree_part(const ZPoly& f) {
  const ZPoly p = primitive_part(f);
  if (degree(p) <= 0) return p;
  const ZPoly g = gcd(p, derivative(p));
  const auto q = divide_exact(multiply(p, ZPoly{g.back()}), g);
  if (!q) throw InexactDivision("squarefree part: gcd does not divide");
  return primitive_part(*q);
}

namespace {

// ---- arithmetic in F_p[x], p < 2^31, coefficients low to high ----

using Fp = std::vector<std::uint64_t>;

void fp_trim(Fp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_degree(const Fp& f) { return static_cast<int>(f.size()) - 1; }

Fp fp_from(const ZPoly& f, std::uint64_t p) {
  Fp out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(ma::reduce(c, p));
  fp_trim(out);
  return out;
}

Fp fp_sub(Fp a, const Fp& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ma::sub(a[i], b[i], p);
  fp_trim(a);
  return a;
}

Fp fp_add(Fp a, const Fp& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ma::add(a[i], b[i], p);
  fp_trim(a);
  return a;
}

Fp fp_mul(const Fp& a, const Fp& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  fp_trim(out);
  return out;
}

Fp fp_scale(Fp a, std::uint64_t c, std::uint64_t p) {
  for (auto& x : a) x = x * c % p;
  fp_trim(a);
  return a;
}

std::pair<Fp, Fp> fp_divrem(Fp a, const Fp& b, std::uint64_t p) {
  fp_trim(a);
  const int db = fp_degree(b);
  if (db < 0) throw InexactDivision("F_p division by zero");
  if (fp_degree(a) < db) return {Fp{}, a};
  const std::uint64_t inv = ma::inverse(b.back(), p);
  Fp q(static_cast<std::size_t>(fp_degree(a) - db) + 1, 0);
  for (int k = fp_degree(a); k >= db; --k) {
    const std::uint64_t c = a[k] * inv % p;
    if (c == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(k - db);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ma::sub(a[shift + j], c * b[j] % p, p);
  }
  fp_trim(a);
  fp_trim(q);
  return {q, a};
}

Fp fp_rem(const Fp& a, const Fp& b, std::uint64_t p) { return fp_divrem(a, b, p).second; }

Fp fp_monic(Fp a, std::uint64_t p) {
  if (a.empty()) return a;
  return fp_scale(std::move(a), ma::inverse(a.back(), p), p);
}

Fp fp_gcd(Fp a, Fp b, std::uint64_t p) {
  while (!b.empty()) {
    Fp r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(std::move(a), p);
}

// s * a + t * b == 1 for coprime a, b.
void fp_bezout(const Fp& a, const Fp& b, std::uint64_t p, Fp& s, Fp& t) {
  Fp r0 = a, r1 = b;
  Fp s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divrem(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Fp s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    Fp t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (fp_degree(r0) != 0) throw InexactDivision("Hensel lifting: factors are not coprime mod p");
  const std::uint64_t inv = ma::inverse(r0[0], p);
  s = fp_scale(s0, inv, p);
  t = fp_scale(t0, inv, p);
}

Fp fp_powmod(Fp base, const mpz_class& exponent, const Fp& modulus, std::uint64_t p) {
  Fp result{1};
  base = fp_rem(base, modulus, p);
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_rem(fp_mul(result, result, p), modulus, p);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = fp_rem(fp_mul(result, base, p), modulus, p);
  }
  return result;
}

Fp fp_derivative(const Fp& f, std::uint64_t p) {
  Fp out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * (i % p) % p);
  fp_trim(out);
  return out;
}

// Distinct-degree then equal-degree splitting of a monic squarefree f.
std::vector<Fp> fp_factor(const Fp& f_in, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<std::pair<Fp, int>> blocks;
  Fp f = f_in;
  const Fp x{0, 1};
  Fp h = fp_rem(x, f, p);
  int d = 0;
  while (fp_degree(f) >= 2 * (d + 1)) {
    ++d;
    h = fp_powmod(h, mpz_class(static_cast<unsigned long>(p)), f, p);
    Fp g = fp_gcd(fp_sub(h, x, p), f, p);
    if (fp_degree(g) > 0) {
      blocks.emplace_back(g, d);
      f = fp_divrem(f, g, p).first;
      h = fp_rem(h, f, p);
    }
  }
  if (fp_degree(f) > 0) blocks.emplace_back(f, fp_degree(f));

  std::vector<Fp> out;
  std::vector<std::pair<Fp, int>> work(blocks.begin(), blocks.end());
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  while (!work.empty()) {
    auto [g, deg] = std::move(work.back());
    work.pop_back();
    if (fp_degree(g) == deg) {
      out.push_back(std::move(g));
      continue;
    }
    mpz_class exponent;
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, static_cast<unsigned long>(deg));
    exponent = (exponent - 1) / 2;
    while (true) {
      Fp a(static_cast<std::size_t>(fp_degree(g)), 0);
      for (auto& c : a) c = coeff(rng);
      fp_trim(a);
      if (fp_degree(a) < 1) continue;
      Fp b = fp_sub(fp_powmod(a, exponent, g, p), Fp{1}, p);
      Fp split = fp_gcd(b, g, p);
      if (fp_degree(split) > 0 && fp_degree(split) < fp_degree(g)) {
        Fp other = fp_monic(fp_divrem(g, split, p).first, p);
        work.emplace_back(std::move(split), deg);
        work.emplace_back(std::move(other), deg);
        break;
      }
    }
  }
  return out;
}

// ---- Hensel lifting over Z / p^k ----

ZPoly mod_reduce(ZPoly f, const mpz_class& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(f);
  return f;
}

ZPoly to_z(const Fp& f) {
  ZPoly out;
  out.reserve(f.size());
  for (auto c : f) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

Fp product_mod_p(const std::vector<Fp>& fs, std::uint64_t p) {
  Fp out{1};
  for (const auto& f : fs) out = fp_mul(out, f, p);
  return out;
}

// Lifts f == g0 * h0 (mod p), g0 monic, to f == g * h (mod p^k) with g monic
// and lc(h) == lc(f) (mod p^k).
std::pair<ZPoly, ZPoly> hensel_lift_pair(const ZPoly& f, const Fp& g0, const Fp& h0,
                                         std::uint64_t p, unsigned k) {
  Fp s, t;
  fp_bezout(g0, h0, p, s, t);
  ZPoly g = to_z(g0);
  ZPoly h = to_z(h0);
  h.back() = f.back();
  mpz_class pk = static_cast<unsigned long>(p);
  for (unsigned step = 1; step < k; ++step) {
    const mpz_class next = pk * static_cast<unsigned long>(p);
    ZPoly diff = multiply(g, h);
    diff.resize(std::max(diff.size(), f.size()), 0);
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = (i < f.size() ? f[i] : mpz_class(0)) - diff[i];
    }
    diff = mod_reduce(std::move(diff), next);
    Fp e;
    e.reserve(diff.size());
    for (auto& c : diff) {
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
      e.push_back(ma::reduce(c, p));
    }
    fp_trim(e);
    auto [q, sigma] = fp_divrem(fp_mul(s, e, p), h0, p);
    const Fp tau = fp_rem(fp_add(fp_mul(t, e, p), fp_mul(q, g0, p), p), g0, p);
    for (std::size_t i = 0; i < tau.size(); ++i) g[i] += pk * static_cast<unsigned long>(tau[i]);
    for (std::size_t i = 0; i < sigma.size(); ++i) h[i] += pk * static_cast<unsigned long>(sigma[i]);
    g = mod_reduce(std::move(g), next);
    h = mod_reduce(std::move(h), next);
    h.resize(f.size() - g.size() + 1, 0);
    h.back() = f.back();  // keeps deg(f - g * h) < deg f
    pk = next;
  }
  return {g, mod_reduce(std::move(h), pk)};
}

void hensel_lift_all(const ZPoly& f, const std::vector<Fp>& factors, std::uint64_t p, unsigned k,
                     const mpz_class& modulus, std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly monic = f;
    for (auto& c : monic) c *= inv;
    out.push_back(mod_reduce(std::move(monic), modulus));
    return;
  }
  const std::size_t half = factors.size() / 2;
  const std::vector<Fp> left(factors.begin(), factors.begin() + static_cast<long>(half));
  const std::vector<Fp> right(factors.begin() + static_cast<long>(half), factors.end());
  const Fp g0 = product_mod_p(left, p);
  const Fp h0 = fp_scale(product_mod_p(right, p), ma::reduce(f.back(), p), p);
  auto [g, h] = hensel_lift_pair(f, g0, h0, p, k);
  hensel_lift_all(g, left, p, k, modulus, out);
  hensel_lift_all(h, right, p, k, modulus, out);
}

ZPoly symmetric(ZPoly f, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(f);
  return f;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool less_poly(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& f_in) {
  const ZPoly f = primitive_part(f_in);
  const int n = degree(f);
  if (n <= 0) throw PreconditionError("factor_squarefree needs a polynomial of positive degree");
  if (n == 1) return {f};

  // Choose the admissible prime (among the first few) with the fewest modular factors.
  std::mt19937_64 rng(0x6b33666f726d73ULL);
  std::vector<Fp> best;
  std::uint64_t best_p = 0;
  int admissible = 0;
  for (std::uint64_t p = 1009; admissible < 6 && p < (1ULL << 31); p += 2) {
    if (!ma::is_prime(p) || mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    const Fp fp = fp_monic(fp_from(f, p), p);
    if (fp_degree(fp_gcd(fp, fp_derivative(fp, p), p)) != 0) continue;
    ++admissible;
    std::vector<Fp> fs = fp_factor(fp, p, rng);
    if (best_p == 0 || fs.size() < best.size()) {
      best = std::move(fs);
      best_p = p;
    }
    if (best.size() == 1) return {f};
  }
  if (best_p == 0) throw InexactDivision("no admissible prime for factorization");
  const std::uint64_t p = best_p;
  std::sort(best.begin(), best.end(), [](const Fp& a, const Fp& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });

  // Coefficient bound for lc(f) * (monic factor): |lc| * 2^n * ||f||_2.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  bound <<= static_cast<unsigned long>(n);
  bound *= abs(f.back());
  bound *= 2;
  unsigned k = 1;
  mpz_class modulus = static_cast<unsigned long>(p);
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(p);
    ++k;
  }

  std::vector<ZPoly> lifted;
  hensel_lift_all(f, best, p, k, modulus, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    do {
      ZPoly candidate{rest.back()};
      for (auto i : pick) candidate = mod_reduce(multiply(candidate, lifted[remaining[i]]), modulus);
      candidate = primitive_part(symmetric(std::move(candidate), modulus));
      if (!mpz_divisible_p(rest.front().get_mpz_t(), candidate.front().get_mpz_t())) continue;
      if (auto q = divide_exact(rest, candidate)) {
        result.push_back(candidate);
        rest = std::move(*q);
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) next.push_back(remaining[i]);
        }
        remaining = std::move(next);
        found = true;
        break;
      }
    } while (next_combination(pick, remaining.size()));
    if (!found) ++size;
  }
  if (degree(rest) > 0) result.push_back(primitive_part(rest));
  std::sort(result.begin(), result.end(), less_poly);
  return result;
}

std::vector<Factor> factor(const ZPoly& f_in) {
  ZPoly f = primitive_part(f_in);
  if (f.empty()) throw PreconditionError("cannot factor the zero polynomial");
  std::vector<Factor> out;
  if (degree(f) == 0) return out;
  for (auto& irreducible : factor_squarefree(squarefree_part(f))) {
    int multiplicity = 0;
    while (auto q = divide_exact(f, irreducible)) {
      f = std::move(*q);
      ++multiplicity;
    }
    out.push_back({std::move(irreducible), multiplicity});
  }
  std::sort(out.begin(), out.end(),
            [](const Factor& a, const Factor& b) { return less_poly(a.poly, b.poly); });
  return out;
}

}  // namespace k3::zpoly
