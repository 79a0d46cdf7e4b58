#include "k3/elimination.hpp"

#include <algorithm>

#include "k3/factor.hpp"
#include "k3/modarith.hpp"
#include "k3/poly_text.hpp"

namespace k3 {

namespace ma = modarith;
using zpoly::ZPoly;

std::string FormFactor::label() const { return format_form(form); }

namespace {

// Splits f into w^e * F(x, w) with F(1, 0) != 0 and returns (e, F(x, 1)) with
// denominators cleared.
std::pair<int, ZPoly> dehomogenize(const BinaryForm<Scalar>& f) {
  const int n = f.degree();
  const Domain domain = f[0].domain();
  if (domain == Domain::modular) {
    throw DomainError("factorization over Q needs integer or rational coefficients");
  }
  mpz_class lcm_den = 1;
  for (int i = 0; i <= n; ++i) {
    require_same_ring(f[0].ring(), f[i].ring(), "binary form");
    if (domain == Domain::rational) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), f[i].rational().get_den_mpz_t());
    }
  }
  int e = 0;
  while (e <= n && f[e].is_zero()) ++e;
  if (e > n) throw PreconditionError("cannot factor the zero form");
  ZPoly p;
  // Coefficient of x^(n-i) in F(x, 1) is f[i]; lowest degree first.
  for (int i = n; i >= e; --i) {
    if (domain == Domain::integer) {
      p.push_back(f[i].integer());
    } else {
      const mpq_class scaled = f[i].rational() * lcm_den;
      p.push_back(scaled.get_num());
    }
  }
  zpoly::trim(p);
  return {e, p};
}

BinaryForm<Scalar> homogenize_monic(const ZPoly& p) {
  const int d = zpoly::degree(p);
  std::vector<Scalar> coeffs;
  coeffs.reserve(static_cast<std::size_t>(d) + 1);
  for (int i = d; i >= 0; --i) coeffs.emplace_back(mpq_class(p[i], p.back()));
  return BinaryForm<Scalar>(std::move(coeffs));
}

BinaryForm<Scalar> w_power(int e) {
  std::vector<Scalar> coeffs(static_cast<std::size_t>(e) + 1, Scalar(mpq_class(0)));
  coeffs.back() = Scalar(mpq_class(1));
  return BinaryForm<Scalar>(std::move(coeffs));
}

}  // namespace

std::vector<FormFactor> gcd_and_squarefree(const BinaryForm<Scalar>& f) {
  const auto [e, p] = dehomogenize(f);
  std::vector<FormFactor> out;
  if (zpoly::degree(p) > 0) {
    for (const auto& factor : zpoly::factor(p)) {
      out.push_back({homogenize_monic(factor.poly), factor.multiplicity, false});
    }
  }
  if (e > 0) out.push_back({w_power(1), e, true});
  return out;
}

BinaryForm<Scalar> binary_gcd(const BinaryForm<Scalar>& f, const BinaryForm<Scalar>& g) {
  const auto [ef, pf] = dehomogenize(f);
  const auto [eg, pg] = dehomogenize(g);
  const BinaryForm<Scalar> finite = homogenize_monic(zpoly::gcd(pf, pg));
  return finite * w_power(std::min(ef, eg));
}

namespace {

// Coefficients (low to high) of det(M(s)) mod p, interpolated from s = 0..bound.
std::vector<std::uint64_t> determinant_mod_prime(const Matrix<UPoly>& m, int bound,
                                                 std::uint64_t p) {
  const std::size_t n = m.rows();
  std::vector<std::vector<std::uint64_t>> reduced(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      auto& out = reduced[r * n + c];
      for (const auto& coeff : m(r, c).coefficients()) {
        switch (coeff.domain()) {
          case Domain::integer:
            out.push_back(ma::reduce(coeff.integer(), p));
            break;
          default:
            out.push_back(coeff.reduce_mod(p).residue());
            break;
        }
      }
    }
  }
  const auto points = static_cast<std::size_t>(bound) + 1;
  std::vector<std::uint64_t> values(points);
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t k = 0; k < points; ++k) {
    const std::uint64_t s = k;
    for (std::size_t idx = 0; idx < n * n; ++idx) {
      std::uint64_t acc = 0;
      const auto& poly = reduced[idx];
      for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = ma::add(ma::mul(acc, s, p), *it, p);
      a[idx] = acc;
    }
    values[k] = determinant_mod_p(a, n, p);
  }
  // Newton divided differences on the nodes 0..bound.
  std::vector<std::uint64_t> dd = values;
  for (std::size_t level = 1; level < points; ++level) {
    const std::uint64_t inv = ma::inverse(level % p, p);
    for (std::size_t i = points - 1; i >= level; --i) {
      dd[i] = ma::mul(ma::sub(dd[i], dd[i - 1], p), inv, p);
    }
  }
  // Expand sum dd[i] * prod_{j<i} (s - j) by Horner from the top.
  std::vector<std::uint64_t> coeffs{dd[points - 1]};
  for (std::size_t i = points - 1; i-- > 0;) {
    // coeffs = coeffs * (s - i) + dd[i]
    std::vector<std::uint64_t> next(coeffs.size() + 1, 0);
    const std::uint64_t node = i % p;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] = ma::add(next[j + 1], coeffs[j], p);
      next[j] = ma::sub(next[j], ma::mul(coeffs[j], node, p), p);
    }
    next[0] = ma::add(next[0], dd[i], p);
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

UPoly univariate_determinant(const Matrix<UPoly>& m, std::optional<std::uint64_t> modulus) {
  const std::size_t n = m.rows();
  if (m.cols() != n || n == 0) throw PreconditionError("determinant of a non-square matrix");
  const CoeffRing ring = m(0, 0).ring();
  int bound = 0;
  for (std::size_t r = 0; r < n; ++r) {
    int row_degree = -1;
    for (std::size_t c = 0; c < n; ++c) {
      require_same_ring(ring, m(r, c).ring(), "univariate determinant");
      row_degree = std::max(row_degree, m(r, c).degree());
    }
    if (row_degree < 0) return UPoly(modulus ? CoeffRing::modular(*modulus) : ring);
    bound += row_degree;
  }

  if (modulus || ring.domain == Domain::modular) {
    const std::uint64_t p = modulus ? *modulus : ring.modulus;
    const CoeffRing target = CoeffRing::modular(p);
    if (p <= static_cast<std::uint64_t>(bound)) {
      throw PreconditionError("modulus " + std::to_string(p) +
                              " is too small to interpolate a determinant of degree " +
                              std::to_string(bound));
    }
    std::vector<Scalar> coeffs;
    for (auto c : determinant_mod_prime(m, bound, p)) coeffs.push_back(Scalar::modular(c, p));
    return UPoly(target, std::move(coeffs));
  }
  if (ring.domain != Domain::integer) {
    throw DomainError("multimodular determinant needs integer entries");
  }

  mpz_class permanent_bound = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class row = 0;
    for (std::size_t c = 0; c < n; ++c) {
      for (const auto& coeff : m(r, c).coefficients()) row += abs(coeff.integer());
    }
    permanent_bound *= row;
  }
  const mpz_class target = 2 * permanent_bound + 1;

  std::vector<mpz_class> crt(static_cast<std::size_t>(bound) + 1, 0);
  mpz_class product = 1;
  std::uint64_t below = ma::kMaxModulus;
  while (product < target) {
    const std::uint64_t p = ma::primes_below(below, 1).front();
    below = p;
    const auto residues = determinant_mod_prime(m, bound, p);
    // Incremental CRT: x += product * ((r - x) * product^-1 mod p).
    const std::uint64_t inv = ma::inverse(ma::reduce(product, p), p);
    for (std::size_t i = 0; i < crt.size(); ++i) {
      const std::uint64_t r = i < residues.size() ? residues[i] : 0;
      const std::uint64_t delta = ma::mul(ma::sub(r, ma::reduce(crt[i], p), p), inv, p);
      crt[i] += product * static_cast<unsigned long>(delta);
    }
    product *= static_cast<unsigned long>(p);
  }
  const mpz_class half = product / 2;
  std::vector<Scalar> coeffs;
  coeffs.reserve(crt.size());
  for (auto& c : crt) {
    if (c > half) c -= product;
    coeffs.emplace_back(std::move(c));
  }
  return UPoly(CoeffRing::integers(), std::move(coeffs));
}

}  // namespace k3
