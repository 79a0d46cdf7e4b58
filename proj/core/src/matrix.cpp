#include "k3/matrix.hpp"

#include "k3/modarith.hpp"

namespace k3 {

namespace ma = modarith;

mpz_class integer_determinant(std::vector<mpz_class> a, std::size_t n) {
  if (a.size() != n * n || n == 0) throw PreconditionError("integer_determinant: bad shape");
  const auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * n + c]; };
  mpz_class previous = 1;
  mpz_class tmp;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
      negate = !negate;
    }
    const mpz_class& pk = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpz_class& lead = at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class& e = at(i, j);
        mpz_mul(tmp.get_mpz_t(), e.get_mpz_t(), pk.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), at(k, j).get_mpz_t());
        mpz_divexact(e.get_mpz_t(), tmp.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = pk;
  }
  mpz_class det = at(n - 1, n - 1);
  return negate ? mpz_class(-det) : det;
}

std::uint64_t determinant_mod_p(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p) {
  if (a.size() != n * n || n == 0) throw PreconditionError("determinant_mod_p: bad shape");
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(a[k * n + c], a[pivot * n + c]);
      det = ma::neg(det, p);
    }
    const std::uint64_t pk = a[k * n + k];
    det = ma::mul(det, pk, p);
    const std::uint64_t inv = ma::inverse(pk, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::uint64_t factor = ma::mul(a[i * n + k], inv, p);
      if (factor == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = ma::sub(a[i * n + j], ma::mul(factor, a[k * n + j], p), p);
      }
    }
  }
  return det;
}

std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                       std::uint64_t p) {
  if (a.size() != rows * cols) throw PreconditionError("rank_mod_p: bad shape");
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[rank * cols + j], a[pivot * cols + j]);
    }
    const std::uint64_t inv = ma::inverse(a[rank * cols + c], p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t factor = ma::mul(a[i * cols + c], inv, p);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = ma::sub(a[i * cols + j], ma::mul(factor, a[rank * cols + j], p), p);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t integer_rank(std::vector<mpz_class> a, std::size_t rows, std::size_t cols) {
  if (a.size() != rows * cols) throw PreconditionError("integer_rank: bad shape");
  std::size_t rank = 0;
  mpz_class previous = 1;
  mpz_class tmp;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[rank * cols + j], a[pivot * cols + j]);
    }
    const mpz_class pk = a[rank * cols + c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class lead = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) {
        mpz_class& e = a[i * cols + j];
        mpz_mul(tmp.get_mpz_t(), e.get_mpz_t(), pk.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), a[rank * cols + j].get_mpz_t());
        mpz_divexact(e.get_mpz_t(), tmp.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = pk;
    ++rank;
  }
  return rank;
}

Scalar determinant(const Matrix<Scalar>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n || n == 0) throw PreconditionError("determinant of a non-square matrix");
  const CoeffRing ring = m(0, 0).ring();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) require_same_ring(ring, m(r, c).ring(), "determinant");
  }
  switch (ring.domain) {
    case Domain::integer: {
      std::vector<mpz_class> a;
      a.reserve(n * n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a.push_back(m(r, c).integer());
      }
      return Scalar(integer_determinant(std::move(a), n));
    }
    case Domain::modular: {
      std::vector<std::uint64_t> a;
      a.reserve(n * n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a.push_back(m(r, c).residue());
      }
      return Scalar::modular(determinant_mod_p(std::move(a), n, ring.modulus), ring.modulus);
    }
    case Domain::rational:
      break;
  }
  return bareiss_determinant(m);
}

}  // namespace k3
