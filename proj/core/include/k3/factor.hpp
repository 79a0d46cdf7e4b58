#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

// Dense integer polynomials (coefficients low to high) with gcd, squarefree
// part and complete factorization over Q.
namespace k3::zpoly {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& f);
int degree(const ZPoly& f);
mpz_class content(const ZPoly& f);
/// f / content(f), normalized to a positive leading coefficient.
ZPoly primitive_part(const ZPoly& f);
ZPoly derivative(const ZPoly& f);
ZPoly multiply(const ZPoly& a, const ZPoly& b);
/// lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);
/// a / b if the quotient lies in Z[x].
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

/// Primitive gcd over Q (positive leading coefficient) by the subresultant PRS.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Primitive squarefree part pp(f / gcd(f, f')).
ZPoly squarefree_part(const ZPoly& f);

/// Irreducible factors of a primitive squarefree f of positive degree
/// (Berlekamp-Zassenhaus: Cantor-Zassenhaus mod p, Hensel lifting, recombination).
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

struct Factor {
  ZPoly poly;  // primitive, irreducible over Q, positive leading coefficient
  int multiplicity;
};

/// Nonconstant irreducible factors of f != 0, sorted by degree then coefficients.
std::vector<Factor> factor(const ZPoly& f);

}  // namespace k3::zpoly
