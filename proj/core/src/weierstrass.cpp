#include "k3/weierstrass.hpp"

#include <algorithm>

#include "k3/elimination.hpp"
#include "k3/poly_text.hpp"

namespace k3 {

SurfaceParams SurfaceParams::zero(CoeffRing ring) {
  SurfaceParams u;
  u.g2.fill(ring.zero());
  u.g3.fill(ring.zero());
  return u;
}

SurfaceParams SurfaceParams::from_forms(const BinaryForm<Scalar>& g2, const BinaryForm<Scalar>& g3) {
  if (g2.degree() != kG2Degree || g3.degree() != kG3Degree) {
    throw PreconditionError("g2 and g3 must have degrees 8 and 12");
  }
  SurfaceParams u;
  std::copy(g2.coefficients().begin(), g2.coefficients().end(), u.g2.begin());
  std::copy(g3.coefficients().begin(), g3.coefficients().end(), u.g3.begin());
  u.ring();
  return u;
}

CoeffRing SurfaceParams::ring() const {
  const CoeffRing r = g2[0].ring();
  for (const auto& c : g2) require_same_ring(r, c.ring(), "surface parameters");
  for (const auto& c : g3) require_same_ring(r, c.ring(), "surface parameters");
  return r;
}

SurfaceParams SurfaceParams::reduce_mod(std::uint64_t p) const {
  SurfaceParams out;
  for (std::size_t i = 0; i < g2.size(); ++i) out.g2[i] = g2[i].reduce_mod(p);
  for (std::size_t i = 0; i < g3.size(); ++i) out.g3[i] = g3[i].reduce_mod(p);
  return out;
}

const VariableTablePtr& surface_variables() {
  static const VariableTablePtr table = [] {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int j = 0; j <= kG2Degree; ++j) {
      names.push_back("u_{" + std::to_string(kG2Degree - j) + "," + std::to_string(j) + "}");
      weights.push_back(4);
    }
    for (int j = 0; j <= kG3Degree; ++j) {
      names.push_back("u_{" + std::to_string(kG3Degree - j) + "," + std::to_string(j) + "}");
      weights.push_back(6);
    }
    return VariableTable::make(std::move(names), std::move(weights));
  }();
  return table;
}

namespace {

BinaryForm<MultiPoly> generic_form(CoeffRing ring, std::size_t offset, int degree) {
  std::vector<MultiPoly> coeffs;
  for (int j = 0; j <= degree; ++j) {
    coeffs.push_back(MultiPoly::variable(surface_variables(), ring, offset + static_cast<std::size_t>(j)));
  }
  return BinaryForm<MultiPoly>(std::move(coeffs));
}

}  // namespace

BinaryForm<MultiPoly> generic_g2(CoeffRing ring) { return generic_form(ring, 0, kG2Degree); }
BinaryForm<MultiPoly> generic_g3(CoeffRing ring) { return generic_form(ring, kG2Degree + 1, kG3Degree); }

WeierstrassForms assemble(const SurfaceParams& u) {
  u.ring();
  BinaryForm<Scalar> g2(std::vector<Scalar>(u.g2.begin(), u.g2.end()));
  BinaryForm<Scalar> g3(std::vector<Scalar>(u.g3.begin(), u.g3.end()));
  BinaryForm<Scalar> h = weierstrass_discriminant(g2, g3);
  return {std::move(g2), std::move(g3), std::move(h)};
}

std::string KodairaType::tag() const {
  switch (kind) {
    case KodairaKind::I0: return "I0";
    case KodairaKind::In: return "I" + std::to_string(n);
    case KodairaKind::II: return "II";
    case KodairaKind::III: return "III";
    case KodairaKind::IV: return "IV";
    case KodairaKind::I0_star: return "I0*";
    case KodairaKind::In_star: return "I" + std::to_string(n) + "*";
    case KodairaKind::IV_star: return "IV*";
    case KodairaKind::III_star: return "III*";
    case KodairaKind::II_star: return "II*";
    case KodairaKind::non_minimal: return "non-minimal";
  }
  return "?";
}

namespace {

[[noreturn]] void inconsistent(int m2, int m3, int d) {
  auto show = [](int v) { return v == kInfiniteOrder ? std::string("inf") : std::to_string(v); };
  throw PreconditionError("inconsistent triple (" + show(m2) + ", " + show(m3) + ", " + show(d) + ")");
}

}  // namespace

KodairaType kodaira_type(int m2, int m3, int d) {
  if (m2 < 0 || m3 < 0 || d < 0 || d == kInfiniteOrder) inconsistent(m2, m3, d);
  if (m2 == kInfiniteOrder && m3 == kInfiniteOrder) inconsistent(m2, m3, d);
  // ord(4 g2^3 + 27 g3^2) is min(3 m2, 2 m3) unless the two orders tie.
  const long a = m2 == kInfiniteOrder ? std::numeric_limits<long>::max() : 3L * m2;
  const long b = m3 == kInfiniteOrder ? std::numeric_limits<long>::max() : 2L * m3;
  if (a != b ? d != std::min(a, b) : d < a) inconsistent(m2, m3, d);

  using K = KodairaKind;
  if (d == 0) return {K::I0, 0};
  if (m2 == 0 && m3 == 0) return {K::In, d};
  if (m2 >= 4 && m3 >= 6) return {K::non_minimal, 0};
  if (m3 == 1) return {K::II, 0};
  if (m2 == 1) return {K::III, 0};
  if (m3 == 2) return {K::IV, 0};
  if (m2 == 2 && m3 == 3) return d == 6 ? KodairaType{K::I0_star, 0} : KodairaType{K::In_star, d - 6};
  if (m3 == 3 || m2 == 2) return {K::I0_star, 0};
  if (m3 == 4) return {K::IV_star, 0};
  if (m2 == 3) return {K::III_star, 0};
  if (m3 == 5) return {K::II_star, 0};
  inconsistent(m2, m3, d);
}

namespace {

int order_at(const std::vector<FormFactor>& factors, const FormFactor& place) {
  for (const auto& f : factors) {
    if (f.at_infinity == place.at_infinity && f.form == place.form) return f.multiplicity;
  }
  return 0;
}

}  // namespace

FiberReport fiber_profile(const SurfaceParams& u) {
  if (u.ring().domain == Domain::modular) {
    throw DomainError("fiber_profile needs integer or rational parameters");
  }
  const auto forms = assemble(u);
  FiberReport report;
  if (forms.h.is_zero()) {
    report.h_is_zero = true;
    return report;
  }
  const bool g2_zero = forms.g2.is_zero();
  const bool g3_zero = forms.g3.is_zero();
  const auto g2_factors = g2_zero ? std::vector<FormFactor>{} : gcd_and_squarefree(forms.g2);
  const auto g3_factors = g3_zero ? std::vector<FormFactor>{} : gcd_and_squarefree(forms.g3);
  report.in_U = true;
  for (const auto& place : gcd_and_squarefree(forms.h)) {
    FiberPlace fp;
    fp.place = place.label();
    fp.residue_degree = place.degree();
    fp.m2 = g2_zero ? kInfiniteOrder : order_at(g2_factors, place);
    fp.m3 = g3_zero ? kInfiniteOrder : order_at(g3_factors, place);
    fp.d = place.multiplicity;
    fp.kodaira = kodaira_type(fp.m2, fp.m3, fp.d);
    if (fp.kodaira.kind == KodairaKind::non_minimal) report.in_U = false;
    report.euler_sum += fp.d * fp.residue_degree;
    report.places.push_back(std::move(fp));
  }
  return report;
}

std::string to_string(DegenerationComponent c) {
  switch (c) {
    case DegenerationComponent::a1: return "A1-component";
    case DegenerationComponent::type_ii: return "II-component";
    case DegenerationComponent::deeper: return "deeper";
  }
  return "?";
}

DegenerationComponent degeneration_component(const SurfaceParams& u) {
  const auto forms = assemble(u);
  if (forms.h.is_zero()) throw DegenerateInput("degenerate family: h vanishes identically");
  if (!discriminant_binary(forms.h).is_zero()) {
    throw PreconditionError("u is not on the divisor k552 = 0");
  }
  const FiberReport report = fiber_profile(u);
  bool nodal = false;
  bool cusp = false;
  bool other_cusp = false;
  for (const auto& place : report.places) {
    if (place.kodaira.kind == KodairaKind::non_minimal) continue;
    if (place.m2 == 0 && place.m3 == 0) {
      nodal = nodal || place.d >= 2;
    } else if (place.m2 >= 1 && place.m3 >= 1) {
      cusp = true;
      other_cusp = other_cusp || place.kodaira.kind != KodairaKind::II;
    }
  }
  if (nodal && !cusp) return DegenerationComponent::a1;
  if (cusp && !nodal && !other_cusp) return DegenerationComponent::type_ii;
  return DegenerationComponent::deeper;
}

}  // namespace k3
