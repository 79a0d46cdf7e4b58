#include "k3/invariants.hpp"

#include <numeric>

#include "k3/elimination.hpp"

namespace k3 {

SurfaceParams sl2_act(const Mat2<Scalar>& gamma, const SurfaceParams& u) {
  const Scalar det = gamma[0] * gamma[3] - gamma[1] * gamma[2];
  if (!det.is_one()) throw PreconditionError("sl2_act needs a matrix of determinant 1, got " + det.str());
  const Scalar& proto = u.g2[0];
  const Mat2<Scalar> lifted{lift_like(proto, gamma[0]), lift_like(proto, gamma[1]),
                            lift_like(proto, gamma[2]), lift_like(proto, gamma[3])};
  const auto forms = assemble(u);
  return SurfaceParams::from_forms(binary_substitute(forms.g2, lifted),
                                   binary_substitute(forms.g3, lifted));
}

SurfaceParams gm_act(const Scalar& lambda, const SurfaceParams& u) {
  if (lambda.is_zero()) throw PreconditionError("gm_act needs lambda != 0");
  const Scalar l = lift_like(u.g2[0], lambda);
  const Scalar l4 = l.pow(4);
  const Scalar l6 = l.pow(6);
  SurfaceParams out = u;
  for (auto& c : out.g2) c *= l4;
  for (auto& c : out.g3) c *= l6;
  return out;
}

std::string_view to_string(InvariantName name) {
  switch (name) {
    case InvariantName::r96: return "r96";
    case InvariantName::k552: return "k552";
    case InvariantName::delta264: return "delta264";
  }
  return "?";
}

std::optional<InvariantName> parse_invariant_name(std::string_view text) {
  for (auto name : {InvariantName::r96, InvariantName::k552, InvariantName::delta264}) {
    if (text == to_string(name)) return name;
  }
  return std::nullopt;
}

int declared_weight(InvariantName name) {
  const auto c = grading_constants();
  switch (name) {
    case InvariantName::r96: return c.r96_weight;
    case InvariantName::k552: return c.k552_weight;
    case InvariantName::delta264: return c.relation_weight;
  }
  return 0;
}

namespace {

InvariantValue make_value(InvariantName name, Scalar v) {
  return {name, std::move(v), declared_weight(name)};
}

Scalar k552_value(const SurfaceParams& u) {
  const auto forms = assemble(u);
  if (forms.h.is_zero()) throw DegenerateInput("degenerate family: h vanishes identically");
  return discriminant_binary(forms.h);
}

Scalar r96_value(const SurfaceParams& u) {
  const auto forms = assemble(u);
  return resultant(forms.g2, forms.g3);
}

}  // namespace

InvariantValue r96(const SurfaceParams& u) { return make_value(InvariantName::r96, r96_value(u)); }

InvariantValue k552(const SurfaceParams& u) { return make_value(InvariantName::k552, k552_value(u)); }

InvariantValue delta264(const SurfaceParams& u) {
  const Scalar r = r96_value(u);
  if (r.is_zero()) throw PreconditionError("delta264 is undefined where r96 = 0");
  return make_value(InvariantName::delta264, divexact(k552_value(u), r.pow(3)));
}

InvariantValue evaluate_invariant(InvariantName name, const SurfaceParams& u) {
  switch (name) {
    case InvariantName::r96: return r96(u);
    case InvariantName::k552: return k552(u);
    case InvariantName::delta264: return delta264(u);
  }
  throw PreconditionError("unknown invariant");
}

std::pair<BinaryForm<UPoly>, BinaryForm<UPoly>> line_forms(const SurfaceParams& u0,
                                                           const SurfaceParams& u1) {
  const CoeffRing ring = u0.ring();
  require_same_ring(ring, u1.ring(), "slice");
  auto line = [&](const auto& a, const auto& b) {
    std::vector<UPoly> coeffs;
    for (std::size_t i = 0; i < a.size(); ++i) coeffs.emplace_back(ring, std::vector<Scalar>{a[i], b[i]});
    return BinaryForm<UPoly>(std::move(coeffs));
  };
  return {line(u0.g2, u1.g2), line(u0.g3, u1.g3)};
}

SliceRecord slice_divisibility(const SurfaceParams& u0, const SurfaceParams& u1,
                               std::optional<std::uint64_t> modulus) {
  auto [g2, g3] = line_forms(u0, u1);
  const auto h = weierstrass_discriminant(g2, g3);
  const auto [hx, hw] = binary_partials(h);

  SliceRecord record;
  record.modulus = modulus;
  record.r96 = univariate_determinant(sylvester_matrix(g2, g3), modulus);
  if (record.r96.is_zero()) throw PreconditionError("r96 vanishes identically on the line");
  record.k552 = univariate_determinant(sylvester_matrix(hx, hw), modulus);
  record.r96_degree = record.r96.degree();
  record.k552_degree = record.k552.degree();
  try {
    auto [q, rem] = divrem(record.k552, record.r96.pow(3));
    if (rem.is_zero()) {
      record.divisible = true;
      record.quotient_degree = q.degree();
      record.quotient = std::move(q);
    }
  } catch (const InexactDivision&) {
    record.divisible = false;
  }
  return record;
}

GradingConstants grading_constants() {
  GradingConstants c{};
  const auto& vars = *surface_variables();
  c.ambient_variable_count = static_cast<int>(vars.size());
  c.variable_weights.assign(vars.weights().begin(), vars.weights().end());
  c.canonical_weight = -std::accumulate(c.variable_weights.begin(), c.variable_weights.end(), 0);

  const int w2 = vars.weight(0);
  const int w3 = vars.weight(vars.size() - 1);
  // Res of forms of degrees m, n has degree n in the first form's coefficients, m in the second's.
  c.r96_weight = kG3Degree * w2 + kG2Degree * w3;
  // h has coefficient weight 3 w2 = 2 w3; disc of a degree-24 form has degree 2 * 23.
  const int h_weight = 3 * w2;
  if (h_weight != 2 * w3) throw std::logic_error("g2^3 and g3^2 must have equal weight");
  c.k552_weight = 2 * (kHDegree - 1) * h_weight;
  c.relation_weight = c.k552_weight - 3 * c.r96_weight;
  c.borcherds_weight = c.relation_weight / 2;
  c.modular_dim = c.canonical_weight + c.borcherds_weight;
  // dim S - dim G_m - dim SL2.
  if (c.modular_dim != c.ambient_variable_count - 1 - 3) {
    throw std::logic_error("grading constants disagree with the dimension count");
  }
  return c;
}

GradedRingPresentation character_extension() {
  const auto c = grading_constants();
  return {"C[S]^SL2", c.borcherds_weight, c.relation_weight, "det"};
}

}  // namespace k3
