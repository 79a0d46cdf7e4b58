#include "k3/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "k3/errors.hpp"

namespace k3 {

VariableTable::VariableTable(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) {
    throw PreconditionError("variable table: names and weights differ in length");
  }
  for (int w : weights_) {
    if (w < 0) throw PreconditionError("variable table: weights must be nonnegative");
  }
}

std::shared_ptr<const VariableTable> VariableTable::make(std::vector<std::string> names,
                                                         std::vector<int> weights) {
  return std::make_shared<const VariableTable>(std::move(names), std::move(weights));
}

std::shared_ptr<const VariableTable> VariableTable::make(std::vector<std::string> names) {
  std::vector<int> weights(names.size(), 1);
  return make(std::move(names), std::move(weights));
}

std::optional<std::size_t> VariableTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const noexcept {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(VariableTablePtr vars, CoeffRing ring)
    : vars_(std::move(vars)), ring_(ring) {
  if (!vars_) throw PreconditionError("polynomial needs a variable table");
}

MultiPoly MultiPoly::constant(VariableTablePtr vars, const Scalar& c) {
  MultiPoly p(std::move(vars), c.ring());
  p.add_term(Exponents(p.vars_->size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(VariableTablePtr vars, CoeffRing ring, std::size_t index) {
  MultiPoly p(std::move(vars), ring);
  if (index >= p.vars_->size()) throw PreconditionError("variable index out of range");
  Exponents e(p.vars_->size(), 0);
  e[index] = 1;
  p.add_term(e, ring.one());
  return p;
}

MultiPoly MultiPoly::variable(VariableTablePtr vars, CoeffRing ring, std::string_view name) {
  const auto idx = vars->index_of(name);
  if (!idx) throw PreconditionError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(vars), ring, *idx);
}

MultiPoly MultiPoly::monomial(VariableTablePtr vars, Exponents exps, const Scalar& c) {
  MultiPoly p(std::move(vars), c.ring());
  p.add_term(exps, c);
  return p;
}

const MultiPoly::TermMap::value_type& MultiPoly::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return *terms_.begin();
}

Scalar MultiPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? ring_.zero() : it->second;
}

std::optional<Scalar> MultiPoly::constant_value() const {
  if (terms_.empty()) return ring_.zero();
  if (terms_.size() == 1) {
    const auto& [e, c] = *terms_.begin();
    if (std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; })) return c;
  }
  return std::nullopt;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != vars_->size()) {
    throw DomainError("exponent vector length does not match the variable table");
  }
  require_same_ring(ring_, c.ring(), "add_term");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_compatible(const MultiPoly& b, std::string_view op) const {
  if (vars_ != b.vars_ && *vars_ != *b.vars_) {
    throw DomainError("variable list mismatch in " + std::string(op));
  }
  require_same_ring(ring_, b.ring_, op);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
  require_compatible(b, "addition");
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) {
  require_compatible(b, "subtraction");
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b, "multiplication");
  MultiPoly out(a.vars_, a.ring_);
  Exponents e(a.vars_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out(a.vars_, a.ring_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
  return out;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  require_same_ring(ring_, c.ring(), "scaling");
  MultiPoly out(vars_, ring_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) {
    Scalar prod = v * c;
    if (!prod.is_zero()) out.terms_.emplace_hint(out.terms_.end(), e, std::move(prod));
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(vars_, ring_.one());
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= vars_->size()) throw PreconditionError("variable index out of range");
  MultiPoly out(vars_, ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * ring_.from_int(static_cast<long>(e[var])));
  }
  return out;
}

namespace {

using TermRef = std::pair<const Exponents*, const Scalar*>;

// Recursive Horner scheme: terms[begin, end) share exponents of variables
// before `var` and are sorted lexicographically descending.
Scalar horner(const std::vector<TermRef>& terms, std::size_t begin, std::size_t end,
              std::size_t var, std::span<const Scalar> point, const CoeffRing& ring) {
  if (var == point.size()) return *terms[begin].second;
  Scalar acc = ring.zero();
  std::uint32_t previous = (*terms[begin].first)[var];
  std::size_t i = begin;
  while (i < end) {
    const std::uint32_t e = (*terms[i].first)[var];
    std::size_t j = i;
    while (j < end && (*terms[j].first)[var] == e) ++j;
    acc = acc * point[var].pow(previous - e) + horner(terms, i, j, var + 1, point, ring);
    previous = e;
    i = j;
  }
  return acc * point[var].pow(previous);
}

}  // namespace

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != vars_->size()) {
    throw PreconditionError("evaluation point has " + std::to_string(point.size()) +
                            " entries, expected " + std::to_string(vars_->size()));
  }
  for (const auto& x : point) require_same_ring(ring_, x.ring(), "evaluation");
  if (terms_.empty()) return ring_.zero();
  std::vector<TermRef> refs;
  refs.reserve(terms_.size());
  for (const auto& [e, c] : terms_) refs.emplace_back(&e, &c);
  std::sort(refs.begin(), refs.end(),
            [](const TermRef& a, const TermRef& b) { return *a.first > *b.first; });
  return horner(refs, 0, refs.size(), 0, point, ring_);
}

MultiPoly MultiPoly::reduce_mod(std::uint64_t p) const {
  MultiPoly out(vars_, CoeffRing::modular(p));
  for (const auto& [e, c] : terms_) out.add_term(e, c.reduce_mod(p));
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b, "comparison");
  return a.terms_ == b.terms_;
}

WeightedDegree weighted_degree(const MultiPoly& p) {
  if (p.is_zero()) throw PreconditionError("weighted degree of the zero polynomial is undefined");
  const auto weights = p.variables().weights();
  WeightedDegree out{true, 0};
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(weights[i]) * e[i];
    if (first) {
      out.degree = d;
      first = false;
    } else if (d != out.degree) {
      out.homogeneous = false;
      out.degree = std::max(out.degree, d);
    }
  }
  return out;
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw InexactDivision("division by the zero polynomial");
  f.require_compatible(g, "division");
  MultiPoly remainder = f;
  MultiPoly quotient(f.variable_table(), f.ring());
  const auto& [lead_exp, lead_coeff] = g.leading_term();
  Exponents shift(lead_exp.size());
  while (!remainder.is_zero()) {
    const auto& [re, rc] = remainder.leading_term();
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < lead_exp[i]) throw InexactDivision("polynomial division is not exact");
      shift[i] = re[i] - lead_exp[i];
    }
    const Scalar c = divexact(rc, lead_coeff);
    const MultiPoly step = MultiPoly::monomial(f.variable_table(), shift, c);
    quotient += step;
    remainder -= step * g;
  }
  return quotient;
}

MultiPoly int_like(const MultiPoly& proto, long k) {
  return MultiPoly::constant(proto.variable_table(), proto.ring().from_int(k));
}

MultiPoly lift_like(const MultiPoly& proto, const Scalar& c) {
  return MultiPoly::constant(proto.variable_table(), lift_like(proto.ring().one(), c));
}

}  // namespace k3
