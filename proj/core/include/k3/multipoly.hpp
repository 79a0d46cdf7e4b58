#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "k3/scalar.hpp"

namespace k3 {

using Exponents = std::vector<std::uint32_t>;

/// Ordered variable names together with their nonnegative G_m weights.
class VariableTable {
 public:
  VariableTable(std::vector<std::string> names, std::vector<int> weights);

  static std::shared_ptr<const VariableTable> make(std::vector<std::string> names,
                                                   std::vector<int> weights);
  /// All weights equal to one.
  static std::shared_ptr<const VariableTable> make(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  std::span<const int> weights() const noexcept { return weights_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableTable&, const VariableTable&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using VariableTablePtr = std::shared_ptr<const VariableTable>;

/// Graded-lex order, largest monomial first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

struct WeightedDegree {
  bool homogeneous = false;
  /// The common weighted degree if homogeneous, otherwise the maximum.
  long degree = 0;
};

/// Sparse multivariate polynomial with coefficients in one CoeffRing.
///
/// Terms are kept in graded-lex order with no zero coefficients, so two equal
/// polynomials always have identical term sequences.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Scalar, GrlexGreater>;

  MultiPoly(VariableTablePtr vars, CoeffRing ring);

  static MultiPoly constant(VariableTablePtr vars, const Scalar& c);
  static MultiPoly variable(VariableTablePtr vars, CoeffRing ring, std::size_t index);
  static MultiPoly variable(VariableTablePtr vars, CoeffRing ring, std::string_view name);
  static MultiPoly monomial(VariableTablePtr vars, Exponents exps, const Scalar& c);

  const VariableTable& variables() const noexcept { return *vars_; }
  const VariableTablePtr& variable_table() const noexcept { return vars_; }
  const CoeffRing& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }

  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Leading term under graded-lex; requires a nonzero polynomial.
  const TermMap::value_type& leading_term() const;
  Scalar coefficient(const Exponents& e) const;
  std::optional<Scalar> constant_value() const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Scalar& c);

  MultiPoly& operator+=(const MultiPoly& b);
  MultiPoly& operator-=(const MultiPoly& b);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  MultiPoly scaled(const Scalar& c) const;
  MultiPoly pow(unsigned e) const;

  MultiPoly derivative(std::size_t var) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  MultiPoly reduce_mod(std::uint64_t p) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Throws DomainError unless b shares this variable table and ring.
  void require_compatible(const MultiPoly& b, std::string_view op) const;

 private:

  VariableTablePtr vars_;
  CoeffRing ring_;
  TermMap terms_;
};

/// Weighted degree under the variable table's weights; throws PreconditionError on 0.
WeightedDegree weighted_degree(const MultiPoly& p);

/// q with f == q * g, or InexactDivision.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

inline bool is_zero(const MultiPoly& p) noexcept { return p.is_zero(); }
MultiPoly int_like(const MultiPoly& proto, long k);
MultiPoly lift_like(const MultiPoly& proto, const Scalar& c);
inline MultiPoly divexact(const MultiPoly& a, const MultiPoly& b) { return exact_divide(a, b); }

}  // namespace k3
