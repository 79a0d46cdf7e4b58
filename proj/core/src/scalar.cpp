#include "k3/scalar.hpp"

#include <ostream>

#include "k3/errors.hpp"
#include "k3/modarith.hpp"

namespace k3 {

namespace ma = modarith;

std::string_view to_string(Domain d) noexcept {
  switch (d) {
    case Domain::integer:
      return "integer";
    case Domain::rational:
      return "rational";
    case Domain::modular:
      return "modular";
  }
  return "unknown";
}

CoeffRing CoeffRing::modular(std::uint64_t p) {
  if (p < 3 || p >= ma::kMaxModulus || !ma::is_prime(p)) {
    throw PreconditionError("modulus " + std::to_string(p) + " is not an odd prime below 2^62");
  }
  return {Domain::modular, p};
}

Scalar CoeffRing::zero() const { return from_int(0); }
Scalar CoeffRing::one() const { return from_int(1); }

Scalar CoeffRing::from_int(long v) const {
  switch (domain) {
    case Domain::integer:
      return Scalar(v);
    case Domain::rational:
      return Scalar(mpq_class(v));
    case Domain::modular:
      return Scalar::modular(ma::from_signed(v, modulus), modulus);
  }
  return Scalar(v);
}

Scalar CoeffRing::from_integer(const mpz_class& v) const {
  switch (domain) {
    case Domain::integer:
      return Scalar(v);
    case Domain::rational:
      return Scalar(mpq_class(v));
    case Domain::modular:
      return Scalar::modular(ma::reduce(v, modulus), modulus);
  }
  return Scalar(v);
}

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpq_class parse_rational_text(std::string_view raw) {
  const std::string_view text = trim(raw);
  const auto bad = [&] { return PreconditionError("invalid number '" + std::string(raw) + "'"); };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num, den;
    if (!parse_integer(trim(text.substr(0, slash)), num) ||
        !parse_integer(trim(text.substr(slash + 1)), den)) {
      throw bad();
    }
    if (den == 0) throw PreconditionError("zero denominator in '" + std::string(raw) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.front() == '-' || frac.front() == '+') throw bad();
    mpz_class w, f;
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::string_view whole_digits =
        (whole.empty() || whole == "-" || whole == "+") ? std::string_view("0") : whole;
    if (!parse_integer(whole_digits, w) || !parse_integer(frac, f)) throw bad();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = abs(w) * scale + f;
    if (negative) num = -num;
    mpq_class q(num, scale);
    q.canonicalize();
    return q;
  }
  mpz_class z;
  if (!parse_integer(text, z)) throw bad();
  return mpq_class(z);
}

}  // namespace

Scalar CoeffRing::parse(std::string_view text) const {
  const mpq_class q = parse_rational_text(text);
  switch (domain) {
    case Domain::integer:
      if (q.get_den() != 1) {
        throw DomainError("'" + std::string(text) + "' is not an integer");
      }
      return Scalar(mpz_class(q.get_num()));
    case Domain::rational:
      return Scalar(q);
    case Domain::modular: {
      const Scalar num = from_integer(q.get_num());
      const Scalar den = from_integer(q.get_den());
      return divexact(num, den);
    }
  }
  return Scalar();
}

std::string CoeffRing::describe() const {
  if (domain == Domain::modular) return "modular(" + std::to_string(modulus) + ")";
  return std::string(to_string(domain));
}

void require_same_ring(const CoeffRing& a, const CoeffRing& b, std::string_view op) {
  if (a != b) {
    throw DomainError("coefficient domain mismatch in " + std::string(op) + ": " + a.describe() +
                      " vs " + b.describe());
  }
}

Scalar::Scalar(mpq_class v) : rep_(std::move(v)) { std::get<mpq_class>(rep_).canonicalize(); }

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::modular(std::uint64_t v, std::uint64_t p) {
  Scalar s;
  s.rep_ = Residue{v % p, p};
  return s;
}

CoeffRing Scalar::ring() const noexcept { return {domain(), modulus()}; }

std::uint64_t Scalar::modulus() const noexcept {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->modulus;
  return 0;
}

bool Scalar::is_zero() const noexcept {
  switch (domain()) {
    case Domain::integer:
      return sgn(std::get<mpz_class>(rep_)) == 0;
    case Domain::rational:
      return sgn(std::get<mpq_class>(rep_)) == 0;
    case Domain::modular:
      return std::get<Residue>(rep_).value == 0;
  }
  return false;
}

bool Scalar::is_one() const noexcept {
  switch (domain()) {
    case Domain::integer:
      return std::get<mpz_class>(rep_) == 1;
    case Domain::rational:
      return std::get<mpq_class>(rep_) == 1;
    case Domain::modular:
      return std::get<Residue>(rep_).value == 1;
  }
  return false;
}

int Scalar::sign() const {
  switch (domain()) {
    case Domain::integer:
      return sgn(std::get<mpz_class>(rep_));
    case Domain::rational:
      return sgn(std::get<mpq_class>(rep_));
    case Domain::modular:
      break;
  }
  throw DomainError("residues have no sign");
}

const mpz_class& Scalar::integer() const {
  if (const auto* z = std::get_if<mpz_class>(&rep_)) return *z;
  throw DomainError("scalar is " + ring().describe() + ", not integer");
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
  throw DomainError("scalar is " + ring().describe() + ", not rational");
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value;
  throw DomainError("scalar is " + ring().describe() + ", not modular");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InexactDivision("inverse of zero");
  switch (domain()) {
    case Domain::integer: {
      const auto& z = std::get<mpz_class>(rep_);
      if (z == 1 || z == -1) return *this;
      throw InexactDivision("integer " + z.get_str() + " is not a unit");
    }
    case Domain::rational:
      return Scalar(mpq_class(1) / std::get<mpq_class>(rep_));
    case Domain::modular: {
      const auto& r = std::get<Residue>(rep_);
      return modular(ma::inverse(r.value, r.modulus), r.modulus);
    }
  }
  return *this;
}

Scalar Scalar::pow(unsigned long e) const {
  switch (domain()) {
    case Domain::integer: {
      mpz_class out;
      mpz_pow_ui(out.get_mpz_t(), std::get<mpz_class>(rep_).get_mpz_t(), e);
      return Scalar(std::move(out));
    }
    case Domain::rational: {
      const auto& q = std::get<mpq_class>(rep_);
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
      mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
      return Scalar(mpq_class(num, den));
    }
    case Domain::modular: {
      const auto& r = std::get<Residue>(rep_);
      return modular(ma::pow(r.value, e, r.modulus), r.modulus);
    }
  }
  return *this;
}

Scalar Scalar::to_rational() const {
  switch (domain()) {
    case Domain::integer:
      return Scalar(mpq_class(std::get<mpz_class>(rep_)));
    case Domain::rational:
      return *this;
    case Domain::modular:
      break;
  }
  throw DomainError("cannot lift a residue to the rationals");
}

Scalar Scalar::reduce_mod(std::uint64_t p) const {
  switch (domain()) {
    case Domain::integer:
      return modular(ma::reduce(std::get<mpz_class>(rep_), p), p);
    case Domain::rational: {
      const auto& q = std::get<mpq_class>(rep_);
      const std::uint64_t den = ma::reduce(q.get_den(), p);
      if (den == 0) throw InexactDivision("denominator vanishes modulo " + std::to_string(p));
      return modular(ma::mul(ma::reduce(q.get_num(), p), ma::inverse(den, p), p), p);
    }
    case Domain::modular:
      if (modulus() == p) return *this;
      break;
  }
  throw DomainError("cannot reduce " + ring().describe() + " modulo " + std::to_string(p));
}

std::string Scalar::str() const {
  switch (domain()) {
    case Domain::integer:
      return std::get<mpz_class>(rep_).get_str();
    case Domain::rational:
      return std::get<mpq_class>(rep_).get_str();
    case Domain::modular:
      return std::to_string(std::get<Residue>(rep_).value);
  }
  return {};
}

Scalar& Scalar::operator+=(const Scalar& b) {
  require_same_ring(ring(), b.ring(), "addition");
  switch (domain()) {
    case Domain::integer:
      std::get<mpz_class>(rep_) += std::get<mpz_class>(b.rep_);
      break;
    case Domain::rational:
      std::get<mpq_class>(rep_) += std::get<mpq_class>(b.rep_);
      break;
    case Domain::modular: {
      auto& r = std::get<Residue>(rep_);
      r.value = ma::add(r.value, std::get<Residue>(b.rep_).value, r.modulus);
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  require_same_ring(ring(), b.ring(), "subtraction");
  switch (domain()) {
    case Domain::integer:
      std::get<mpz_class>(rep_) -= std::get<mpz_class>(b.rep_);
      break;
    case Domain::rational:
      std::get<mpq_class>(rep_) -= std::get<mpq_class>(b.rep_);
      break;
    case Domain::modular: {
      auto& r = std::get<Residue>(rep_);
      r.value = ma::sub(r.value, std::get<Residue>(b.rep_).value, r.modulus);
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  require_same_ring(ring(), b.ring(), "multiplication");
  switch (domain()) {
    case Domain::integer:
      std::get<mpz_class>(rep_) *= std::get<mpz_class>(b.rep_);
      break;
    case Domain::rational:
      std::get<mpq_class>(rep_) *= std::get<mpq_class>(b.rep_);
      break;
    case Domain::modular: {
      auto& r = std::get<Residue>(rep_);
      r.value = ma::mul(r.value, std::get<Residue>(b.rep_).value, r.modulus);
      break;
    }
  }
  return *this;
}

Scalar operator-(const Scalar& a) {
  switch (a.domain()) {
    case Domain::integer:
      return Scalar(mpz_class(-std::get<mpz_class>(a.rep_)));
    case Domain::rational:
      return Scalar(mpq_class(-std::get<mpq_class>(a.rep_)));
    case Domain::modular: {
      const auto& r = std::get<Scalar::Residue>(a.rep_);
      return Scalar::modular(ma::neg(r.value, r.modulus), r.modulus);
    }
  }
  return a;
}

Scalar divexact(const Scalar& a, const Scalar& b) {
  require_same_ring(a.ring(), b.ring(), "division");
  if (b.is_zero()) throw InexactDivision("division by zero");
  switch (a.domain()) {
    case Domain::integer: {
      const auto& n = std::get<mpz_class>(a.rep_);
      const auto& d = std::get<mpz_class>(b.rep_);
      if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) == 0) {
        throw InexactDivision("integer division " + n.get_str() + " / " + d.get_str() +
                              " is not exact");
      }
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      return Scalar(std::move(q));
    }
    case Domain::rational:
      return Scalar(mpq_class(std::get<mpq_class>(a.rep_) / std::get<mpq_class>(b.rep_)));
    case Domain::modular:
      return a * b.inverse();
  }
  return a;
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_ring(a.ring(), b.ring(), "comparison");
  switch (a.domain()) {
    case Domain::integer:
      return std::get<mpz_class>(a.rep_) == std::get<mpz_class>(b.rep_);
    case Domain::rational:
      return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
    case Domain::modular:
      return std::get<Scalar::Residue>(a.rep_).value == std::get<Scalar::Residue>(b.rep_).value;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar lift_like(const Scalar& proto, const Scalar& c) {
  if (c.domain() == Domain::integer) return proto.ring().from_integer(c.integer());
  require_same_ring(proto.ring(), c.ring(), "lift");
  return c;
}

}  // namespace k3
