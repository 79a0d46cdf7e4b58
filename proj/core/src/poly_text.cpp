#include "k3/poly_text.hpp"

#include <cctype>

#include "k3/errors.hpp"

namespace k3 {

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& vars = p.variables();
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += " * ";
      out += vars.name(i);
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, VariableTablePtr vars, CoeffRing ring)
      : text_(text), vars_(std::move(vars)), ring_(ring) {}

  MultiPoly run() {
    MultiPoly out(vars_, ring_);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    while (true) {
      MultiPoly term = parse_term();
      out += negate ? -term : term;
      skip_space();
      if (at_end()) break;
      if (peek() == '+') {
        negate = false;
      } else if (peek() == '-') {
        negate = true;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos_;
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError("polynomial text, offset " + std::to_string(pos_) + ": " + what);
  }

  MultiPoly parse_term() {
    Scalar coeff = ring_.one();
    Exponents exps(vars_->size(), 0);
    while (true) {
      skip_space();
      if (at_end()) fail("unexpected end of input");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::size_t idx = parse_variable();
        exps[idx] += parse_exponent();
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return MultiPoly::monomial(vars_, std::move(exps), coeff);
  }

  Scalar parse_number() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/' ||
                         peek() == '.')) {
      ++pos_;
    }
    try {
      return ring_.parse(text_.substr(start, pos_ - start));
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  std::size_t parse_variable() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (!at_end() && peek() == '{') {
      while (!at_end() && peek() != '}') ++pos_;
      if (at_end()) fail("unterminated '{'");
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto idx = vars_->index_of(name);
    if (!idx) fail("unknown variable '" + std::string(name) + "'");
    return *idx;
  }

  std::uint32_t parse_exponent() {
    skip_space();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  std::string_view text_;
  VariableTablePtr vars_;
  CoeffRing ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, VariableTablePtr vars, CoeffRing ring) {
  return Parser(text, std::move(vars), ring).run();
}

VariableTablePtr binary_variables() {
  static const VariableTablePtr vars = VariableTable::make({"x", "w"});
  return vars;
}

MultiPoly form_to_poly(const BinaryForm<Scalar>& f) {
  const int n = f.degree();
  MultiPoly out(binary_variables(), f[0].ring());
  for (int i = 0; i <= n; ++i) {
    out.add_term({static_cast<std::uint32_t>(n - i), static_cast<std::uint32_t>(i)}, f[i]);
  }
  return out;
}

std::string format_form(const BinaryForm<Scalar>& f) { return format_poly(form_to_poly(f)); }

}  // namespace k3
