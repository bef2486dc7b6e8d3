#include "fdim/parse.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "fdim/error.hpp"

namespace formal {
namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial p = parse_sum();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial parse_sum() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = parse_product();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      const bool minus = peek() == '-';
      ++pos_;
      Polynomial rhs = parse_product();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Polynomial parse_product() {
    Polynomial acc = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * parse_factor();
    }
    return acc;
  }

  mpz_class parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned parse_exponent() {
    skip_ws();
    const std::size_t start = pos_;
    mpz_class e = parse_integer();
    if (e > std::numeric_limits<Monomial::Exponent>::max()) throw ParseError("exponent too large", start);
    return static_cast<unsigned>(e.get_ui());
  }

  Polynomial parse_factor() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = parse_integer();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = parse_integer();
      }
      try {
        return Polynomial::constant(ring_, ring_->field().from_fraction(num, den));
      } catch (const std::domain_error& e) {
        throw ParseError(std::string("literal undefined in ") + ring_->field().name() + ": " + e.what(), start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto index = ring_->index_of(name);
      if (!index) throw ParseError("unknown variable " + std::string(name), start);
      unsigned power = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        power = parse_exponent();
      }
      return Polynomial::term(ring_, Monomial::variable(ring_->arity(), *index, power), ring_->field().one());
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_sum();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        inner = inner.pow(parse_exponent());
      }
      return inner;
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return PolynomialParser(text, ring).parse(); }

}  // namespace formal
