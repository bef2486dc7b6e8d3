#include "fdim/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fdim/error.hpp"

namespace formal {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Merge-sorts terms, combines equal monomials and drops zeros.
std::vector<Term> normalize(const PolyRing& ring, std::vector<Term> terms) {
  const auto& order = ring.order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient = ring.field().add(out.back().coefficient, t.coefficient);
    } else {
      if (!out.empty() && ring.field().is_zero(out.back().coefficient)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && ring.field().is_zero(out.back().coefficient)) out.pop_back();
  return out;
}

}  // namespace

RingPtr PolyRing::make(std::vector<std::string> variables, FieldSpec field, MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!is_identifier(v)) throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
  if (order.kind == OrderKind::block_elimination && order.block_split > variables.size()) {
    throw std::invalid_argument("elimination block exceeds variable count");
  }
  return RingPtr(new PolyRing(std::move(variables), field, order));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return make(variables_, field_, order); }

bool PolyRing::compatible(const PolyRing& other) const {
  return this == &other || (variables_ == other.variables_ && field_ == other.field_ && order_ == other.order_);
}

std::string PolyRing::to_string() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) s += ",";
    s += variables_[i];
  }
  return s + "]";
}

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (!a.compatible(b)) throw RingMismatch();
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.monomial.arity() != ring->arity()) throw std::invalid_argument("monomial arity does not match ring");
  }
  auto sorted = normalize(*ring, std::move(terms));
  return Polynomial(std::move(ring), std::move(sorted));
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  const auto n = ring->arity();
  return term(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  const Scalar s = ring->field().from_integer(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const auto n = ring->arity();
  const Scalar one = ring->field().one();
  return term(std::move(ring), Monomial::variable(n, index), one);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Scalar c) {
  std::vector<Term> terms;
  if (!ring->field().is_zero(c)) terms.push_back({std::move(m), std::move(c)});
  return Polynomial(std::move(ring), std::move(terms));
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

std::optional<std::size_t> Polynomial::as_variable() const {
  if (terms_.size() != 1 || terms_[0].monomial.total_degree() != 1) return std::nullopt;
  return terms_[0].monomial.support().front();
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.total_degree() == terms_.front().monomial.total_degree(); });
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

Monomial::Exponent Polynomial::degree_in(std::size_t var) const {
  Monomial::Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial(ring_->arity());
  Monomial g = terms_.front().monomial;
  for (const auto& t : terms_) g = g.gcd(t.monomial);
  return g;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient = field().neg(t.coefficient);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient = field().mul(t.coefficient, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of terms.
  for (const auto& t : terms_) out.push_back({t.monomial * m, field().mul(t.coefficient, c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::divided_by(const Monomial& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.monomial)) throw std::invalid_argument("monomial does not divide polynomial");
    out.push_back({t.monomial / m, t.coefficient});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field().inv(leading_coefficient()));
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty() || !field().is_rationals()) return monic();
  mpz_class den = 1;
  for (const auto& t : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.rational().get_den_mpz_t());
  mpz_class content = 0;
  for (const auto& t : terms_) {
    mpz_class num = t.coefficient.rational().get_num() * (den / t.coefficient.rational().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  mpq_class factor(den, content);
  factor.canonicalize();
  if (sgn(terms_.front().coefficient.rational()) < 0) factor = -factor;
  return scaled(Scalar(factor));
}

Polynomial Polynomial::map_variables(RingPtr target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != ring_->arity()) throw std::invalid_argument("variable map has wrong length");
  if (!(target->field() == ring_->field())) throw RingMismatch();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::Exponent> e(target->arity(), 0);
    for (std::size_t i = 0; i < index_map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (index_map[i] >= target->arity()) throw std::invalid_argument("variable has no image in target ring");
      e[index_map[i]] += t.monomial[i];
    }
    out.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return from_terms(std::move(target), std::move(out));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->arity()) throw std::invalid_argument("substitution needs one image per variable");
  if (images.empty()) throw std::invalid_argument("substitution into a ring without variables");
  const RingPtr& target = images.front().ring();
  for (const auto& img : images) require_same_ring(*img.ring(), *target);
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial product = constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.monomial[i]) product = product * images[i].pow(t.monomial[i]);
    }
    result = result + product;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& f = field();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = f.is_negative(t.coefficient);
    const Scalar magnitude = negative ? f.neg(t.coefficient) : t.coefficient;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = f.is_one(magnitude);
    if (t.monomial.is_one()) {
      out << f.to_string(magnitude);
      continue;
    }
    if (!unit) out << f.to_string(magnitude) << '*';
    bool first_factor = true;
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!first_factor) out << '*';
      first_factor = false;
      out << ring_->variables()[i];
      if (t.monomial[i] > 1) out << '^' << t.monomial[i];
    }
  }
  return out.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  const auto& order = a.ring_->order();
  const auto& field = a.field();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const auto c = order.compare(a.terms_[i].monomial, b.terms_[j].monomial);
    if (c > 0) {
      out.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.push_back(b.terms_[j++]);
    } else {
      Scalar s = field.add(a.terms_[i].coefficient, b.terms_[j].coefficient);
      if (!field.is_zero(s)) out.push_back({a.terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.terms_.begin() + static_cast<std::ptrdiff_t>(i), a.terms_.end());
  out.insert(out.end(), b.terms_.begin() + static_cast<std::ptrdiff_t>(j), b.terms_.end());
  return Polynomial(a.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  const auto& field = a.field();
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, field.mul(s.coefficient, t.coefficient)});
  }
  return Polynomial::from_terms(a.ring_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->compatible(*b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

Polynomial linear_combination(const Scalar& a, const Polynomial& p, const Scalar& b, const Monomial& m,
                              const Polynomial& q) {
  // a*p + b*m*q, merging two sorted term lists.
  require_same_ring(*p.ring(), *q.ring());
  const auto& field = p.field();
  const auto& order = p.ring()->order();
  const bool scale_p = !field.is_one(a);
  std::vector<Term> out;
  out.reserve(p.terms().size() + q.terms().size());
  auto lhs = p.terms().begin();
  auto rhs = q.terms().begin();
  while (lhs != p.terms().end() || rhs != q.terms().end()) {
    if (rhs == q.terms().end()) {
      out.push_back({lhs->monomial, scale_p ? field.mul(a, lhs->coefficient) : lhs->coefficient});
      ++lhs;
      continue;
    }
    Monomial shifted = rhs->monomial * m;
    if (lhs == p.terms().end()) {
      out.push_back({std::move(shifted), field.mul(b, rhs->coefficient)});
      ++rhs;
      continue;
    }
    const auto c = order.compare(lhs->monomial, shifted);
    if (c > 0) {
      out.push_back({lhs->monomial, scale_p ? field.mul(a, lhs->coefficient) : lhs->coefficient});
      ++lhs;
    } else if (c < 0) {
      out.push_back({std::move(shifted), field.mul(b, rhs->coefficient)});
      ++rhs;
    } else {
      Scalar s = field.add(scale_p ? field.mul(a, lhs->coefficient) : lhs->coefficient, field.mul(b, rhs->coefficient));
      if (!field.is_zero(s)) out.push_back({std::move(shifted), std::move(s)});
      ++lhs;
      ++rhs;
    }
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

}  // namespace formal
