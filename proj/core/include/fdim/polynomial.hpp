#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdim/field.hpp"
#include "fdim/monomial.hpp"

namespace formal {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Polynomial ring k[v1..vn] with a fixed monomial order. Shared by pointer;
/// two rings are compatible when their variables, field and order agree.
class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> variables, FieldSpec field,
                      MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t arity() const { return variables_.size(); }
  const FieldSpec& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  RingPtr with_order(MonomialOrder order) const;

  bool compatible(const PolyRing& other) const;
  std::string to_string() const;

 private:
  PolyRing(std::vector<std::string> variables, FieldSpec field, MonomialOrder order)
      : variables_(std::move(variables)), field_(field), order_(order) {}

  std::vector<std::string> variables_;
  FieldSpec field_;
  MonomialOrder order_;
};

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse polynomial; terms are sorted strictly descending in the ring order
/// and carry no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, Scalar c);

  const RingPtr& ring() const { return ring_; }
  const FieldSpec& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// The single variable v when this polynomial equals c*v.
  std::optional<std::size_t> as_variable() const;
  bool is_homogeneous() const;
  std::uint64_t total_degree() const;
  Monomial::Exponent degree_in(std::size_t var) const;

  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coefficient() const { return terms_.front().coefficient; }
  /// Largest monomial dividing every term; 1 for the zero polynomial.
  Monomial monomial_content() const;

  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  /// Exact division of every term by m; requires m to divide all terms.
  Polynomial divided_by(const Monomial& m) const;
  Polynomial pow(unsigned n) const;

  /// Leading coefficient 1.
  Polynomial monic() const;
  /// Over Q: integer coefficients with content 1 and positive leading
  /// coefficient. Over F_p: monic.
  Polynomial primitive() const;

  /// Re-embeds into target, sending variable i to variable index_map[i].
  Polynomial map_variables(RingPtr target, std::span<const std::size_t> index_map) const;
  /// Ring homomorphism sending variable i to images[i].
  Polynomial substitute(std::span<const Polynomial> images) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms) : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws RingMismatch unless a and b are compatible.
void require_same_ring(const PolyRing& a, const PolyRing& b);

/// a*p + b*m*q in one pass; used by reductions.
Polynomial linear_combination(const Scalar& a, const Polynomial& p, const Scalar& b, const Monomial& m,
                              const Polynomial& q);

}  // namespace formal
