#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdim/polynomial.hpp"

namespace formal {

/// Reduced Groebner basis: monic, no term of an element divisible by the
/// leading monomial of another, sorted by descending leading monomial.
/// Unique for a given ideal and order.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;

  const MonomialOrder& order() const { return ring->order(); }
  bool is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }
  std::vector<Monomial> leading_monomials() const;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full reduction of f. Among the divisors whose leading monomial divides the
/// current term, the first in sequence order is used.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Buchberger with the coprime and chain criteria (Gebauer-Moeller update).
/// Generators must share a ring; the basis is computed in that ring's order.
GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> generators, const RingPtr& ring);

/// True iff every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);
/// True iff the basis is monic and no term of an element is divisible by the
/// leading monomial of another element.
bool is_reduced(const GroebnerBasis& basis);

class Ideal {
 public:
  explicit Ideal(RingPtr ring) : Ideal(std::move(ring), {}) {}
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Reduced basis in the ring's order; computed once and shared by copies.
  const GroebnerBasis& groebner() const;
  GroebnerBasis groebner(const MonomialOrder& order) const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  /// Equality of ideals by two-way membership.
  bool same_ideal(const Ideal& other) const;
  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const { return groebner().elements.empty(); }
  bool is_monomial() const;

  Ideal operator+(const Ideal& other) const;
  Ideal with(const Polynomial& f) const;

  /// "(g1, g2, ...)" of the given generators.
  std::string to_string() const;
  /// Same rendering of the reduced basis; equal ideals render equally.
  std::string canonical_string() const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Intersection of the ideal with the subring on the variables not in
/// drop_vars, computed with a block elimination order. Generators of the
/// result live in the ideal's own ring.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop_vars);

inline constexpr std::size_t kMaxDimensionVariables = 12;

/// Largest S such that no monomial has its support inside S. nullopt when
/// some monomial is 1.
std::optional<int> max_independent_set(std::span<const Monomial> monomials, std::size_t arity);

/// Krull dimension of ring/ideal; nullopt when the ideal is the unit ideal.
/// Throws std::length_error beyond kMaxDimensionVariables variables.
std::optional<int> krull_dimension(const Ideal& ideal);

inline bool ideal_membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

}  // namespace formal
