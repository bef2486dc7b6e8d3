#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace formal {

class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t arity) : exponents_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

  std::size_t arity() const { return exponents_.size(); }
  std::uint64_t total_degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const { return exponents_; }

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Variables with positive exponent.
  std::vector<std::size_t> support() const;
  /// Bit i set iff variable i occurs. Requires arity <= 64.
  std::uint64_t support_mask() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }

 private:
  std::vector<Exponent> exponents_;
  std::uint64_t degree_ = 0;
};

enum class OrderKind { lex, grevlex, block_elimination };

/// Monomial order. block_elimination compares the variables [0, block_split)
/// by grevlex first and only on a tie the remaining variables by grevlex.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t block_split = 0;

  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder block(std::size_t split) { return {OrderKind::block_elimination, split}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace formal
