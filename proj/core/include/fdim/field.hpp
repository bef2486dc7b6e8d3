#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace formal {

/// A coefficient. Over the rationals it is an exact mpq; over F_p it is a
/// residue in [0, p).
class Scalar {
 public:
  Scalar() : value_(std::uint64_t{0}) {}
  explicit Scalar(std::uint64_t residue) : value_(residue) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  bool is_residue() const { return std::holds_alternative<std::uint64_t>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  std::variant<std::uint64_t, mpq_class> value_;
};

enum class FieldKind { rationals, prime_field };

/// The coefficient field. All scalar arithmetic goes through here so that
/// residues are reduced by the right modulus.
class FieldSpec {
 public:
  static FieldSpec rationals();
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return characteristic_; }
  bool is_rationals() const { return kind_ == FieldKind::rationals; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(long long n) const;
  Scalar from_integer(const mpz_class& n) const;
  /// Throws std::domain_error when the denominator vanishes in the field.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  /// Sign used when rendering: residues are never negative.
  bool is_negative(const Scalar& a) const;

  /// "Q" or "F<p>"
  std::string name() const;
  std::string to_string(const Scalar& a) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), characteristic_(p) {}

  FieldKind kind_;
  std::uint64_t characteristic_;
};

bool is_prime_u64(std::uint64_t n);

}  // namespace formal
