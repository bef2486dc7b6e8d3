#include "fdim/field.hpp"

#include <array>
#include <stdexcept>

namespace formal {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::rationals, 0); }

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(FieldKind::prime_field, p);
}

Scalar FieldSpec::zero() const { return from_integer(0); }
Scalar FieldSpec::one() const { return from_integer(1); }

Scalar FieldSpec::from_integer(long long n) const {
  if (is_rationals()) return Scalar(mpq_class(static_cast<long>(n)));
  const auto p = static_cast<long long>(characteristic_);
  long long r = n % p;
  if (r < 0) r += p;
  return Scalar(static_cast<std::uint64_t>(r));
}

Scalar FieldSpec::from_integer(const mpz_class& n) const {
  if (is_rationals()) return Scalar(mpq_class(n));
  return Scalar(reduce_mod(n, characteristic_));
}

Scalar FieldSpec::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (is_rationals()) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  const Scalar d = from_integer(den);
  if (is_zero(d)) {
    throw std::domain_error("denominator " + den.get_str() + " is zero in " + name());
  }
  return div(from_integer(num), d);
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return Scalar(mpq_class(a.rational() + b.rational()));
  std::uint64_t s = a.residue() + b.residue();
  if (s >= characteristic_ || s < a.residue()) s -= characteristic_;
  return Scalar(s);
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return Scalar(mpq_class(a.rational() * b.rational()));
  return Scalar(mulmod(a.residue(), b.residue(), characteristic_));
}

Scalar FieldSpec::neg(const Scalar& a) const {
  if (is_rationals()) return Scalar(mpq_class(-a.rational()));
  return Scalar(a.residue() == 0 ? 0 : characteristic_ - a.residue());
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (is_rationals()) return Scalar(mpq_class(1 / a.rational()));
  return Scalar(powmod(a.residue(), characteristic_ - 2, characteristic_));
}

bool FieldSpec::is_zero(const Scalar& a) const {
  return is_rationals() ? sgn(a.rational()) == 0 : a.residue() == 0;
}

bool FieldSpec::is_one(const Scalar& a) const {
  return is_rationals() ? a.rational() == 1 : a.residue() == 1;
}

bool FieldSpec::is_negative(const Scalar& a) const {
  return is_rationals() && sgn(a.rational()) < 0;
}

std::string FieldSpec::name() const {
  return is_rationals() ? "Q" : "F" + std::to_string(characteristic_);
}

std::string FieldSpec::to_string(const Scalar& a) const {
  return is_rationals() ? a.rational().get_str() : std::to_string(a.residue());
}

}  // namespace formal
