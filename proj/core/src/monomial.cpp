#include "fdim/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace formal {

Monomial::Monomial(std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0})) {}

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
  if (index >= arity) throw std::out_of_range("variable index out of range");
  std::vector<Exponent> e(arity, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  assert(arity() == other.arity());
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0) out.push_back(i);
  }
  return out;
}

std::uint64_t Monomial::support_mask() const {
  if (arity() > 64) throw std::length_error("support mask needs at most 64 variables");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
  assert(arity() == other.arity());
  std::vector<Exponent> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  std::vector<Exponent> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], other.exponents_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<Exponent> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], other.exponents_[i]);
  return Monomial(std::move(e));
}

namespace {

// Graded reverse lexicographic comparison on the index range [begin, end).
std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  assert(a.arity() == b.arity());
  const std::size_t n = a.arity();
  switch (kind) {
    case OrderKind::lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::grevlex:
      return grevlex_range(a, b, 0, n);
    case OrderKind::block_elimination: {
      const std::size_t split = std::min(block_split, n);
      if (auto c = grevlex_range(a, b, 0, split); c != 0) return c;
      return grevlex_range(a, b, split, n);
    }
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace formal
