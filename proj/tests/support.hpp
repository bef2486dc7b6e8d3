#pragma once

// Brute-force oracles for the tests. They use the library's data types only.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fdim/decompose.hpp"
#include "fdim/groebner.hpp"
#include "fdim/parse.hpp"

namespace testing_support {

using namespace formal;

inline RingPtr ring_of(std::size_t n, FieldSpec field = FieldSpec::rationals(),
                       MonomialOrder order = MonomialOrder::grevlex()) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v", "s", "t"};
  std::vector<std::string> vars(names, names + n);
  return PolyRing::make(vars, field, order);
}

inline Polynomial P(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

inline Ideal I(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (const char* g : gens) out.push_back(P(ring, g));
  return Ideal(ring, out);
}

/// Sets of variables (as bitmasks) meeting the support of every monomial.
inline bool is_cover(std::uint32_t mask, const std::vector<std::uint32_t>& supports) {
  for (auto s : supports) {
    if ((s & mask) == 0) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> supports_of(const std::vector<Monomial>& monomials) {
  std::vector<std::uint32_t> out;
  for (const auto& m : monomials) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] > 0) s |= 1u << i;
    }
    out.push_back(s);
  }
  return out;
}

inline int min_cover_size(const std::vector<Monomial>& monomials, std::size_t n) {
  const auto supports = supports_of(monomials);
  int best = static_cast<int>(n) + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (is_cover(mask, supports)) best = std::min(best, std::popcount(mask));
  }
  return best;
}

/// Minimal covers by inclusion, sorted ascending as integers.
inline std::vector<std::uint32_t> minimal_covers(const std::vector<Monomial>& monomials, std::size_t n) {
  const auto supports = supports_of(monomials);
  std::vector<std::uint32_t> covers;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (is_cover(mask, supports)) covers.push_back(mask);
  }
  std::vector<std::uint32_t> minimal;
  for (auto c : covers) {
    bool keep = true;
    for (auto d : covers) {
      if (d != c && (d & c) == d) keep = false;
    }
    if (keep) minimal.push_back(c);
  }
  return minimal;
}

/// Bitmask of the variables generating a prime, or ~0u if it is not
/// generated by variables.
inline std::uint32_t variable_mask(const Ideal& prime) {
  std::uint32_t mask = 0;
  for (const auto& g : prime.groebner().elements) {
    const auto v = g.as_variable();
    if (!v) return ~0u;
    mask |= 1u << *v;
  }
  return mask;
}

/// All monomials of total degree in [1, max_degree] in n variables.
inline std::vector<Monomial> monomials_up_to(std::size_t n, unsigned max_degree) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> e(n, 0);
  const auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == n) {
      Monomial m(e);
      if (m.total_degree() >= 1) out.push_back(m);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

/// Every nonempty set of at most k distinct monomials from the list.
template <typename F>
void for_each_subset(const std::vector<Monomial>& pool, std::size_t k, F&& f) {
  std::vector<std::size_t> idx;
  const auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!idx.empty()) {
      std::vector<Monomial> chosen;
      for (auto i : idx) chosen.push_back(pool[i]);
      f(chosen);
    }
    if (idx.size() == k) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
}

inline Ideal monomial_ideal(const RingPtr& ring, const std::vector<Monomial>& monomials) {
  std::vector<Polynomial> gens;
  for (const auto& m : monomials) gens.push_back(Polynomial::term(ring, m, ring->field().one()));
  return Ideal(ring, gens);
}

/// Random polynomial with 1..4 terms, total degree <= max_degree and
/// coefficients in [-3, 3] \ {0}.
inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, unsigned max_degree) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Term> terms;
  const int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<Monomial::Exponent> e(ring->arity(), 0);
    unsigned budget = deg(rng);
    while (budget > 0) {
      std::uniform_int_distribution<std::size_t> var(0, ring->arity() - 1);
      ++e[var(rng)];
      --budget;
    }
    int c = 0;
    while (c == 0) c = coeff(rng);
    terms.push_back({Monomial(e), ring->field().from_integer(c)});
  }
  return Polynomial::from_terms(ring, terms);
}

struct RandomIdeal {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

/// Seeded family: 1..4 variables, 1..4 generators of degree <= 3, over Q or F7.
inline std::vector<RandomIdeal> random_ideals(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RandomIdeal> out;
  std::uniform_int_distribution<std::size_t> nvars(1, 4);
  std::uniform_int_distribution<int> ngens(1, 4);
  for (std::size_t k = 0; k < count; ++k) {
    const FieldSpec field = k % 2 == 0 ? FieldSpec::rationals() : FieldSpec::prime(7);
    RandomIdeal r{ring_of(nvars(rng), field), {}};
    const int g = ngens(rng);
    for (int i = 0; i < g; ++i) {
      auto p = random_polynomial(rng, r.ring, 3);
      if (!p.is_zero()) r.generators.push_back(p);
    }
    if (r.generators.empty()) r.generators.push_back(Polynomial::variable(r.ring, 0));
    out.push_back(std::move(r));
  }
  return out;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace testing_support
