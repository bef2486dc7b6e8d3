#include "fdim/groebner.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "fdim/error.hpp"

namespace formal {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(g.leading_monomial());
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(*f.ring(), *g.ring());
  const auto& field = f.field();
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  // lc(g) * (l/lm f) * f - lc(f) * (l/lm g) * g
  Polynomial lhs = f.times_term(l / f.leading_monomial(), g.leading_coefficient());
  return linear_combination(field.one(), lhs, field.neg(f.leading_coefficient()), l / g.leading_monomial(), g);
}

namespace {

const Polynomial* first_divisor(const Monomial& m, std::span<const Polynomial* const> divisors) {
  for (const Polynomial* g : divisors) {
    if (g->leading_monomial().divides(m)) return g;
  }
  return nullptr;
}

Polynomial normal_form_impl(const Polynomial& f, std::span<const Polynomial* const> divisors) {
  const auto& field = f.field();
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lead = p.terms().front();
    if (const Polynomial* g = first_divisor(lead.monomial, divisors)) {
      const Scalar c = field.neg(field.div(lead.coefficient, g->leading_coefficient()));
      p = linear_combination(field.one(), p, c, lead.monomial / g->leading_monomial(), *g);
    } else {
      remainder.push_back(lead);
      std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
      p = Polynomial::from_terms(p.ring(), std::move(rest));
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

// Reduces only leading terms. Over Q the divisors are primitive integer
// polynomials and each step is fraction-free: p <- a*p - b*m*g.
Polynomial top_reduce(Polynomial p, std::span<const Polynomial* const> divisors) {
  const auto& field = p.field();
  while (!p.is_zero()) {
    const Term& lead = p.terms().front();
    const Polynomial* g = first_divisor(lead.monomial, divisors);
    if (!g) break;
    const Monomial shift = lead.monomial / g->leading_monomial();
    if (field.is_rationals()) {
      const mpq_class& a = g->leading_coefficient().rational();
      const mpq_class& b = lead.coefficient.rational();
      mpz_class common;
      mpz_gcd(common.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
      const Scalar sa(mpq_class(mpz_class(a.get_num() / common)));
      const Scalar sb(mpq_class(mpz_class(-b.get_num() / common)));
      p = linear_combination(sa, p, sb, shift, *g).primitive();
    } else {
      const Scalar c = field.neg(field.div(lead.coefficient, g->leading_coefficient()));
      p = linear_combination(field.one(), p, c, shift, *g);
    }
  }
  return p;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)) {}

  // Returns false once the unit ideal has been detected.
  bool add_generator(const Polynomial& f) {
    if (f.is_zero()) return true;
    Polynomial h = top_reduce(f.primitive(), active_divisors());
    if (h.is_zero()) return true;
    return insert(h.primitive());
  }

  bool run() {
    while (!pairs_.empty()) {
      const auto& order = ring_->order();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto c = order.compare(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::tie(pairs_[k].i, pairs_[k].j) < std::tie(pairs_[best].i, pairs_[best].j))) {
          best = k;
        }
      }
      const CriticalPair pair = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Polynomial h = top_reduce(s_polynomial(polys_[pair.i], polys_[pair.j]).primitive(), active_divisors());
      if (h.is_zero()) continue;
      if (!insert(h.primitive())) return false;
    }
    return true;
  }

  std::vector<Polynomial> active_polynomials() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(polys_[k]);
    }
    return out;
  }

 private:
  std::vector<const Polynomial*> active_divisors() const {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  // Gebauer-Moeller update for a new element h.
  bool insert(Polynomial h) {
    if (h.is_constant()) return false;
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(false);
    const Monomial& lh = polys_[hi].leading_monomial();

    std::vector<CriticalPair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k]) candidates.push_back({k, hi, lh.lcm(polys_[k].leading_monomial())});
    }
    // Chain criterion among the new pairs; coprime pairs are kept for now so
    // that they can still eliminate others.
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& cand = candidates[a];
      const bool coprime = lh.coprime(polys_[cand.i].leading_monomial());
      bool dominated = false;
      for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b) {
        dominated = candidates[b].lcm.divides(cand.lcm);
      }
      for (const auto& k : kept) {
        if (dominated) break;
        dominated = k.lcm.divides(cand.lcm);
      }
      if (coprime || !dominated) kept.push_back(cand);
    }
    std::vector<CriticalPair> fresh;
    for (auto& k : kept) {
      if (!lh.coprime(polys_[k.i].leading_monomial())) fresh.push_back(std::move(k));
    }
    // Drop old pairs made redundant by h.
    std::erase_if(pairs_, [&](const CriticalPair& p) {
      return lh.divides(p.lcm) && !(p.lcm == lh.lcm(polys_[p.i].leading_monomial())) &&
             !(p.lcm == lh.lcm(polys_[p.j].leading_monomial()));
    });
    for (auto& f : fresh) pairs_.push_back(std::move(f));
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && lh.divides(polys_[k].leading_monomial())) active_[k] = false;
    }
    active_[hi] = true;
    return true;
  }

  RingPtr ring_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
};

GroebnerBasis unit_basis(const RingPtr& ring) { return {ring, {Polynomial::constant(ring, 1)}}; }

void sort_descending(std::vector<Polynomial>& elements, const MonomialOrder& order) {
  std::sort(elements.begin(), elements.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& g : divisors) {
    require_same_ring(*f.ring(), *g.ring());
    if (!g.is_zero()) ptrs.push_back(&g);
  }
  return normal_form_impl(f, ptrs);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  require_same_ring(*f.ring(), *basis.ring);
  return normal_form(f, std::span<const Polynomial>(basis.elements));
}

GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> generators, const RingPtr& ring) {
  Buchberger engine(ring);
  for (const auto& f : generators) {
    require_same_ring(*f.ring(), *ring);
    if (!engine.add_generator(f)) return unit_basis(ring);
  }
  if (!engine.run()) return unit_basis(ring);

  // The active set is already minimal: no leading monomial divides another.
  std::vector<Polynomial> basis = engine.active_polynomials();
  sort_descending(basis, ring->order());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<const Polynomial*> others;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k != i) others.push_back(&basis[k]);
    }
    basis[i] = normal_form_impl(basis[i], others).monic();
  }
  GroebnerBasis result{ring, std::move(basis)};

  for (const auto& f : generators) {
    if (!normal_form(f, result).is_zero()) throw std::logic_error("Groebner basis lost an input generator");
  }
  return result;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& elems = basis.elements;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (!normal_form(s_polynomial(elems[i], elems[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& basis) {
  const auto& elems = basis.elements;
  const auto& field = basis.ring->field();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].is_zero() || !field.is_one(elems[i].leading_coefficient())) return false;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : elems[j].terms()) {
        if (elems[i].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

struct Ideal::Cache {
  std::once_flag once;
  std::optional<GroebnerBasis> basis;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) require_same_ring(*g.ring(), *ring_);
  std::erase_if(generators_, [](const Polynomial& g) { return g.is_zero(); });
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->basis = reduced_groebner_basis(generators_, ring_); });
  return *cache_->basis;
}

GroebnerBasis Ideal::groebner(const MonomialOrder& order) const {
  if (order == ring_->order()) return groebner();
  RingPtr target = ring_->with_order(order);
  std::vector<std::size_t> identity(ring_->arity());
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  std::vector<Polynomial> mapped;
  for (const auto& g : generators_) mapped.push_back(g.map_variables(target, identity));
  return reduced_groebner_basis(mapped, target);
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(*f.ring(), *ring_);
  return f.is_zero() || normal_form(f, groebner()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::same_ideal(const Ideal& other) const { return contains(other) && other.contains(*this); }

bool Ideal::is_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

Ideal Ideal::operator+(const Ideal& other) const {
  require_same_ring(*ring_, *other.ring_);
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::with(const Polynomial& f) const {
  std::vector<Polynomial> gens = generators_;
  gens.push_back(f);
  return Ideal(ring_, std::move(gens));
}

namespace {
std::string render_list(const std::vector<Polynomial>& polys) {
  std::string s = "(";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].to_string();
  }
  if (polys.empty()) s += "0";
  return s + ")";
}
}  // namespace

std::string Ideal::to_string() const { return render_list(generators_); }
std::string Ideal::canonical_string() const { return render_list(groebner().elements); }

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop_vars) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->arity();
  if (drop_vars.empty()) return ideal;
  std::vector<bool> dropped(n, false);
  for (auto v : drop_vars) {
    if (v >= n) throw std::out_of_range("elimination variable out of range");
    dropped[v] = true;
  }
  // Permute so that the dropped variables form the leading block.
  std::vector<std::size_t> to_block(n);
  std::vector<std::size_t> from_block(n);
  std::vector<std::string> names;
  for (std::size_t pass = 0; pass < 2; ++pass) {
    for (std::size_t v = 0; v < n; ++v) {
      if (dropped[v] == (pass == 0)) {
        to_block[v] = names.size();
        from_block[names.size()] = v;
        names.push_back(ring->variables()[v]);
      }
    }
  }
  const std::size_t split = static_cast<std::size_t>(std::count(dropped.begin(), dropped.end(), true));
  RingPtr block_ring = PolyRing::make(names, ring->field(), MonomialOrder::block(split));
  std::vector<Polynomial> mapped;
  for (const auto& g : ideal.generators()) mapped.push_back(g.map_variables(block_ring, to_block));
  const GroebnerBasis basis = reduced_groebner_basis(mapped, block_ring);

  std::vector<Polynomial> kept;
  for (const auto& g : basis.elements) {
    const bool free_of_dropped = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t k = 0; k < split; ++k) {
        if (t.monomial[k]) return false;
      }
      return true;
    });
    if (free_of_dropped) kept.push_back(g.map_variables(ring, from_block));
  }
  return Ideal(ring, std::move(kept));
}

std::optional<int> max_independent_set(std::span<const Monomial> monomials, std::size_t arity) {
  if (arity > kMaxDimensionVariables) {
    throw std::length_error("independent-set search supports at most " + std::to_string(kMaxDimensionVariables) +
                            " variables");
  }
  std::vector<std::uint64_t> supports;
  for (const auto& m : monomials) {
    if (m.is_one()) return std::nullopt;
    supports.push_back(m.support_mask());
  }
  int best = -1;
  const std::uint64_t limit = std::uint64_t{1} << arity;
  for (std::uint64_t subset = 0; subset < limit; ++subset) {
    const int size = std::popcount(subset);
    if (size <= best) continue;
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [&](std::uint64_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

std::optional<int> krull_dimension(const Ideal& ideal) {
  const auto& basis = ideal.groebner();
  if (basis.is_unit()) return std::nullopt;
  const auto leading = basis.leading_monomials();
  return max_independent_set(leading, ideal.ring()->arity());
}

}  // namespace formal
