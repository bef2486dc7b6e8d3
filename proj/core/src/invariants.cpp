#include "fdim/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace formal {

QuotientRing::QuotientRing(RingPtr ambient, Ideal defining)
    : ambient_(std::move(ambient)), defining_(std::move(defining)), dim_(0) {
  require_same_ring(*defining_.ring(), *ambient_);
  const auto d = krull_dimension(defining_);
  if (!d) throw std::invalid_argument("defining ideal is the unit ideal");
  dim_ = *d;
}

IdealInQuotient::IdealInQuotient(QuotientRing ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), preimage_(ring_.ambient()) {
  std::vector<Polynomial> all = ring_.defining().generators();
  all.insert(all.end(), generators_.begin(), generators_.end());
  preimage_ = Ideal(ring_.ambient(), std::move(all));
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::vanishing_above_bound:
      return "vanishing_above_bound";
    case VerdictKind::nonvanishing_expected_at_fdim:
      return "nonvanishing_expected_at_fdim";
    case VerdictKind::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

InvariantOutcome invariant_report(const IdealInQuotient& ideal, const Assumptions& assumptions,
                                  const DecomposeOptions& options) {
  const Ideal& preimage = ideal.preimage();
  const auto dim_quotient = krull_dimension(preimage);
  if (!dim_quotient) return EmptyVariety{"preimage is the unit ideal; V(a) is empty"};

  InvariantReport r;
  r.d = ideal.ring().dim();
  r.dim_quotient = *dim_quotient;
  r.codim = r.d - r.dim_quotient;
  r.generator_count = static_cast<std::size_t>(
      std::count_if(ideal.generators().begin(), ideal.generators().end(), [](const Polynomial& g) { return !g.is_zero(); }));
  r.assumptions.complete_asserted = assumptions.complete;
  r.assumptions.cohen_macaulay_asserted = assumptions.cohen_macaulay;
  r.assumptions.field_modeled_as_q = preimage.ring()->field().is_rationals();

  MinimalPrimesResult minimal = minimal_primes(preimage, options);
  r.decomposition_complete = minimal.complete;
  r.residuals = std::move(minimal.residuals);
  for (auto& p : minimal.primes) r.primes.push_back({p.prime, p.dim, r.d - p.dim, p.certificate});

  if (!r.primes.empty()) {
    const auto [lo, hi] = std::minmax_element(r.primes.begin(), r.primes.end(),
                                              [](const PrimeRecord& a, const PrimeRecord& b) { return a.dim < b.dim; });
    r.small_height = r.d - hi->dim;
    r.big_height = r.d - lo->dim;
    r.equidimensional = lo->dim == hi->dim;
  } else {
    r.small_height = r.big_height = r.codim;
  }
  // Two routes to the same number: max over minimal primes, and the
  // independent-set dimension of the preimage.
  r.fdim = r.decomposition_complete && !r.primes.empty() ? r.d - r.small_height : r.dim_quotient;
  r.vanishing_bound = r.d - r.big_height;
  r.condition2 = r.decomposition_complete && r.equidimensional && r.fdim == r.vanishing_bound;
  r.preimage_is_prime =
      r.decomposition_complete && r.primes.size() == 1 && preimage.contains(r.primes.front().prime);

  auto& v = r.prediction;
  v.bound = r.vanishing_bound;
  if (!r.decomposition_complete) {
    v.kind = VerdictKind::indeterminate;
    v.reason = "minimal primes not fully certified";
  } else if (!assumptions.complete || !assumptions.cohen_macaulay) {
    v.kind = VerdictKind::indeterminate;
    v.reason = "completeness and Cohen-Macaulayness not both asserted";
  } else if (r.condition2) {
    v.kind = VerdictKind::vanishing_above_bound;
    v.reason = "every minimal prime has dim R/p = d - c";
  } else {
    v.kind = VerdictKind::nonvanishing_expected_at_fdim;
    v.witness_degree = r.fdim;
    v.reason = "minimal primes of different dimension; fdim exceeds d - c";
  }
  return r;
}

std::vector<RuleVerdict> corollary_rules(const InvariantReport& report, const CorollaryFlags& flags) {
  std::vector<RuleVerdict> rules;
  if (flags.regular_asserted && report.generator_count == static_cast<std::size_t>(report.codim)) {
    RuleVerdict rule;
    rule.rule = "set_theoretic_complete_intersection";
    rule.statement = "regular ring, ideal generated by c = " + std::to_string(report.codim) +
                     " elements: F^i = 0 for i > " + std::to_string(report.codim);
    rule.vanishing_above = report.codim;
    rule.theorem_bound = report.vanishing_bound;
    rules.push_back(std::move(rule));
  }
  if (flags.ideal_is_prime && !report.primes.empty()) {
    RuleVerdict rule;
    const int height = report.primes.front().height;
    rule.rule = "prime_ideal";
    rule.statement = "prime ideal of height " + std::to_string(height) + ": F^i = 0 for i != " + std::to_string(height);
    rule.nonvanishing_degree = height;
    rule.theorem_bound = report.vanishing_bound;
    rules.push_back(std::move(rule));
  }
  return rules;
}

ToricPresentation toric_presentation(const std::vector<std::vector<unsigned>>& weights, const FieldSpec& field,
                                     std::vector<std::string> names) {
  if (weights.empty()) throw std::invalid_argument("toric presentation needs at least one generator");
  const std::size_t params = weights.front().size();
  if (params == 0) throw std::invalid_argument("weights must have positive length");
  for (const auto& w : weights) {
    if (w.size() != params) throw std::invalid_argument("weights have inconsistent lengths");
  }
  const std::size_t m = weights.size();
  if (names.empty()) {
    for (std::size_t j = 0; j < m; ++j) {
      names.push_back(m <= 26 ? std::string(1, static_cast<char>('a' + j)) : "y" + std::to_string(j + 1));
    }
  }
  if (names.size() != m) throw std::invalid_argument("one presentation variable per weight is required");

  const std::set<std::string> taken(names.begin(), names.end());
  std::vector<std::string> param_names;
  const std::vector<std::string> preferred = {"s", "t", "u", "v", "w"};
  const bool use_preferred =
      params <= preferred.size() &&
      std::none_of(preferred.begin(), preferred.begin() + static_cast<std::ptrdiff_t>(params),
                   [&](const std::string& s) { return taken.count(s) > 0; });
  for (std::size_t k = 0; k < params; ++k) {
    param_names.push_back(use_preferred ? preferred[k] : "_p" + std::to_string(k));
  }

  std::vector<std::string> all = param_names;
  all.insert(all.end(), names.begin(), names.end());
  RingPtr big = PolyRing::make(all, field);
  std::vector<Polynomial> binomials;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Monomial::Exponent> e(params + m, 0);
    for (std::size_t k = 0; k < params; ++k) e[k] = weights[j][k];
    binomials.push_back(Polynomial::variable(big, params + j) -
                        Polynomial::term(big, Monomial(std::move(e)), field.one()));
  }
  std::vector<std::size_t> drop(params);
  std::iota(drop.begin(), drop.end(), std::size_t{0});
  const Ideal elim = eliminate(Ideal(big, binomials), drop);

  RingPtr ring = PolyRing::make(names, field);
  RingPtr parameter_ring = PolyRing::make(param_names, field);
  std::vector<std::size_t> to_small(params + m, params + m);
  for (std::size_t j = 0; j < m; ++j) to_small[params + j] = j;
  std::vector<Polynomial> gens;
  for (const auto& g : elim.generators()) gens.push_back(g.map_variables(ring, to_small));

  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Monomial::Exponent> e(weights[j].begin(), weights[j].end());
    images.push_back(Polynomial::term(parameter_ring, Monomial(std::move(e)), field.one()));
  }
  for (const auto& g : gens) {
    if (!g.substitute(images).is_zero()) {
      throw std::logic_error("toric generator " + g.to_string() + " does not vanish on the monomial map");
    }
  }
  return {ring, Ideal(ring, std::move(gens)), parameter_ring, std::move(images)};
}

}  // namespace formal
