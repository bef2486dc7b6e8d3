#include <doctest.h>

#include <random>

#include "fdim/invariants.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

IdealInQuotient make(const RingPtr& r, std::initializer_list<const char*> defining,
                     std::initializer_list<const char*> gens) {
  std::vector<Polynomial> a;
  for (const char* g : gens) a.push_back(P(r, g));
  return IdealInQuotient(QuotientRing(r, I(r, defining)), a);
}

InvariantReport report(const IdealInQuotient& a, Assumptions assumptions = {true, true, false}) {
  auto out = invariant_report(a, assumptions);
  REQUIRE(std::holds_alternative<InvariantReport>(out));
  return std::get<InvariantReport>(out);
}

std::string fingerprint(const InvariantReport& r) {
  std::string s = std::to_string(r.d) + "|" + std::to_string(r.dim_quotient) + "|" + std::to_string(r.codim) + "|" +
                  std::to_string(r.fdim) + "|" + std::to_string(r.small_height) + "|" +
                  std::to_string(r.big_height) + "|" + std::to_string(r.vanishing_bound) + "|" +
                  std::to_string(r.condition2) + "|" + to_string(r.prediction.kind) + "|";
  for (const auto& p : r.primes) s += p.prime.canonical_string() + ":" + std::to_string(p.dim) + ";";
  return s;
}

}  // namespace

TEST_CASE("headline numbers") {
  const auto r2 = ring_of(2);
  const auto poly = report(make(r2, {}, {"x"}));
  CHECK(poly.d == 2);
  CHECK(poly.fdim == 1);
  CHECK(poly.big_height == 1);
  CHECK(poly.vanishing_bound == 1);
  CHECK(poly.condition2);
  CHECK(poly.prediction.kind == VerdictKind::vanishing_above_bound);
  CHECK(poly.prediction.bound == 1);

  const auto r3 = ring_of(3);
  const auto axes = report(make(r3, {}, {"x*y", "x*z"}));
  CHECK(axes.d == 3);
  CHECK(axes.fdim == 2);
  CHECK(axes.small_height == 1);
  CHECK(axes.big_height == 2);
  CHECK(axes.vanishing_bound == 1);
  CHECK_FALSE(axes.equidimensional);
  CHECK_FALSE(axes.condition2);
  CHECK(axes.prediction.kind == VerdictKind::nonvanishing_expected_at_fdim);
  CHECK(axes.prediction.witness_degree == 2);

  const auto dual = report(make(r3, {}, {"x", "y", "z"}));
  CHECK(dual.fdim == 0);
  CHECK(dual.vanishing_bound == 0);
  CHECK(dual.condition2);

  const auto m2 = report(make(r3, {"y*z"}, {"x", "y"}), {false, true, false});
  CHECK(m2.d == 2);
  CHECK(m2.codim == 1);
  CHECK(m2.fdim == 1);
  CHECK(m2.vanishing_bound == 1);
  CHECK(m2.prediction.kind == VerdictKind::indeterminate);
  CHECK(m2.assumptions.field_modeled_as_q);
}

TEST_CASE("invariant relations hold on random instances") {
  for (const auto& sample : random_ideals(80, 555)) {
    const auto out = invariant_report(IdealInQuotient(QuotientRing(sample.ring, Ideal(sample.ring)), sample.generators),
                                      {true, true, false});
    if (std::holds_alternative<EmptyVariety>(out)) continue;
    const auto& r = std::get<InvariantReport>(out);
    CHECK(r.fdim == r.dim_quotient);
    CHECK(r.fdim <= r.d);
    CHECK(r.small_height <= r.big_height);
    CHECK(r.codim == r.d - r.fdim);
    CHECK(r.vanishing_bound == r.d - r.big_height);
    if (r.condition2) {
      CHECK(r.fdim == r.vanishing_bound);
      CHECK(r.small_height == r.big_height);
    }
    if (!r.decomposition_complete) CHECK(r.prediction.kind == VerdictKind::indeterminate);
  }
}

TEST_CASE("scaling a generator or adding a redundant one changes nothing") {
  const auto r3 = ring_of(3);
  const auto base = fingerprint(report(make(r3, {"x*z"}, {"x", "y*z"})));
  CHECK(fingerprint(report(make(r3, {"x*z"}, {"-3*x", "2/5*y*z"}))) == base);
  CHECK(fingerprint(report(make(r3, {"x*z"}, {"x", "y*z", "x*y + y*z", "x*z"}))) == base);

  std::mt19937_64 rng(8);
  for (const auto& sample : random_ideals(30, 77)) {
    const QuotientRing ring(sample.ring, Ideal(sample.ring));
    const auto first = invariant_report(IdealInQuotient(ring, sample.generators), {true, true, false});
    if (!std::holds_alternative<InvariantReport>(first)) continue;
    auto scaled = sample.generators;
    scaled[0] = scaled[0].scaled(sample.ring->field().from_integer(3));
    scaled.push_back(sample.generators[0] * random_polynomial(rng, sample.ring, 1));
    const auto second = invariant_report(IdealInQuotient(ring, scaled), {true, true, false});
    REQUIRE(std::holds_alternative<InvariantReport>(second));
    CHECK(fingerprint(std::get<InvariantReport>(first)) == fingerprint(std::get<InvariantReport>(second)));
  }
}

TEST_CASE("empty variety is a separate outcome") {
  const auto r2 = ring_of(2);
  const auto out = invariant_report(make(r2, {"x"}, {"x + 1"}), {});
  CHECK(std::holds_alternative<EmptyVariety>(out));
  CHECK_THROWS_AS(QuotientRing(r2, I(r2, {"1"})), std::invalid_argument);
}

TEST_CASE("corollary rules") {
  const auto r4 = PolyRing::make({"x1", "x2", "x3", "x4"}, FieldSpec::rationals());
  const auto reg = report(make(r4, {}, {"x1", "x2"}));
  const auto rules = corollary_rules(reg, {true, true});
  REQUIRE(rules.size() == 2);
  CHECK(rules[0].rule == "set_theoretic_complete_intersection");
  CHECK(rules[0].vanishing_above == 2);
  CHECK(rules[0].theorem_bound == 2);
  CHECK(rules[1].rule == "prime_ideal");
  CHECK(rules[1].nonvanishing_degree == 2);
  CHECK(corollary_rules(reg, {false, false}).empty());

  const auto r3 = ring_of(3);
  const auto axes = report(make(r3, {}, {"x*y", "x*z"}));
  CHECK(corollary_rules(axes, {true, false}).empty());
}

TEST_CASE("toric presentation of k[s^4, s^3 t, s t^3, t^4]") {
  const auto tp = toric_presentation({{4, 0}, {3, 1}, {1, 3}, {0, 4}}, FieldSpec::rationals());
  const auto& r = tp.ring;
  for (const char* b : {"b*c - a*d", "b^3 - a^2*c", "c^3 - b*d^2", "a*c^2 - b^2*d"}) CHECK(tp.ideal.contains(P(r, b)));
  CHECK_FALSE(tp.ideal.contains(P(r, "a*d - b^2")));
  CHECK(krull_dimension(tp.ideal) == 2);

  // every generator vanishes at integer points (s^4, s^3 t, s t^3, t^4)
  for (long long s = -2; s <= 3; ++s) {
    for (long long t = -3; t <= 2; ++t) {
      const std::vector<Polynomial> point = {Polynomial::constant(r, s * s * s * s), Polynomial::constant(r, s * s * s * t),
                                             Polynomial::constant(r, s * t * t * t), Polynomial::constant(r, t * t * t * t)};
      for (const auto& g : tp.ideal.groebner().elements) CHECK(g.substitute(point).is_zero());
    }
  }

  const auto plane = toric_presentation({{1, 0}, {0, 1}}, FieldSpec::rationals());
  CHECK(plane.ideal.is_zero());
}
