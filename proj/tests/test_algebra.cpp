#include <doctest.h>

#include <random>

#include "fdim/error.hpp"
#include "support.hpp"

using namespace testing_support;

TEST_CASE("prime field arithmetic") {
  const auto f = FieldSpec::prime(7);
  CHECK(f.to_string(f.from_integer(-1)) == "6");
  CHECK(f.mul(f.from_integer(3), f.inv(f.from_integer(3))) == f.one());
  CHECK(f.from_fraction(1, 2) == f.from_integer(4));
  CHECK_THROWS_AS(f.from_fraction(1, 7), std::domain_error);
  CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::prime(9), std::invalid_argument);
  CHECK(f.name() == "F7");
  for (std::uint64_t n : {2u, 3u, 5u, 7u, 97u, 65537u}) CHECK(is_prime_u64(n));
  for (std::uint64_t n : {0u, 1u, 4u, 9u, 91u, 561u}) CHECK_FALSE(is_prime_u64(n));
}

TEST_CASE("rational arithmetic is exact") {
  const auto q = FieldSpec::rationals();
  const auto third = q.from_fraction(1, 3);
  CHECK(q.add(third, q.add(third, third)) == q.one());
  CHECK(q.to_string(q.from_fraction(-4, 6)) == "-2/3");
  CHECK(q.is_negative(q.from_integer(-5)));
}

TEST_CASE("monomial orders") {
  const Monomial xy2({1, 2, 0}), x2({2, 0, 0}), z3({0, 0, 3}), yz({0, 1, 1});
  CHECK(MonomialOrder::lex().less(xy2, x2));
  CHECK(MonomialOrder::grevlex().less(x2, xy2));
  // equal degree: the smaller power of z is larger
  CHECK(MonomialOrder::grevlex().less(Monomial({1, 0, 2}), Monomial({0, 2, 1})));
  CHECK(MonomialOrder::block(1).less(z3, Monomial({1, 0, 0})));
  CHECK(MonomialOrder::block(1).less(yz, z3) == MonomialOrder::grevlex().less(yz, z3));
  CHECK(xy2.lcm(x2) == Monomial({2, 2, 0}));
  CHECK(xy2.gcd(x2) == Monomial({1, 0, 0}));
  CHECK(Monomial({1, 0, 0}).divides(xy2));
  CHECK(x2.coprime(z3));
}

TEST_CASE("order axioms on all small monomials") {
  const auto pool = monomials_up_to(3, 3);
  for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(1)}) {
    for (const auto& a : pool) {
      CHECK(order.less(Monomial(3), a));
      for (const auto& b : pool) {
        const auto ab = order.compare(a, b);
        CHECK((ab == 0) == (a == b));
        CHECK(order.compare(b, a) == (0 <=> ab));
        // multiplicative
        CHECK(order.compare(a * Monomial({1, 0, 1}), b * Monomial({1, 0, 1})) == ab);
      }
    }
  }
}

TEST_CASE("parsing and rendering") {
  const auto r = ring_of(3);
  const auto f = P(r, "x*y - z^2 + 2/3*x");
  CHECK(f.to_string() == "x*y - z^2 + 2/3*x");
  CHECK(P(r, "(x+y)^2") == P(r, "x^2 + 2*x*y + y^2"));
  CHECK(P(r, "-(x - 1)") == P(r, "1 - x"));
  CHECK(P(r, "0").is_zero());
  CHECK_THROWS_AS(P(r, "x + q"), ParseError);
  CHECK_THROWS_AS(P(r, "x +"), ParseError);
  CHECK_THROWS_AS(P(r, "(x"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/7*x", ring_of(1, FieldSpec::prime(7))), ParseError);
  try {
    P(r, "x + q");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK(P(ring_of(2, FieldSpec::prime(7)), "x - y").to_string() == "x + 6*y");
}

TEST_CASE("parse of render is the identity on random polynomials") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    const auto r = ring_of(1 + k % 4, k % 3 == 0 ? FieldSpec::prime(7) : FieldSpec::rationals());
    const auto f = random_polynomial(rng, r, 4);
    CHECK(parse_polynomial(f.to_string(), r) == f);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto r = ring_of(3, k % 2 ? FieldSpec::prime(7) : FieldSpec::rationals());
    const auto a = random_polynomial(rng, r, 3), b = random_polynomial(rng, r, 3), c = random_polynomial(rng, r, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a.pow(2) == a * a);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
  }
}

TEST_CASE("cube of a sum in characteristic 3 matches the multinomial oracle") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const auto r = ring_of(3, FieldSpec::prime(p));
    const auto cube = P(r, "x + y + z").pow(3);
    std::size_t expected_terms = 0;
    for (unsigned a = 0; a <= 3; ++a) {
      for (unsigned b = 0; a + b <= 3; ++b) {
        const unsigned c = 3 - a - b;
        const std::uint64_t coeff = binomial(3, a) * binomial(3 - a, b) % p;
        if (coeff != 0) ++expected_terms;
        bool found = false;
        for (const auto& t : cube.terms()) {
          if (t.monomial == Monomial({a, b, c})) {
            found = true;
            CHECK(t.coefficient.residue() == coeff);
          }
        }
        CHECK(found == (coeff != 0));
      }
    }
    CHECK(cube.size() == expected_terms);
  }
  const auto r3 = ring_of(3, FieldSpec::prime(3));
  CHECK(P(r3, "x + y + z").pow(3) == P(r3, "x^3 + y^3 + z^3"));
}

TEST_CASE("polynomial helpers") {
  const auto r = ring_of(3);
  const auto f = P(r, "6*x^2*y + 4*x*y^2");
  CHECK(f.monomial_content() == Monomial({1, 1, 0}));
  CHECK(f.primitive() == P(r, "3*x^2*y + 2*x*y^2"));
  CHECK(f.monic().leading_coefficient() == r->field().one());
  CHECK(f.divided_by(Monomial({1, 1, 0})) == P(r, "6*x + 4*y"));
  CHECK(P(r, "-3*y").as_variable() == std::optional<std::size_t>(1));
  CHECK_FALSE(P(r, "y + 1").as_variable());
  CHECK(P(r, "x*y - z^2").is_homogeneous());
  CHECK(f.degree_in(1) == 2);
  const std::vector<Polynomial> images = {P(r, "y"), P(r, "x"), P(r, "z + 1")};
  CHECK(P(r, "x*z").substitute(images) == P(r, "y*z + y"));
  CHECK_THROWS_AS(P(r, "x") + P(ring_of(2), "x"), RingMismatch);
  CHECK_THROWS_AS(PolyRing::make({"x", "x"}, FieldSpec::rationals()), std::invalid_argument);
  CHECK_THROWS_AS(PolyRing::make({"2x"}, FieldSpec::rationals()), std::invalid_argument);
}
