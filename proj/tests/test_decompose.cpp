#include <doctest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

std::vector<std::string> prime_strings(const MinimalPrimesResult& r) {
  std::vector<std::string> out;
  for (const auto& p : r.primes) out.push_back(p.prime.canonical_string());
  return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("minimal primes of the worked ideals") {
  const auto q3 = ring_of(3);
  CHECK(prime_strings(minimal_primes(I(q3, {"x*y", "x*z"}))) == Strings{"(x)", "(y, z)"});
  CHECK(prime_strings(minimal_primes(I(q3, {"x*z", "x"}))) == Strings{"(x)"});
  CHECK(prime_strings(minimal_primes(I(q3, {"x*z", "y*z", "z"}))) == Strings{"(z)"});
  CHECK(prime_strings(minimal_primes(I(ring_of(2), {"x^2"}))) == Strings{"(x)"});
  CHECK(prime_strings(minimal_primes(I(q3, {"x*y - z^2", "x", "z"}))) == Strings{"(x, z)"});
  CHECK(prime_strings(minimal_primes(I(q3, {"x*y - z^2"}))) == Strings{"(x*y - z^2)"});

  const auto f3 = ring_of(3, FieldSpec::prime(3));
  const auto finj = minimal_primes(I(f3, {"x^3 + y^3 + z^3", "x"}));
  CHECK(prime_strings(finj) == Strings{"(x, y + z)"});
  CHECK(finj.primes.front().certificate.kind == CertificateKind::frobenius_root_reduced);

  const auto f7 = ring_of(3, FieldSpec::prime(7));
  CHECK(prime_strings(minimal_primes(I(f7, {"x^3 + y^3 + z^3", "x", "y"}))) == Strings{"(x, y, z)"});

  const auto unit = minimal_primes(I(q3, {"1"}));
  CHECK(unit.complete);
  CHECK(unit.primes.empty());
}

TEST_CASE("splitting without the cover shortcut") {
  DecomposeOptions no_cover;
  no_cover.monomial_cover_path = false;
  const auto r = ring_of(4);
  const auto res = minimal_primes(I(r, {"x*z", "x*w", "y*z", "y*w"}), no_cover);
  CHECK(res.complete);
  CHECK(prime_strings(res) == Strings{"(x, y)", "(z, w)"});
  for (const auto& p : res.primes) CHECK(verify_certificate(p.prime, p.certificate));
}

TEST_CASE("uncertifiable components are reported, not guessed") {
  // irreducible cubic; no certificate applies
  const auto r = ring_of(2);
  const auto res = minimal_primes(I(r, {"x^3 + y^3 + 1"}));
  CHECK_FALSE(res.complete);
  CHECK_FALSE(res.residuals.empty());
}

TEST_CASE("certificates") {
  const auto r = ring_of(3);
  CHECK(certify_prime_basis(I(r, {"x", "y"}).groebner()) == CertificateKind::generated_by_variables);
  CHECK(certify_prime_basis(I(r, {"x", "y + z^2"}).groebner()) == CertificateKind::variables_plus_monic_linear);
  CHECK(certify_prime_basis(I(r, {"x*y - z^2"}).groebner()) == CertificateKind::variables_plus_quadratic_rank3);
  CHECK_FALSE(certify_prime_basis(I(r, {"x*y"}).groebner()));
  CHECK_FALSE(certify_prime_basis(I(r, {"x^2 + y^2"}).groebner()));
  CHECK_FALSE(verify_certificate(I(r, {"x*y"}), {CertificateKind::generated_by_variables,
                                                  CertificateKind::generated_by_variables}));
}

TEST_CASE("quadratic rank and Frobenius roots") {
  const auto r = ring_of(3);
  CHECK(quadratic_form_rank(P(r, "x*y - z^2")) == 3);
  CHECK(quadratic_form_rank(P(r, "x^2 + y^2")) == 2);
  CHECK(quadratic_form_rank(P(r, "x*y")) == 2);
  CHECK(quadratic_form_rank(P(r, "(x + y + z)^2")) == 1);
  CHECK_THROWS_AS(quadratic_form_rank(P(ring_of(2, FieldSpec::prime(2)), "x*y")), std::invalid_argument);

  const auto f3 = ring_of(3, FieldSpec::prime(3));
  CHECK(frobenius_root(P(f3, "x^3 + y^3 + z^3")) == P(f3, "x + y + z"));
  CHECK(frobenius_root(P(f3, "x^6 + 2*y^3")) == P(f3, "x^2 + 2*y"));
  CHECK_FALSE(frobenius_root(P(f3, "x^3 + y")));
  CHECK_FALSE(frobenius_root(P(r, "x^3")));
}

TEST_CASE("exhaustive monomial family in three variables matches brute-force covers") {
  DecomposeOptions no_cover;
  no_cover.monomial_cover_path = false;
  const auto r = ring_of(3);
  for_each_subset(monomials_up_to(3, 2), 3, [&](const std::vector<Monomial>& gens) {
    const auto ideal = monomial_ideal(r, gens);
    const auto res = minimal_primes(ideal, no_cover);
    REQUIRE(res.complete);
    std::vector<std::uint32_t> got;
    for (const auto& p : res.primes) got.push_back(variable_mask(p.prime));
    std::sort(got.begin(), got.end());
    CHECK(got == minimal_covers(gens, 3));
    CHECK(monomial_minimal_primes_oracle(ideal).size() == got.size());
  });
}
