#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fdim/groebner.hpp"

namespace formal {

/// Sufficient conditions for primality that a returned prime satisfies.
///
///   generated_by_variables        reduced basis is a set of variables
///   variables_plus_monic_linear   variables plus one f = c*v + h with c a
///                                 nonzero constant and v not occurring in h
///   variables_plus_quadratic_rank3
///                                 variables plus one quadratic form of rank
///                                 >= 3 (characteristic != 2)
///   frobenius_root_reduced        reached after replacing a p-th power g^p by
///                                 g; `checked_as` names the leaf test
///   monomial_cover                minimal variable cover of a monomial ideal
enum class CertificateKind {
  generated_by_variables,
  variables_plus_monic_linear,
  variables_plus_quadratic_rank3,
  frobenius_root_reduced,
  monomial_cover,
};

std::string to_string(CertificateKind kind);

struct PrimeCertificate {
  CertificateKind kind;
  CertificateKind checked_as;

  std::string to_string() const;
};

struct MinimalPrime {
  Ideal prime;
  PrimeCertificate certificate;
  int dim;
};

struct MinimalPrimesResult {
  std::vector<MinimalPrime> primes;
  bool complete = true;
  /// Ideals whose minimal primes could not be certified.
  std::vector<Ideal> residuals;
};

struct DecomposeOptions {
  /// Hand all-monomial bases to the cover enumeration instead of splitting.
  bool monomial_cover_path = true;
  /// Recursion nodes before the remaining branches are reported as residuals.
  std::size_t max_nodes = 20000;
};

/// Minimal primes over ideal by recursive splitting of the variety. A
/// proper ideal is required; the unit ideal gives an empty complete result.
MinimalPrimesResult minimal_primes(const Ideal& ideal, const DecomposeOptions& options = {});

/// Minimal primes of a monomial ideal by enumerating minimal variable covers.
/// Throws std::invalid_argument on a non-monomial generator.
std::vector<Ideal> monomial_minimal_primes_oracle(const Ideal& ideal);

/// Structural primality test on a reduced basis; never returns
/// frobenius_root_reduced or monomial_cover.
std::optional<CertificateKind> certify_prime_basis(const GroebnerBasis& basis);

/// Recomputes the basis of prime and re-checks the certificate.
bool verify_certificate(const Ideal& prime, const PrimeCertificate& certificate);

/// Rank of the symmetric matrix of a quadratic form. Throws
/// std::invalid_argument in characteristic 2 or for non-quadratic input.
std::size_t quadratic_form_rank(const Polynomial& form);

/// g with g^p = f, when f is a non-constant p-th power over F_p.
std::optional<Polynomial> frobenius_root(const Polynomial& f);

}  // namespace formal
