#include "fdim/decompose.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace formal {

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::generated_by_variables:
      return "generated_by_variables";
    case CertificateKind::variables_plus_monic_linear:
      return "variables_plus_monic_linear";
    case CertificateKind::variables_plus_quadratic_rank3:
      return "variables_plus_quadratic_rank3";
    case CertificateKind::frobenius_root_reduced:
      return "frobenius_root_reduced";
    case CertificateKind::monomial_cover:
      return "monomial_cover";
  }
  return "unknown";
}

std::string PrimeCertificate::to_string() const {
  if (kind == checked_as) return formal::to_string(kind);
  return formal::to_string(kind) + "+" + formal::to_string(checked_as);
}

std::size_t quadratic_form_rank(const Polynomial& form) {
  const auto& field = form.field();
  if (field.characteristic() == 2) throw std::invalid_argument("quadratic rank is not defined in characteristic 2");
  if (form.is_zero() || !form.is_homogeneous() || form.total_degree() != 2) {
    throw std::invalid_argument("not a quadratic form");
  }
  const std::size_t n = form.ring()->arity();
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, field.zero()));
  const Scalar half = field.inv(field.from_integer(2));
  for (const auto& t : form.terms()) {
    const auto vars = t.monomial.support();
    if (vars.size() == 1) {
      m[vars[0]][vars[0]] = t.coefficient;
    } else {
      const Scalar c = field.mul(t.coefficient, half);
      m[vars[0]][vars[1]] = c;
      m[vars[1]][vars[0]] = c;
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && field.is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[rank]);
    const Scalar inv = field.inv(m[rank][col]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (field.is_zero(m[r][col])) continue;
      const Scalar factor = field.mul(m[r][col], inv);
      for (std::size_t c = col; c < n; ++c) m[r][c] = field.sub(m[r][c], field.mul(factor, m[rank][c]));
    }
    ++rank;
  }
  return rank;
}

std::optional<Polynomial> frobenius_root(const Polynomial& f) {
  const auto p = f.field().characteristic();
  if (p == 0 || f.is_constant()) return std::nullopt;
  std::vector<Term> root;
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Exponent> e(t.monomial.exponents().begin(), t.monomial.exponents().end());
    for (auto& x : e) {
      if (x % p != 0) return std::nullopt;
      x = static_cast<Monomial::Exponent>(x / p);
    }
    // Frobenius fixes F_p, so coefficients are their own p-th roots.
    root.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(f.ring(), std::move(root));
}

namespace {

bool is_monic_linear_in_some_variable(const Polynomial& f) {
  const std::size_t n = f.ring()->arity();
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t occurrences = 0;
    bool linear = true;
    for (const auto& t : f.terms()) {
      if (t.monomial[v] == 0) continue;
      ++occurrences;
      if (t.monomial.total_degree() != 1) linear = false;
    }
    if (occurrences == 1 && linear) return true;
  }
  return false;
}

}  // namespace

std::optional<CertificateKind> certify_prime_basis(const GroebnerBasis& basis) {
  if (basis.is_unit()) return std::nullopt;
  std::uint64_t variable_mask = 0;
  std::vector<const Polynomial*> others;
  for (const auto& g : basis.elements) {
    if (auto v = g.as_variable(); v && basis.ring->field().is_one(g.leading_coefficient())) {
      variable_mask |= std::uint64_t{1} << *v;
    } else {
      others.push_back(&g);
    }
  }
  if (others.empty()) return CertificateKind::generated_by_variables;
  if (others.size() != 1) return std::nullopt;
  const Polynomial& f = *others.front();
  for (const auto& t : f.terms()) {
    if (t.monomial.support_mask() & variable_mask) return std::nullopt;
  }
  if (is_monic_linear_in_some_variable(f)) return CertificateKind::variables_plus_monic_linear;
  if (f.field().characteristic() != 2 && f.is_homogeneous() && f.total_degree() == 2 && quadratic_form_rank(f) >= 3) {
    return CertificateKind::variables_plus_quadratic_rank3;
  }
  return std::nullopt;
}

bool verify_certificate(const Ideal& prime, const PrimeCertificate& certificate) {
  const GroebnerBasis basis = reduced_groebner_basis(prime.generators(), prime.ring());
  const auto found = certify_prime_basis(basis);
  switch (certificate.checked_as) {
    case CertificateKind::monomial_cover:
      return found == CertificateKind::generated_by_variables;
    case CertificateKind::frobenius_root_reduced:
      return false;
    default:
      return found == certificate.checked_as &&
             (certificate.kind == certificate.checked_as ||
              certificate.kind == CertificateKind::frobenius_root_reduced);
  }
}

std::vector<Ideal> monomial_minimal_primes_oracle(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->arity();
  if (n > 24) throw std::length_error("cover enumeration supports at most 24 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) throw std::invalid_argument("monomial oracle given non-monomial " + g.to_string());
    if (g.leading_monomial().is_one()) return {};
    supports.push_back(g.leading_monomial().support_mask());
  }
  std::vector<std::uint64_t> subsets(std::uint64_t{1} << n);
  for (std::uint64_t s = 0; s < subsets.size(); ++s) subsets[s] = s;
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint64_t> covers;
  for (auto s : subsets) {
    const bool covers_all = std::all_of(supports.begin(), supports.end(), [&](std::uint64_t g) { return (g & s) != 0; });
    if (!covers_all) continue;
    const bool minimal = std::none_of(covers.begin(), covers.end(), [&](std::uint64_t c) { return (c & ~s) == 0; });
    if (minimal) covers.push_back(s);
  }
  std::vector<Ideal> out;
  for (auto c : covers) {
    std::vector<Polynomial> gens;
    for (std::size_t v = 0; v < n; ++v) {
      if (c & (std::uint64_t{1} << v)) gens.push_back(Polynomial::variable(ring, v));
    }
    out.emplace_back(ring, std::move(gens));
  }
  std::sort(out.begin(), out.end(),
            [](const Ideal& a, const Ideal& b) { return a.canonical_string() < b.canonical_string(); });
  return out;
}

namespace {

struct Collected {
  Ideal prime;
  PrimeCertificate certificate;
};

class Splitter {
 public:
  explicit Splitter(const DecomposeOptions& options) : options_(options) {}

  void explore(const Ideal& ideal, bool via_frobenius) {
    if (++nodes_ > options_.max_nodes) {
      residuals_.push_back(ideal);
      return;
    }
    const GroebnerBasis& basis = ideal.groebner();
    if (basis.is_unit()) return;
    const RingPtr& ring = ideal.ring();

    const auto wrap = [&](CertificateKind leaf) {
      return PrimeCertificate{via_frobenius ? CertificateKind::frobenius_root_reduced : leaf, leaf};
    };

    const bool all_monomial = std::all_of(basis.elements.begin(), basis.elements.end(),
                                          [](const Polynomial& g) { return g.is_monomial(); });
    const bool all_variables = std::all_of(basis.elements.begin(), basis.elements.end(),
                                           [](const Polynomial& g) { return g.as_variable().has_value(); });
    if (options_.monomial_cover_path && all_monomial && !all_variables) {
      for (auto& p : monomial_minimal_primes_oracle(Ideal(ring, basis.elements))) {
        found_.push_back({std::move(p), wrap(CertificateKind::monomial_cover)});
      }
      return;
    }

    // Monomial content: x*g in the ideal splits V into V(I + x) and V(I + g).
    for (const auto& g : basis.elements) {
      if (g.as_variable()) continue;
      const Monomial content = g.monomial_content();
      if (content.is_one()) continue;
      const std::size_t v = content.support().front();
      const Polynomial x = Polynomial::variable(ring, v);
      explore(ideal.with(x), via_frobenius);
      explore(ideal.with(g.divided_by(Monomial::variable(ring->arity(), v))), via_frobenius);
      return;
    }

    if (ring->field().characteristic() != 0) {
      for (std::size_t k = 0; k < basis.elements.size(); ++k) {
        auto root = frobenius_root(basis.elements[k]);
        if (!root) continue;
        std::vector<Polynomial> gens = basis.elements;
        gens[k] = *root;
        explore(Ideal(ring, std::move(gens)), true);
        return;
      }
    }

    if (auto kind = certify_prime_basis(basis)) {
      found_.push_back({Ideal(ring, basis.elements), wrap(*kind)});
    } else {
      residuals_.push_back(ideal);
    }
  }

  std::vector<Collected> found_;
  std::vector<Ideal> residuals_;

 private:
  const DecomposeOptions& options_;
  std::size_t nodes_ = 0;
};

}  // namespace

MinimalPrimesResult minimal_primes(const Ideal& ideal, const DecomposeOptions& options) {
  MinimalPrimesResult result;
  if (ideal.is_unit()) return result;
  Splitter splitter(options);
  splitter.explore(ideal, false);

  std::vector<Collected> minimal;
  for (auto& cand : splitter.found_) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const Collected& kept) { return cand.prime.contains(kept.prime); });
    if (redundant) continue;
    std::erase_if(minimal, [&](const Collected& kept) { return kept.prime.contains(cand.prime); });
    minimal.push_back(std::move(cand));
  }
  std::sort(minimal.begin(), minimal.end(), [](const Collected& a, const Collected& b) {
    return a.prime.canonical_string() < b.prime.canonical_string();
  });

  // A residual inside some certified prime's closure adds no new minimal prime.
  for (auto& r : splitter.residuals_) {
    const bool absorbed = std::any_of(minimal.begin(), minimal.end(),
                                      [&](const Collected& kept) { return r.contains(kept.prime); });
    if (!absorbed) result.residuals.push_back(std::move(r));
  }
  result.complete = result.residuals.empty();

  for (auto& m : minimal) {
    const int dim = krull_dimension(m.prime).value();
    result.primes.push_back({std::move(m.prime), m.certificate, dim});
  }
  return result;
}

}  // namespace formal
