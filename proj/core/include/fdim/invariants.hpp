#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fdim/decompose.hpp"
#include "fdim/groebner.hpp"

namespace formal {

/// R = ambient / defining, with d = dim R cached.
class QuotientRing {
 public:
  /// Throws std::invalid_argument when the defining ideal is the unit ideal.
  QuotientRing(RingPtr ambient, Ideal defining);

  const RingPtr& ambient() const { return ambient_; }
  const Ideal& defining() const { return defining_; }
  int dim() const { return dim_; }

 private:
  RingPtr ambient_;
  Ideal defining_;
  int dim_;
};

/// An ideal of R given by representatives in the ambient ring; its preimage
/// is defining + generators.
class IdealInQuotient {
 public:
  IdealInQuotient(QuotientRing ring, std::vector<Polynomial> generators);

  const QuotientRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const Ideal& preimage() const { return preimage_; }

 private:
  QuotientRing ring_;
  std::vector<Polynomial> generators_;
  Ideal preimage_;
};

/// Hypotheses the user vouches for; none of them is verified.
struct Assumptions {
  bool complete = false;
  bool cohen_macaulay = false;
  bool regular = false;
};

struct ReportAssumptions {
  bool complete_asserted = false;
  bool cohen_macaulay_asserted = false;
  bool field_modeled_as_q = false;
};

enum class VerdictKind { vanishing_above_bound, nonvanishing_expected_at_fdim, indeterminate };

std::string to_string(VerdictKind kind);

struct PredictionVerdict {
  VerdictKind kind = VerdictKind::indeterminate;
  int bound = 0;
  std::optional<int> witness_degree;
  std::string reason;
};

struct PrimeRecord {
  Ideal prime;
  int dim;     // dim R/p
  int height;  // d - dim R/p
  PrimeCertificate certificate;
};

struct InvariantReport {
  int d = 0;
  int dim_quotient = 0;
  int codim = 0;
  std::vector<PrimeRecord> primes;
  int fdim = 0;
  int small_height = 0;
  int big_height = 0;
  bool equidimensional = false;
  int vanishing_bound = 0;
  bool condition2 = false;
  PredictionVerdict prediction;
  ReportAssumptions assumptions;
  bool decomposition_complete = false;
  std::vector<Ideal> residuals;
  std::size_t generator_count = 0;
  /// The preimage is itself one of the certified primes.
  bool preimage_is_prime = false;
};

struct EmptyVariety {
  std::string reason;
};

using InvariantOutcome = std::variant<InvariantReport, EmptyVariety>;

/// The headline numbers for an ideal a of R:
///   height(p) = d - dim R/p for each minimal prime p over a,
///   fdim = max dim R/p, vanishing bound = d - max height,
///   condition2 = every dim R/p equals the bound.
/// The predictor only commits when both complete and cohen_macaulay are asserted
/// and the decomposition is complete.
InvariantOutcome invariant_report(const IdealInQuotient& ideal, const Assumptions& assumptions,
                                  const DecomposeOptions& options = {});

struct CorollaryFlags {
  bool regular_asserted = false;
  bool ideal_is_prime = false;
};

struct RuleVerdict {
  std::string rule;
  std::string statement;
  std::optional<int> vanishing_above;
  std::optional<int> nonvanishing_degree;
  int theorem_bound = 0;
};

std::vector<RuleVerdict> corollary_rules(const InvariantReport& report, const CorollaryFlags& flags);

struct ToricPresentation {
  RingPtr ring;            // one variable per monomial generator
  Ideal ideal;             // kernel of the monomial map
  RingPtr parameter_ring;  // s, t, ...
  std::vector<Polynomial> images;
};

/// Presentation k[y1..ym]/P of the monomial subring k[s^w1, ..., s^wm].
/// names defaults to a, b, c, ... Every generator of P is checked to vanish
/// under y_j -> s^wj.
ToricPresentation toric_presentation(const std::vector<std::vector<unsigned>>& weights, const FieldSpec& field,
                                     std::vector<std::string> names = {});

}  // namespace formal
