#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdim/groebner.hpp"

namespace formal {

/// Per-variable closed interval of multidegrees.
struct DegreeBox {
  std::vector<int> lo;
  std::vector<int> hi;

  static DegreeBox cube(std::size_t arity, int bound) {
    return {std::vector<int>(arity, -bound), std::vector<int>(arity, bound)};
  }
  std::uint64_t cells() const;
  bool contains(std::span<const int> degree) const;
};

/// Module A/J and Cech generators m_1..m_s, all monomial.
struct GradedCechInput {
  RingPtr ring;
  std::vector<Monomial> module_generators;
  std::vector<Monomial> cech_generators;
  DegreeBox box;

  /// Throws std::invalid_argument unless both ideals are monomial.
  static GradedCechInput from_ideals(const Ideal& module_ideal, const Ideal& cech_ideal, DegreeBox box);
};

inline constexpr std::uint64_t kDefaultMaxCells = 1'000'000;
inline constexpr std::size_t kMaxCechGenerators = 16;

/// 1 iff (A/J) localized at the product of the chosen generators is nonzero
/// in degree b. Bit j of localizing_set selects m_{j+1}.
int graded_piece_dimension(std::uint64_t localizing_set, std::span<const int> degree, const GradedCechInput& input);

struct CechEntry {
  int index;
  std::vector<int> degree;
  long long dim;
};

struct CechReport {
  std::size_t generator_count = 0;
  std::optional<unsigned> power;
  /// Krull dimension of A/J; nullopt when the module is zero.
  std::optional<int> module_dimension;
  DegreeBox box;
  std::uint64_t cells = 0;
  /// Nonzero cohomology dimensions, sorted by (index, degree).
  std::vector<CechEntry> entries;
  std::vector<long long> cohomology_totals;  // indexed by i = 0..s
  std::vector<long long> chain_totals;

  bool vanishes_above_generator_count = true;
  bool vanishes_above_module_dimension = true;
  /// sum (-1)^i dim C^i_b == sum (-1)^i dim H^i_b at every degree b.
  bool euler_identity = true;

  long long dim_at(int index, std::span<const int> degree) const;
};

/// Cohomology of the Z^n-graded Cech complex at every degree in the box, by
/// exact rank over the ring's field. Throws BudgetExceeded above max_cells.
CechReport cech_cohomology_box(const GradedCechInput& input, std::uint64_t max_cells = kDefaultMaxCells);

/// Monomial generators of a^n (all n-fold products, minimalized).
std::vector<Monomial> monomial_ideal_power(std::span<const Monomial> generators, unsigned n);

/// Default cube bound: max deg J + max_power * max deg a, at least 1.
int default_box_bound(const Ideal& module_ideal, const Ideal& cech_ideal, unsigned max_power);

struct TruncationReport {
  std::vector<CechReport> reports;  // one per n, module A/(J + a^n)
  /// H^i totals for i >= 1 are zero at every computed n.
  bool higher_vanishing_at_all_powers = true;
  /// Totals for i >= 1 are identical across the computed powers.
  bool higher_totals_stable = true;
  std::string label = "finite evidence only";
};

TruncationReport truncated_formal_report(const Ideal& module_ideal, const Ideal& cech_ideal, unsigned first_power,
                                         unsigned last_power, const DegreeBox& box,
                                         std::uint64_t max_cells = kDefaultMaxCells);

/// Rank of an integer matrix over field: modular elimination over F_p,
/// fraction-free elimination over Q.
std::size_t matrix_rank(std::vector<std::vector<long long>> rows, const FieldSpec& field);

}  // namespace formal
