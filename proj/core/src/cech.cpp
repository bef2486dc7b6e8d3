#include "fdim/cech.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "fdim/error.hpp"

namespace formal {

std::uint64_t DegreeBox::cells() const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return 0;
    const auto width = static_cast<std::uint64_t>(hi[i] - lo[i]) + 1;
    if (total > UINT64_MAX / width) return UINT64_MAX;
    total *= width;
  }
  return total;
}

bool DegreeBox::contains(std::span<const int> degree) const {
  if (degree.size() != lo.size()) return false;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (degree[i] < lo[i] || degree[i] > hi[i]) return false;
  }
  return true;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                                        b.exponents().end());
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); })) out.push_back(g);
  }
  return out;
}

std::vector<Monomial> monomials_of(const Ideal& ideal, const char* what) {
  std::vector<Monomial> out;
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) throw std::invalid_argument(std::string(what) + " ideal is not monomial: " + g.to_string());
    out.push_back(g.leading_monomial());
  }
  return out;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

struct Overflow {};

long long checked_mul_sub(long long fa, long long x, long long fb, long long y) {
  long long p = 0;
  long long q = 0;
  long long r = 0;
  if (__builtin_mul_overflow(fa, x, &p) || __builtin_mul_overflow(fb, y, &q) || __builtin_sub_overflow(p, q, &r)) {
    throw Overflow{};
  }
  return r;
}

std::size_t rank_int64(std::vector<std::vector<long long>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const long long g = gcd_ll(m[rank][c], m[r][c]);
      const long long fa = m[rank][c] / g;
      const long long fb = m[r][c] / g;
      long long content = 0;
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = checked_mul_sub(fa, m[r][k], fb, m[rank][k]);
        content = gcd_ll(content, m[r][k]);
      }
      if (content > 1) {
        for (std::size_t k = c; k < cols; ++k) m[r][k] /= content;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mpz(const std::vector<std::vector<long long>>& input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows ? input[0].size() : 0;
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = static_cast<long>(input[r][c]);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const mpz_class a = m[rank][c];
      const mpz_class b = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] = a * m[r][k] - b * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const std::vector<std::vector<long long>>& input, const FieldSpec& field) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows ? input[0].size() : 0;
  std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = field.from_integer(input[r][c]);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && field.is_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Scalar inv = field.inv(m[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (field.is_zero(m[r][c])) continue;
      const Scalar f = field.mul(m[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) m[r][k] = field.sub(m[r][k], field.mul(f, m[rank][k]));
    }
    ++rank;
  }
  return rank;
}

// Per-degree engine with the subset tables precomputed once.
class CechEngine {
 public:
  explicit CechEngine(const GradedCechInput& input)
      : input_(input), n_(input.ring->arity()), s_(input.cech_generators.size()) {
    if (s_ > kMaxCechGenerators) {
      throw std::length_error("at most " + std::to_string(kMaxCechGenerators) + " Cech generators are supported");
    }
    if (n_ > 64) throw std::length_error("at most 64 variables are supported");
    const std::uint64_t subsets = std::uint64_t{1} << s_;
    support_.assign(subsets, 0);
    for (std::uint64_t t = 1; t < subsets; ++t) {
      const auto low = static_cast<std::size_t>(std::countr_zero(t));
      support_[t] = support_[t & (t - 1)] | input.cech_generators[low].support_mask();
    }
    levels_.assign(s_ + 1, {});
    position_.assign(subsets, 0);
    for (std::uint64_t t = 0; t < subsets; ++t) {
      auto& level = levels_[static_cast<std::size_t>(std::popcount(t))];
      position_[t] = level.size();
      level.push_back(t);
    }
  }

  std::uint64_t support(std::uint64_t t) const { return support_[t]; }

  bool piece(std::uint64_t t, std::uint64_t negative_mask, const std::vector<std::uint64_t>& killer_masks) const {
    const std::uint64_t v = support_[t];
    if ((negative_mask & ~v) != 0) return false;
    // A generator g of J kills the piece iff g_i <= b_i off the support.
    return std::none_of(killer_masks.begin(), killer_masks.end(), [&](std::uint64_t bad) { return (bad & ~v) == 0; });
  }

  void masks_for(std::span<const int> b, std::uint64_t& negative_mask, std::vector<std::uint64_t>& killers) const {
    negative_mask = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (b[i] < 0) negative_mask |= std::uint64_t{1} << i;
    }
    killers.clear();
    for (const auto& g : input_.module_generators) {
      std::uint64_t bad = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (static_cast<long long>(g[i]) > b[i]) bad |= std::uint64_t{1} << i;
      }
      killers.push_back(bad);
    }
  }

  // Chain and cohomology dimensions at one degree.
  void degree(std::span<const int> b, std::vector<long long>& chains, std::vector<long long>& cohomology) {
    std::uint64_t negative = 0;
    masks_for(b, negative, killers_);
    present_.assign(std::size_t{1} << s_, false);
    chains.assign(s_ + 1, 0);
    for (std::size_t k = 0; k <= s_; ++k) {
      for (auto t : levels_[k]) {
        if (piece(t, negative, killers_)) {
          present_[t] = true;
          ++chains[k];
        }
      }
    }
    std::vector<std::size_t> ranks(s_ + 1, 0);
    for (std::size_t k = 0; k < s_; ++k) {
      if (chains[k] == 0 || chains[k + 1] == 0) continue;
      std::vector<std::uint64_t> sources;
      std::vector<std::uint64_t> targets;
      for (auto t : levels_[k]) {
        if (present_[t]) sources.push_back(t);
      }
      for (auto t : levels_[k + 1]) {
        if (present_[t]) targets.push_back(t);
      }
      std::vector<std::vector<long long>> matrix(targets.size(), std::vector<long long>(sources.size(), 0));
      for (std::size_t c = 0; c < sources.size(); ++c) {
        const std::uint64_t t = sources[c];
        for (std::size_t j = 0; j < s_; ++j) {
          const std::uint64_t bit = std::uint64_t{1} << j;
          if (t & bit) continue;
          const std::uint64_t bigger = t | bit;
          if (!present_[bigger]) continue;
          const auto row = std::lower_bound(targets.begin(), targets.end(), bigger) - targets.begin();
          const int below = std::popcount(t & (bit - 1));
          matrix[static_cast<std::size_t>(row)][c] = (below % 2 == 0) ? 1 : -1;
        }
      }
      ranks[k] = matrix_rank(std::move(matrix), input_.ring->field());
    }
    cohomology.assign(s_ + 1, 0);
    for (std::size_t k = 0; k <= s_; ++k) {
      long long h = chains[k] - static_cast<long long>(ranks[k]);
      if (k > 0) h -= static_cast<long long>(ranks[k - 1]);
      cohomology[k] = h;
    }
  }

 private:
  const GradedCechInput& input_;
  std::size_t n_;
  std::size_t s_;
  std::vector<std::uint64_t> support_;
  std::vector<std::vector<std::uint64_t>> levels_;
  std::vector<std::size_t> position_;
  std::vector<std::uint64_t> killers_;
  std::vector<bool> present_;
};

std::optional<int> module_dimension(const GradedCechInput& input) {
  const auto gens = minimalize(input.module_generators);
  return max_independent_set(gens, input.ring->arity());
}

}  // namespace

GradedCechInput GradedCechInput::from_ideals(const Ideal& module_ideal, const Ideal& cech_ideal, DegreeBox box) {
  require_same_ring(*module_ideal.ring(), *cech_ideal.ring());
  if (box.lo.size() != module_ideal.ring()->arity() || box.hi.size() != box.lo.size()) {
    throw std::invalid_argument("degree box has wrong dimension");
  }
  return {module_ideal.ring(), minimalize(monomials_of(module_ideal, "module")), monomials_of(cech_ideal, "Cech"),
          std::move(box)};
}

int graded_piece_dimension(std::uint64_t localizing_set, std::span<const int> degree, const GradedCechInput& input) {
  const std::size_t n = input.ring->arity();
  if (degree.size() != n) throw std::invalid_argument("degree has wrong length");
  std::uint64_t v = 0;
  for (std::size_t j = 0; j < input.cech_generators.size(); ++j) {
    if (localizing_set & (std::uint64_t{1} << j)) v |= input.cech_generators[j].support_mask();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(v & (std::uint64_t{1} << i)) && degree[i] < 0) return 0;
  }
  for (const auto& g : input.module_generators) {
    bool divides = true;
    for (std::size_t i = 0; i < n && divides; ++i) {
      if (!(v & (std::uint64_t{1} << i)) && static_cast<long long>(g[i]) > degree[i]) divides = false;
    }
    if (divides) return 0;
  }
  return 1;
}

long long CechReport::dim_at(int index, std::span<const int> degree) const {
  for (const auto& e : entries) {
    if (e.index == index && std::equal(e.degree.begin(), e.degree.end(), degree.begin(), degree.end())) return e.dim;
  }
  return 0;
}

std::size_t matrix_rank(std::vector<std::vector<long long>> rows, const FieldSpec& field) {
  if (rows.empty() || rows[0].empty()) return 0;
  if (!field.is_rationals()) return rank_mod_p(rows, field);
  try {
    return rank_int64(rows);
  } catch (const Overflow&) {
    return rank_mpz(rows);
  }
}

CechReport cech_cohomology_box(const GradedCechInput& input, std::uint64_t max_cells) {
  const std::size_t n = input.ring->arity();
  if (input.box.lo.size() != n || input.box.hi.size() != n) throw std::invalid_argument("degree box has wrong dimension");
  const std::uint64_t cells = input.box.cells();
  if (cells > max_cells) {
    throw BudgetExceeded("degree box has " + std::to_string(cells) + " cells, budget is " + std::to_string(max_cells));
  }
  CechEngine engine(input);
  const std::size_t s = input.cech_generators.size();

  CechReport report;
  report.generator_count = s;
  report.module_dimension = module_dimension(input);
  report.box = input.box;
  report.cells = cells;
  report.cohomology_totals.assign(s + 1, 0);
  report.chain_totals.assign(s + 1, 0);
  if (cells == 0) return report;

  std::vector<int> b = input.box.lo;
  std::vector<long long> chains;
  std::vector<long long> cohomology;
  for (;;) {
    engine.degree(b, chains, cohomology);
    long long euler_chain = 0;
    long long euler_cohomology = 0;
    for (std::size_t k = 0; k <= s; ++k) {
      const long long sign = (k % 2 == 0) ? 1 : -1;
      euler_chain += sign * chains[k];
      euler_cohomology += sign * cohomology[k];
      report.chain_totals[k] += chains[k];
      report.cohomology_totals[k] += cohomology[k];
      if (cohomology[k] < 0) report.euler_identity = false;
      if (cohomology[k] != 0) report.entries.push_back({static_cast<int>(k), b, cohomology[k]});
    }
    if (euler_chain != euler_cohomology) report.euler_identity = false;

    std::size_t axis = 0;
    while (axis < n && b[axis] == input.box.hi[axis]) {
      b[axis] = input.box.lo[axis];
      ++axis;
    }
    if (axis == n) break;
    ++b[axis];
  }
  std::sort(report.entries.begin(), report.entries.end(), [](const CechEntry& a, const CechEntry& b2) {
    return std::tie(a.index, a.degree) < std::tie(b2.index, b2.degree);
  });

  // Indices run 0..s; the Cech complex has no terms beyond s.
  report.vanishes_above_generator_count = report.cohomology_totals.size() == s + 1;
  for (std::size_t k = 0; k <= s; ++k) {
    const bool above = !report.module_dimension || static_cast<int>(k) > *report.module_dimension;
    if (above && report.cohomology_totals[k] != 0) report.vanishes_above_module_dimension = false;
  }
  return report;
}

std::vector<Monomial> monomial_ideal_power(std::span<const Monomial> generators, unsigned n) {
  if (generators.empty()) return {};
  std::vector<Monomial> current{Monomial(generators.front().arity())};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Monomial> next;
    for (const auto& m : current) {
      for (const auto& g : generators) next.push_back(m * g);
    }
    current = minimalize(std::move(next));
  }
  return current;
}

int default_box_bound(const Ideal& module_ideal, const Ideal& cech_ideal, unsigned max_power) {
  std::uint64_t j_degree = 0;
  for (const auto& g : module_ideal.generators()) j_degree = std::max(j_degree, g.total_degree());
  std::uint64_t a_degree = 0;
  for (const auto& g : cech_ideal.generators()) a_degree = std::max(a_degree, g.total_degree());
  const auto bound = j_degree + std::max(1U, max_power) * a_degree;
  return static_cast<int>(std::max<std::uint64_t>(bound, 1));
}

TruncationReport truncated_formal_report(const Ideal& module_ideal, const Ideal& cech_ideal, unsigned first_power,
                                         unsigned last_power, const DegreeBox& box, std::uint64_t max_cells) {
  if (first_power < 1 || last_power < first_power) throw std::invalid_argument("power range must satisfy 1 <= a <= b");
  TruncationReport out;
  const auto a_gens = monomials_of(cech_ideal, "Cech");
  for (unsigned n = first_power; n <= last_power; ++n) {
    GradedCechInput input = GradedCechInput::from_ideals(module_ideal, cech_ideal, box);
    for (auto& m : monomial_ideal_power(a_gens, n)) input.module_generators.push_back(std::move(m));
    input.module_generators = minimalize(std::move(input.module_generators));
    CechReport report = cech_cohomology_box(input, max_cells);
    report.power = n;
    for (std::size_t k = 1; k < report.cohomology_totals.size(); ++k) {
      if (report.cohomology_totals[k] != 0) out.higher_vanishing_at_all_powers = false;
    }
    if (!out.reports.empty() &&
        !std::equal(out.reports.front().cohomology_totals.begin() + 1, out.reports.front().cohomology_totals.end(),
                    report.cohomology_totals.begin() + 1, report.cohomology_totals.end())) {
      out.higher_totals_stable = false;
    }
    out.reports.push_back(std::move(report));
  }
  return out;
}

}  // namespace formal
