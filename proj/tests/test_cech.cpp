#include <doctest.h>

#include "fdim/cech.hpp"
#include "fdim/error.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

CechReport run(const RingPtr& r, std::initializer_list<const char*> module, std::initializer_list<const char*> cech,
               int bound) {
  return cech_cohomology_box(GradedCechInput::from_ideals(I(r, module), I(r, cech), DegreeBox::cube(r->arity(), bound)));
}

void check_global_properties(const CechReport& rep) {
  CHECK(rep.euler_identity);
  CHECK(rep.vanishes_above_generator_count);
  CHECK(rep.vanishes_above_module_dimension);
}

}  // namespace

TEST_CASE("local cohomology of k[x] at (x)") {
  const auto r = ring_of(1);
  const auto rep = run(r, {}, {"x"}, 5);
  check_global_properties(rep);
  CHECK(rep.cohomology_totals == std::vector<long long>{0, 5});
  for (int b = -5; b <= 5; ++b) CHECK(rep.dim_at(1, std::vector<int>{b}) == (b <= -1 ? 1 : 0));
}

TEST_CASE("local cohomology of k[x,y] at (x,y)") {
  const auto r = ring_of(2);
  const int B = 3;
  const auto rep = run(r, {}, {"x", "y"}, B);
  check_global_properties(rep);
  CHECK(rep.cohomology_totals == std::vector<long long>{0, 0, B * B});
  CHECK(rep.dim_at(2, std::vector<int>{-1, -1}) == 1);
  CHECK(rep.dim_at(2, std::vector<int>{0, -1}) == 0);
}

TEST_CASE("local cohomology of k[x,y,z] at (xy, xz)") {
  const auto r = ring_of(3);
  for (int B : {2, 3, 4}) {
    const auto rep = run(r, {}, {"x*y", "x*z"}, B);
    check_global_properties(rep);
    // Mayer-Vietoris: H^1 = H^1_(x), H^2 = H^2_(y,z) + H^3_m
    CHECK(rep.cohomology_totals[0] == 0);
    CHECK(rep.cohomology_totals[1] == B * (B + 1) * (B + 1));
    CHECK(rep.cohomology_totals[2] == B * B * (B + 1) + B * B * B);
    CHECK(rep.dim_at(2, std::vector<int>{-1, -1, -1}) == 1);
  }
}

TEST_CASE("torsion of A/a^2 counts its standard monomials") {
  const auto r = ring_of(3);
  const int B = 3;
  const auto square = I(r, {"x^2", "x*y", "y^2"});
  const auto rep = cech_cohomology_box(GradedCechInput::from_ideals(square, I(r, {"x", "y"}), DegreeBox::cube(3, B)));
  long long standard = 0;
  for (int a = 0; a <= B; ++a) {
    for (int b = 0; b <= B; ++b) {
      for (int c = 0; c <= B; ++c) {
        if (a + b < 2) ++standard;
      }
    }
  }
  CHECK(rep.cohomology_totals[0] == standard);
  CHECK(rep.cohomology_totals[1] == 0);
  CHECK(rep.cohomology_totals[2] == 0);
}

TEST_CASE("truncations of k[x,y] at (x)") {
  const auto r = ring_of(2);
  const auto tr = truncated_formal_report(Ideal(r), I(r, {"x"}), 1, 4, DegreeBox::cube(2, 4));
  CHECK(tr.reports.size() == 4);
  CHECK(tr.higher_vanishing_at_all_powers);
  CHECK(tr.higher_totals_stable);
  CHECK(tr.label == "finite evidence only");
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(tr.reports[n - 1].power == n);
    CHECK(tr.reports[n - 1].cohomology_totals[0] == static_cast<long long>(n) * 5);
  }
}

TEST_CASE("truncations of k[x,y,z]/(xz) at (x)") {
  const auto r = ring_of(3);
  const auto tr = truncated_formal_report(I(r, {"x*z"}), I(r, {"x"}), 1, 3, DegreeBox::cube(3, 3));
  CHECK(tr.higher_vanishing_at_all_powers);
  for (const auto& rep : tr.reports) check_global_properties(rep);
}

TEST_CASE("redundant generators do not change cohomology") {
  const auto r = ring_of(3);
  const auto lean = run(r, {"x*z"}, {"x*y", "z"}, 3);
  const auto padded = run(r, {"x*z"}, {"x*y", "z", "x*y*z", "z^2"}, 3);
  CHECK(padded.generator_count == 4);
  check_global_properties(padded);
  CHECK(lean.entries.size() == padded.entries.size());
  for (const auto& e : lean.entries) CHECK(padded.dim_at(e.index, e.degree) == e.dim);
}

TEST_CASE("enlarging the box keeps interior degrees") {
  const auto r = ring_of(3);
  const auto small = run(r, {"y*z"}, {"x", "y"}, 2);
  const auto large = run(r, {"y*z"}, {"x", "y"}, 4);
  for (const auto& e : small.entries) CHECK(large.dim_at(e.index, e.degree) == e.dim);
  for (const auto& e : large.entries) {
    if (small.box.contains(e.degree)) CHECK(small.dim_at(e.index, e.degree) == e.dim);
  }
}

TEST_CASE("graded piece dimensions") {
  const auto r = ring_of(2);
  const auto input = GradedCechInput::from_ideals(I(r, {"x*y"}), I(r, {"x", "y"}), DegreeBox::cube(2, 2));
  CHECK(graded_piece_dimension(0, std::vector<int>{1, 0}, input) == 1);
  CHECK(graded_piece_dimension(0, std::vector<int>{1, 1}, input) == 0);
  CHECK(graded_piece_dimension(0, std::vector<int>{-1, 0}, input) == 0);
  CHECK(graded_piece_dimension(1, std::vector<int>{-3, 0}, input) == 1);
  CHECK(graded_piece_dimension(1, std::vector<int>{0, 1}, input) == 0);
  CHECK(graded_piece_dimension(3, std::vector<int>{0, 0}, input) == 0);
}

TEST_CASE("input validation and budget") {
  const auto r = ring_of(2);
  CHECK_THROWS_AS(GradedCechInput::from_ideals(I(r, {"x + y"}), I(r, {"x"}), DegreeBox::cube(2, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(cech_cohomology_box(GradedCechInput::from_ideals(Ideal(r), I(r, {"x"}), DegreeBox::cube(2, 10)), 50),
                  BudgetExceeded);
  CHECK(monomial_ideal_power(std::vector<Monomial>{Monomial({1, 0}), Monomial({0, 1})}, 2).size() == 3);
  CHECK(default_box_bound(I(r, {"x*y"}), I(r, {"x"}), 3) == 5);
}

TEST_CASE("matrix rank") {
  CHECK(matrix_rank({{1, 2}, {2, 4}}, FieldSpec::rationals()) == 1);
  CHECK(matrix_rank({{1, 2}, {3, 4}}, FieldSpec::rationals()) == 2);
  CHECK(matrix_rank({{1, 2}, {3, 6}}, FieldSpec::prime(7)) == 1);
  CHECK(matrix_rank({{2, 1}, {1, 4}}, FieldSpec::prime(7)) == 1);
  CHECK(matrix_rank({}, FieldSpec::rationals()) == 0);
  CHECK(matrix_rank({{4611686018427387904LL, 3}, {4611686018427387903LL, 5}}, FieldSpec::rationals()) == 2);
}
