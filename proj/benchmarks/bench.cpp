#include <benchmark/benchmark.h>

#include "fdim/cech.hpp"
#include "fdim/corpus.hpp"
#include "fdim/decompose.hpp"
#include "fdim/parse.hpp"

using namespace formal;

namespace {

Ideal ideal_of(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (const char* g : gens) out.push_back(parse_polynomial(g, r));
  return Ideal(r, out);
}

void BM_Cyclic4(benchmark::State& state) {
  const auto r = PolyRing::make({"a", "b", "c", "d"},
                                state.range(0) ? FieldSpec::prime(32003) : FieldSpec::rationals());
  const auto gens = ideal_of(r, {"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b",
                                 "a*b*c*d - 1"})
                        .generators();
  for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner_basis(gens, r));
}
BENCHMARK(BM_Cyclic4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ToricElimination(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(toric_presentation({{4, 0}, {3, 1}, {1, 3}, {0, 4}}, FieldSpec::rationals()));
  }
}
BENCHMARK(BM_ToricElimination)->Unit(benchmark::kMillisecond);

void BM_MinimalPrimesSplitting(benchmark::State& state) {
  const auto r = PolyRing::make({"x", "y", "z", "u", "v"}, FieldSpec::rationals());
  const auto ideal = ideal_of(r, {"x*y*u", "y*z*v", "x*z*u*v", "x*v - y*u"});
  DecomposeOptions opts;
  opts.monomial_cover_path = false;
  for (auto _ : state) benchmark::DoNotOptimize(minimal_primes(ideal, opts));
}
BENCHMARK(BM_MinimalPrimesSplitting)->Unit(benchmark::kMillisecond);

void BM_CechBox(benchmark::State& state) {
  const auto r = PolyRing::make({"x", "y", "z"}, FieldSpec::rationals());
  const auto input = GradedCechInput::from_ideals(Ideal(r), ideal_of(r, {"x*y", "x*z", "y*z"}),
                                                  DegreeBox::cube(3, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cech_cohomology_box(input));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(input.box.cells()));
}
BENCHMARK(BM_CechBox)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Corpus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus());
}
BENCHMARK(BM_Corpus)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
