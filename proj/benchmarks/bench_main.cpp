#include <benchmark/benchmark.h>

#include "coxkit/chains.hpp"
#include "coxkit/coxeter.hpp"
#include "coxkit/diagrammatic.hpp"
#include "coxkit/dy_module.hpp"
#include "coxkit/hopf.hpp"
#include "coxkit/nested_sets.hpp"
#include "coxkit/quantum.hpp"
#include "coxkit/realization.hpp"
#include "suites.hpp"

using namespace coxkit;

namespace {

void BM_MaximalNestedSetsPath(benchmark::State& state) {
  Diagram d = path_diagram(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_nested_sets(d, d.all(), VertexSet(), true));
}
BENCHMARK(BM_MaximalNestedSetsPath)->DenseRange(4, 8, 2);

void BM_ChainQuotient(benchmark::State& state) {
  Diagram d = path_diagram(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chain_quotient(d, d.all(), VertexSet()).count);
}
BENCHMARK(BM_ChainQuotient)->DenseRange(3, 5);

void BM_QScalarArithmetic(benchmark::State& state) {
  QScalar a = QScalar::q_integer(5), b = QScalar::q_integer(3);
  for (auto _ : state) benchmark::DoNotOptimize((a * b + a) / (b - QScalar(1)));
}
BENCHMARK(BM_QScalarArithmetic);

void BM_DiagrammaticTest(benchmark::State& state) {
  RMatrix a = integer_matrix({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(cartan_diagrammatic_test(a).status);
}
BENCHMARK(BM_DiagrammaticTest);

void BM_QuantumWeylOperatorA2(benchmark::State& state) {
  WeightModule v = build_rank2_module(integer_matrix({{2, -1}, {-1, 2}}), {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(quantum_weyl_operator(v, 0));
}
BENCHMARK(BM_QuantumWeylOperatorA2)->Unit(benchmark::kMillisecond);

void BM_BraidRelationB2(benchmark::State& state) {
  WeightModule v = build_rank2_module(integer_matrix({{2, -2}, {-1, 2}}), {0, 1});
  RMatrix a = v.data.cartan;
  MatrixBraidRep<QScalar> rho(coxeter_labels_from_gcm(a), {quantum_weyl_operator(v, 0), quantum_weyl_operator(v, 1)});
  for (auto _ : state) benchmark::DoNotOptimize(rho.check_relation(0, 1, 4).holds);
}
BENCHMARK(BM_BraidRelationB2)->Unit(benchmark::kMillisecond);

void BM_GeneratedAlgebraA2Adjoint(benchmark::State& state) {
  WeightModule v = build_rank2_module(integer_matrix({{2, -1}, {-1, 2}}), {1, 1});
  std::vector<QMatrix> s{quantum_weyl_operator(v, 0), quantum_weyl_operator(v, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(generated_algebra(v.dim(), s).dim());
}
BENCHMARK(BM_GeneratedAlgebraA2Adjoint)->Unit(benchmark::kMillisecond);

void BM_SweedlerDouble(benchmark::State& state) {
  HopfAlgebra h = sweedler_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(quasitriangular_check(quantum_double(h)).ok());
}
BENCHMARK(BM_SweedlerDouble)->Unit(benchmark::kMillisecond);

void BM_Criterion(benchmark::State& state) {
  const int id = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coxkit::cli::run_criterion(id).ok());
}
BENCHMARK(BM_Criterion)->DenseRange(1, 13)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
