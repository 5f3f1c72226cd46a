#include <benchmark/benchmark.h>

#include <random>

#include "drac/bell.hpp"
#include "drac/classical.hpp"
#include "drac/earac.hpp"
#include "drac/eig.hpp"
#include "drac/reference.hpp"
#include "drac/seesaw.hpp"

using namespace drac;

namespace {

ComplexMatrix random_hermitian4(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(4, 4);
  for (int i = 0; i < 4; ++i) {
    m(i, i) = g(rng);
    for (int j = i + 1; j < 4; ++j) {
      m(i, j) = cx(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

void BM_HermEig4(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ComplexMatrix m = random_hermitian4(rng);
  for (auto _ : state) {
    const EigResult e = herm_eig(m);
    benchmark::DoNotOptimize(e.values[0]);
  }
}
BENCHMARK(BM_HermEig4);

void BM_ProjectCptp(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const ComplexMatrix m = random_hermitian4(rng);
  for (auto _ : state) {
    const ChoiMatrix j = project_to_cptp(m);
    benchmark::DoNotOptimize(j.j(0, 0));
  }
}
BENCHMARK(BM_ProjectCptp);

void BM_ClassicalOptimum(benchmark::State& state) {
  const TaskSpec t = table1_task(1);
  for (auto _ : state) {
    const ClassicalOptimum opt = classical_optimum(t);
    benchmark::DoNotOptimize(opt.num);
  }
}
BENCHMARK(BM_ClassicalOptimum);

void BM_EvalQrac(benchmark::State& state) {
  const TaskSpec t = table1_task(5);
  const QracStrategy s = table1_qrac_strategy(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_qrac_strategy(s, t));
  }
}
BENCHMARK(BM_EvalQrac);

void BM_EvalEarac(benchmark::State& state) {
  const TaskSpec t = table1_task(1);
  const EaracStrategy s = table1_earac_strategy(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_earac(s, t));
  }
}
BENCHMARK(BM_EvalEarac);

void BM_NsblLp(benchmark::State& state) {
  const BellFunctional f{0, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsbl_max(f, Partition::BC_A).value);
  }
}
BENCHMARK(BM_NsblLp);

void BM_SeesawRestart(benchmark::State& state) {
  const TaskSpec t = table1_task(5);
  SeesawOptions opt;
  opt.restarts = 1;
  for (auto _ : state) {
    opt.seed = static_cast<std::uint64_t>(state.iterations());
    benchmark::DoNotOptimize(run_seesaw(t, opt).value);
  }
}
BENCHMARK(BM_SeesawRestart)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
