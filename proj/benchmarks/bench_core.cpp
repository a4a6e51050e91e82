#include <benchmark/benchmark.h>

#include "cli/explorer.hpp"
#include "cli/runner.hpp"
#include "tensorcoh/checks.hpp"
#include "tensorcoh/poly_parser.hpp"

using namespace tensorcoh;

namespace {

AmbientPtr ambient(int n) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return std::make_shared<AmbientRing>(vars, std::vector<int>{}, PrimeField());
}

RingPtr ring_of(const AmbientPtr& S, const std::vector<std::string>& rels, bool domain = false) {
  std::vector<Polynomial> I;
  for (const auto& r : rels) I.push_back(parse_polynomial(S, r));
  Certificates c;
  c.domain = domain;
  return I.empty() ? QuotientRing::polynomial_ring(S) : QuotientRing::make(S, I, c);
}

// cyclic-4 style homogenised system
void BM_Buchberger(benchmark::State& state) {
  auto S = std::make_shared<AmbientRing>(std::vector<std::string>{"a", "b", "c", "d", "h"}, std::vector<int>{},
                                         PrimeField());
  std::vector<Polynomial> gens;
  for (const char* f : {"a+b+c+d", "a*b+b*c+c*d+d*a", "a*b*c+b*c*d+c*d*a+d*a*b", "a*b*c*d-h^4"})
    gens.push_back(parse_polynomial(S, f));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_Buchberger)->Unit(benchmark::kMillisecond);

void BM_KoszulResolution(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RingPtr R = ring_of(ambient(n), {});
    ModulePtr k = cyclic_module(Ideal::maximal(R));
    benchmark::DoNotOptimize(betti(k, false, n + 1).total(n));
  }
}
BENCHMARK(BM_KoszulResolution)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_H0MaxTensor(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RingPtr R = ring_of(ambient(n), {});
    ModulePtr m = ideal_module(Ideal::maximal(R));
    benchmark::DoNotOptimize(h(tensor(m, m), 0));
  }
}
BENCHMARK(BM_H0MaxTensor)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SyzygyDualTable(benchmark::State& state) {
  for (auto _ : state) {
    RingPtr R = ring_of(ambient(4), {});
    ModulePtr M = syzygy_module(cyclic_module(Ideal::maximal(R)), 3);
    ModulePtr X = tensor(M, dual(M));
    for (int i = 0; i < 4; ++i) benchmark::DoNotOptimize(h(X, i));
  }
}
BENCHMARK(BM_SyzygyDualTable)->Unit(benchmark::kMillisecond);

void BM_VeroneseCanonical(benchmark::State& state) {
  for (auto _ : state) {
    auto S = std::make_shared<AmbientRing>(std::vector<std::string>{"a", "b", "c", "d"}, std::vector<int>{},
                                           PrimeField());
    RingPtr V = ring_of(S, {"a*c-b^2", "a*d-b*c", "b*d-c^2"}, true);
    ModulePtr w = canonical(V);
    ModulePtr X = tensor(w, dual(w));
    for (int i = 0; i < 3; ++i) benchmark::DoNotOptimize(h(X, i));
  }
}
BENCHMARK(BM_VeroneseCanonical)->Unit(benchmark::kMillisecond);

void BM_Hdeg(benchmark::State& state) {
  for (auto _ : state) {
    RingPtr R = ring_of(ambient(3), {});
    Ideal I{R, {}};
    for (const char* f : {"x1^2*x2", "x1*x2*x3", "x1^3"}) I.gens.push_back(parse_polynomial(R->ambient(), f));
    benchmark::DoNotOptimize(hdeg(cyclic_module(I)));
  }
}
BENCHMARK(BM_Hdeg)->Unit(benchmark::kMillisecond);

void BM_Explore(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cli::explore("lemma-0", static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_Explore)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Corpus(benchmark::State& state) {
  cli::Options o;
  o.timing = false;
  auto files = cli::corpus_files(TENSORCOH_CORPUS_DIR);
  for (auto _ : state) benchmark::DoNotOptimize(cli::run_all(files, o, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Corpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
