#include <benchmark/benchmark.h>

#include "impalg/algebra.hpp"
#include "impalg/filters.hpp"
#include "impalg/relmodel.hpp"
#include "impalg/search.hpp"
#include "impalg/stone.hpp"

using namespace impalg;

namespace {

FiniteAlgebra b4() {
  return FiniteAlgebra({"0", "p", "q", "1"}, {3, 3, 3, 3, 2, 3, 2, 3, 1, 1, 3, 3, 0, 1, 2, 3});
}

FiniteAlgebra s2() {
  return FiniteAlgebra({"0", "1"}, {1, 1, 0, 1}, std::vector<int>{0, 0, 0, 1}, 1, std::nullopt, 0);
}

// The full square on `points`, as a proper structure of 2^(points^2) sets.
FiniteAlgebra powerset_full(int points) {
  return powerset_algebra(RelContext{points, full_relation(points)});
}

void BM_CheckIaSweepSize3(benchmark::State& state) {
  // all 3^9 arrow tables, with both ia and positive-ia verdicts
  std::vector<std::string> names = {"x0", "x1", "x2"};
  for (auto _ : state) {
    long long passed = 0;
    std::vector<int> table(9, 0);
    for (long long code = 0; code < 19683; ++code) {
      long long rest = code;
      for (int i = 0; i < 9; ++i) {
        table[static_cast<size_t>(i)] = static_cast<int>(rest % 3);
        rest /= 3;
      }
      FiniteAlgebra alg(names, table);
      if (check_class(alg, ClassId::ia).passed) ++passed;
    }
    benchmark::DoNotOptimize(passed);
  }
}
BENCHMARK(BM_CheckIaSweepSize3);

void BM_CheckIsgPowerset(benchmark::State& state) {
  const FiniteAlgebra ps = powerset_full(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = check_class(ps, ClassId::isg);
    benchmark::DoNotOptimize(rep.passed);
  }
  state.counters["carrier"] = static_cast<double>(ps.size());
}
BENCHMARK(BM_CheckIsgPowerset)->Arg(2)->Arg(3);

void BM_EnumerateFiltersB4(benchmark::State& state) {
  const FiniteAlgebra alg = b4();
  for (auto _ : state) {
    auto filters = enumerate_filters(alg, FilterKind::prime);
    benchmark::DoNotOptimize(filters.size());
  }
}
BENCHMARK(BM_EnumerateFiltersB4);

void BM_StoneRepresentB4(benchmark::State& state) {
  const FiniteAlgebra alg = b4();
  for (auto _ : state) {
    auto sr = stone_represent(alg);
    benchmark::DoNotOptimize(sr.base.size());
  }
}
BENCHMARK(BM_StoneRepresentB4);

void BM_SearchS2(benchmark::State& state) {
  const FiniteAlgebra alg = s2();
  SearchConfig cfg;
  cfg.max_base = 2;
  cfg.profile = Profile{true, true, false, false};
  for (auto _ : state) {
    auto out = search_representation(alg, cfg);
    benchmark::DoNotOptimize(out.kind);
  }
}
BENCHMARK(BM_SearchS2);

void BM_TransitiveTops(benchmark::State& state) {
  const int base = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto tops = detail::tops_incremental(base, true);
    benchmark::DoNotOptimize(tops.size());
  }
}
BENCHMARK(BM_TransitiveTops)->Arg(3)->Arg(4);

void BM_WeakeningArrowSweep(benchmark::State& state) {
  // antichain on 3 points: every relation is a weakening relation
  const Poset p(3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  std::vector<PairSet> rels;
  for (uint64_t mask = 0; mask < 512; ++mask) {
    PairSet r;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        if (mask & (uint64_t{1} << (x * 3 + y))) r.push_back({x, y});
    rels.push_back(std::move(r));
  }
  size_t i = 0;
  for (auto _ : state) {
    const PairSet& r = rels[i % rels.size()];
    const PairSet& s = rels[(i * 31 + 7) % rels.size()];
    auto out = weakening_arrow(p, r, s);
    benchmark::DoNotOptimize(out.size());
    ++i;
  }
}
BENCHMARK(BM_WeakeningArrowSweep);

}  // namespace

BENCHMARK_MAIN();
