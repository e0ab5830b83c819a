#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "crossmod/bar.hpp"
#include "crossmod/catalog.hpp"
#include "crossmod/realize.hpp"

using namespace crossmod;

namespace {

std::vector<std::pair<Elem, Elem>> random_pairs(std::size_t order, std::size_t count) {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(order - 1));
  std::vector<std::pair<Elem, Elem>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(pick(rng), pick(rng));
  return out;
}

void BM_validate_crossed_module(benchmark::State& state) {
  NormalMap nm = catalog_entry("incl-A3-S3").nm;
  for (auto _ : state) benchmark::DoNotOptimize(validate(nm).ok());
}
BENCHMARK(BM_validate_crossed_module);

void BM_tuple_level_mul(benchmark::State& state) {
  Group s3 = catalog_entry("identity-S3").nm.source;
  Group level = bar_nn_level(s3, static_cast<std::size_t>(state.range(0)));
  auto pairs = random_pairs(level.order(), 512);
  for (auto _ : state)
    for (auto [x, y] : pairs) benchmark::DoNotOptimize(level.mul(x, y));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_tuple_level_mul)->Arg(1)->Arg(2)->Arg(3);

void BM_quotient_level_mul(benchmark::State& state) {
  NormalMap nm = catalog_entry("incl-A3-S3").nm;
  Group level = bar_gn_level(nm, static_cast<std::size_t>(state.range(0)));
  auto pairs = random_pairs(level.order(), 512);
  for (auto _ : state)
    for (auto [x, y] : pairs) benchmark::DoNotOptimize(level.mul(x, y));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_quotient_level_mul)->Arg(1)->Arg(2)->Arg(3);

void BM_ambient_build(benchmark::State& state) {
  NormalMap nm = catalog_entry("mod2").nm;
  for (auto _ : state) benchmark::DoNotOptimize(ambient_simplicial(nm, 3).level.size());
}
BENCHMARK(BM_ambient_build);

void BM_simplicial_identity_suite(benchmark::State& state) {
  NormalMap nm = catalog_entry("mod2").nm;
  SimplicialGroup ambient = ambient_simplicial(nm, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_simplicial_identities(ambient).ok());
}
BENCHMARK(BM_simplicial_identity_suite);

void BM_moore_pi1(benchmark::State& state) {
  SimplicialGroup ambient = ambient_simplicial(catalog_entry("identity-S3").nm, 3);
  for (auto _ : state) benchmark::DoNotOptimize(moore_pi_n(ambient, 1).order());
}
BENCHMARK(BM_moore_pi1);

void BM_realize_depth3(benchmark::State& state) {
  NormalMap nm = catalog_entry("mod2").nm;
  for (auto _ : state) benchmark::DoNotOptimize(realize(nm, 3).ok());
}
BENCHMARK(BM_realize_depth3);

void BM_roundtrip_depth3(benchmark::State& state) {
  NormalMap nm = catalog_entry("incl-A3-S3").nm;
  for (auto _ : state) {
    Realization r = realize(nm, 3);
    benchmark::DoNotOptimize(verify_roundtrip(nm, r).ok());
  }
}
BENCHMARK(BM_roundtrip_depth3);

}  // namespace

BENCHMARK_MAIN();
