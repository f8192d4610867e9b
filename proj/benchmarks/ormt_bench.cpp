// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <benchmark/benchmark.h>

#include <string>

#include "ormt/bounds.hpp"
#include "ormt/equivalence.hpp"
#include "ormt/schema.hpp"
#include "ormt/scheme.hpp"
#include "ormt/state_space.hpp"
#include "ormt/transform.hpp"

namespace {

using namespace ormt;

std::string fixture(const std::string& name) {
  return std::string(ORMT_BENCH_FIXTURE_DIR) + "/" + name;
}

DomainBounds bounds(const std::string& name) { return parse_bounds(read_file(fixture(name))); }

InstantiatedTransformation emission(const Schema& context) {
  auto t = parse_scheme(read_file(std::string(ORMT_BENCH_SCHEME_DIR) + "/ot-emission.scheme"));
  return instantiate(t, parse_parlist(read_file(fixture("olympics.parlist"))), &context);
}

void BM_ParseSchema(benchmark::State& state) {
  const std::string text = read_file(fixture("olympics-a.schema"));
  for (auto _ : state) benchmark::DoNotOptimize(parse_schema(text));
}
BENCHMARK(BM_ParseSchema);

void BM_Instantiate(benchmark::State& state) {
  Schema ctx = load_schema(fixture("olympics-b.schema"));
  for (auto _ : state) benchmark::DoNotOptimize(emission(ctx));
}
BENCHMARK(BM_Instantiate);

void BM_ApplyOptimise(benchmark::State& state) {
  Schema s = load_schema(fixture("olympics-b.schema"));
  auto inst = emission(s);
  for (auto _ : state) benchmark::DoNotOptimize(apply_transformation(inst, s, Mode::Optimise));
}
BENCHMARK(BM_ApplyOptimise);

void BM_Cleanup(benchmark::State& state) {
  Schema s = load_schema(fixture("olympics-b.schema"));
  Schema combined = combine(emission(s), s, Mode::Optimise);
  for (auto _ : state) benchmark::DoNotOptimize(cleanup(combined));
}
BENCHMARK(BM_Cleanup);

void BM_EnumerateHospital(benchmark::State& state) {
  Schema s = load_schema(fixture("hospital-a.schema"));
  auto b = bounds("hospital.bounds");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_state_space(s, b).size());
}
BENCHMARK(BM_EnumerateHospital);

void BM_EnumerateOlympics(benchmark::State& state) {
  Schema s = load_schema(fixture("olympics-b.schema"));
  auto b = bounds("olympics.bounds");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_state_space(s, b).size());
}
BENCHMARK(BM_EnumerateOlympics)->Unit(benchmark::kMillisecond);

void BM_DistributivityOlympics(benchmark::State& state) {
  auto inst = emission(load_schema(fixture("olympics-b.schema")));
  auto b = bounds("olympics.bounds");
  for (auto _ : state) benchmark::DoNotOptimize(check_update_distributivity(inst, b).holds);
}
BENCHMARK(BM_DistributivityOlympics)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
