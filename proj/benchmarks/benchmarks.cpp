// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks over the exact-arithmetic kernels. Inputs are seeded, so
// runs are comparable across machines and revisions.

#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "orbit/verification.hpp"

namespace {

using namespace orbit;

FiniteSequence seeded_sequence(std::uint64_t seed, std::int64_t len) {
  Rng rng(seed);
  std::vector<Rat> values;
  values.reserve(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) {
    Rat v = rng.rat(1000, 64);
    if (rng.below(2) == 0) v = -v;
    values.push_back(std::move(v));
  }
  return FiniteSequence(std::move(values));
}

std::pair<FiniteSequence, FiniteSequence> seeded_pair(std::uint64_t seed,
                                                      std::int64_t len) {
  DominatedPairGenerator gen(seed, len, 500);
  return gen.next();
}

void BM_rearrange(benchmark::State& state) {
  const FiniteSequence x = seeded_sequence(11, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rearrange(x));
}
BENCHMARK(BM_rearrange)->Arg(64)->Arg(512)->Arg(4096);

void BM_k_envelope(benchmark::State& state) {
  const FiniteSequence x = seeded_sequence(12, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k_functional(x));
}
BENCHMARK(BM_k_envelope)->Arg(64)->Arg(512)->Arg(4096);

void BM_e_star(benchmark::State& state) {
  const FiniteSequence x = seeded_sequence(13, state.range(0));
  const Rat t = make_rat(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(e_star(x, t));
}
BENCHMARK(BM_e_star)->Arg(64)->Arg(512)->Arg(4096);

void BM_profile_certificate(benchmark::State& state) {
  const auto [a, b] = seeded_pair(14, state.range(0));
  const SortedProfile pa = rearrange(a);
  const SortedProfile pb = rearrange(b);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_prop2_operator(pa, pb));
}
BENCHMARK(BM_profile_certificate)->Arg(64)->Arg(256)->Arg(1024);

void BM_orbit_constant_bracket(benchmark::State& state) {
  const auto [a, b] = seeded_pair(15, state.range(0));
  const Rat precision = make_rat(1, 64);
  for (auto _ : state)
    benchmark::DoNotOptimize(orbit_constant(a, b, precision));
}
BENCHMARK(BM_orbit_constant_bracket)->Arg(64)->Arg(256);

void BM_orbit_pipeline(benchmark::State& state) {
  const auto [a, b] = seeded_pair(16, state.range(0));
  for (auto _ : state) {
    OperatorCertificate cert = build_orbit_operator(a, b, Rat(1));
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_orbit_pipeline)->Arg(64)->Arg(256);

void BM_verify_certificate(benchmark::State& state) {
  const auto [a, b] = seeded_pair(17, state.range(0));
  const OperatorCertificate cert = build_orbit_operator(a, b, Rat(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_certificate(cert, a, b));
}
BENCHMARK(BM_verify_certificate)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
