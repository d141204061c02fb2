#include <benchmark/benchmark.h>

#include "slicecalc/generators.hpp"
#include "slicecalc/operators.hpp"
#include "slicecalc/polyanalytic.hpp"

using namespace slicecalc;

namespace {

Signature signature_for(int64_t arg) {
  return arg == 0 ? Signature::quaternion() : Signature::clifford(static_cast<unsigned>(arg));
}

void BM_Product(benchmark::State& state) {
  const Signature sig = signature_for(state.range(0));
  Rng rng(1);
  const AlgebraElement a = random_element(sig, rng);
  const AlgebraElement b = random_element(sig, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Product)->Arg(0)->Arg(3)->Arg(6);

void BM_ThetabarPowers(benchmark::State& state) {
  const Signature sig = signature_for(state.range(0));
  Rng rng(2);
  const PointFunction g{CircularDomain::entire(), RationalFn(random_coordinate_poly(sig, rng)),
                        std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(thetabar_powers(g, 3));
}
BENCHMARK(BM_ThetabarPowers)->Arg(0)->Arg(3);

void BM_ThetabarEval(benchmark::State& state) {
  const Signature sig = signature_for(state.range(0));
  Rng rng(3);
  const PointFunction g{CircularDomain::entire(), RationalFn(random_coordinate_poly(sig, rng)),
                        std::nullopt};
  const auto t = thetabar(g, 3);
  const auto unit = sample_units(sig, 4, 8).back();
  const auto x = slice_point(unit, {Rational(1, 3), Rational(2, 5)});
  for (auto _ : state) benchmark::DoNotOptimize(t.expr.eval(x));
}
BENCHMARK(BM_ThetabarEval)->Arg(0)->Arg(3);

void BM_DbarSlice(benchmark::State& state) {
  const Signature sig = signature_for(state.range(0));
  Rng rng(5);
  const PointFunction g{CircularDomain::entire(), RationalFn(random_coordinate_poly(sig, rng)),
                        std::nullopt};
  const auto unit = sample_units(sig, 6, 8).back();
  for (auto _ : state) benchmark::DoNotOptimize(dbar_slice(g, unit, 3));
}
BENCHMARK(BM_DbarSlice)->Arg(0)->Arg(3);

void BM_Decompose(benchmark::State& state) {
  const Signature sig = Signature::quaternion();
  Rng rng(7);
  const auto n = static_cast<unsigned>(state.range(0));
  Decomposition d;
  d.order = n;
  for (unsigned h = 0; h < n; ++h) {
    d.components.push_back({CircularDomain::entire(), random_holomorphic_stem(sig, rng, 3)});
  }
  const SliceFunction f = recompose(d);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f, n));
}
BENCHMARK(BM_Decompose)->DenseRange(1, 4);

void BM_IsSlice(benchmark::State& state) {
  const Signature sig = Signature::quaternion();
  Rng rng(8);
  const SliceFunction f{CircularDomain::entire(), random_stem(sig, rng)};
  const PointFunction p = to_point_function(f);
  const auto units = sample_units(sig, 9, 8);
  const auto points = sample_plane_points(CircularDomain::entire(), 10, 8);
  for (auto _ : state) benchmark::DoNotOptimize(is_slice(p, units, points));
}
BENCHMARK(BM_IsSlice);

}  // namespace

BENCHMARK_MAIN();
