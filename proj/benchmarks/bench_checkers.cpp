// Throughput of the exhaustive checkers and the tensor kernels they sit on.
// All instances are built through the public construction API.

#include <benchmark/benchmark.h>

#include <ternalg/io.hpp>

using namespace ternalg;

namespace {

Scalar q(long long p, long long d = 1) { return Scalar::of(p, d); }

HomLie homlie3() {
  BiTensor b(3);
  b.at(0, 1, 1) = q(1);
  b.at(1, 0, 1) = q(-1);
  return {3, std::move(b), LinearMap::identity(3)};
}

ThreeHomLDend derived_d3() {
  LinearMap s = LinearMap::diagonal({q(1), q(1), q(-1)});
  return trace_rb_ldend(homlie3(), {q(0), q(0), q(1)}, s, s);
}

ThreeHomLie dim3lie() {
  TriTensor t(3);
  int perms[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                     {1, 0, 2, -1}, {0, 2, 1, -1}, {2, 1, 0, -1}};
  for (auto& p : perms) t.at(p[0], p[1], p[2], 0) = q(p[3]);
  return {3, std::move(t), LinearMap::identity(3)};
}

/// dim-6 realification of the complexified derived instance.
ThreeHomLDend r6() {
  ThreeHomLDend base = derived_d3();
  auto realify = [](const TriTensor& t) {
    TriTensor out(6);
    for (const auto& e : t.nonzero())
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c) {
            int s = a + b + c;
            Scalar sign = (s % 4 < 2) ? Scalar(1) : Scalar(-1);
            out.at(2 * e.i + a, 2 * e.j + b, 2 * e.k + c, 2 * e.l + (s % 2)) += sign * (*e.value);
          }
    return out;
  };
  return {6, realify(base.nw), realify(base.ne), LinearMap::identity(6)};
}

void BM_Check3HomLie_dim3(benchmark::State& state) {
  ThreeHomLie a = dim3lie();
  for (auto _ : state) benchmark::DoNotOptimize(check_3homlie(a).pass());
}

void BM_Check3HomLDend_dim3(benchmark::State& state) {
  ThreeHomLDend a = derived_d3();
  for (auto _ : state) benchmark::DoNotOptimize(check_3homldend(a).pass());
}

void BM_Check3HomLDend_dim6(benchmark::State& state) {
  ThreeHomLDend a = r6();
  for (auto _ : state) benchmark::DoNotOptimize(check_3homldend(a).pass());
}

void BM_CheckNijenhuis_dim3(benchmark::State& state) {
  ThreeHomLDend a = derived_d3();
  LinearMap s = LinearMap::diagonal({q(1), q(1), q(-1)});
  for (auto _ : state) benchmark::DoNotOptimize(check_nijenhuis(a, s).pass());
}

void BM_Deformation_order2_dim3(benchmark::State& state) {
  ThreeHomLDend a = derived_d3();
  LinearMap s = LinearMap::diagonal({q(1), q(1), q(-1)});
  NijenhuisDeformation nd = nijenhuis_deform(a, s);
  for (auto _ : state) benchmark::DoNotOptimize(check_deformation(nd.family).pass());
}

void BM_TriTwist_dim6(benchmark::State& state) {
  ThreeHomLDend a = r6();
  LinearMap j(6);
  for (int i = 0; i < 3; ++i) {
    j.at(2 * i, 2 * i + 1) = q(-1);
    j.at(2 * i + 1, 2 * i) = q(1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(tri_twist(a.nw, j, {1, 2, 3}));
}

void BM_Invert_dim8(benchmark::State& state) {
  LinearMap m = LinearMap::identity(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (j > i) m.at(i, j) = Scalar::of((i * 7 + j * 3) % 5 - 2, (i + j) % 3 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(m.inverse());
}

}  // namespace

BENCHMARK(BM_Check3HomLie_dim3);
BENCHMARK(BM_Check3HomLDend_dim3);
BENCHMARK(BM_Check3HomLDend_dim6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckNijenhuis_dim3);
BENCHMARK(BM_Deformation_order2_dim3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TriTwist_dim6);
BENCHMARK(BM_Invert_dim8);

BENCHMARK_MAIN();
