#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "finring/classify.hpp"
#include "finring/parse.hpp"
#include "finring/structure.hpp"

namespace {

const finring::BuiltRing& cached_ring(const std::string& expr) {
  static std::map<std::string, finring::BuiltRing> rings;
  auto it = rings.find(expr);
  if (it == rings.end()) it = rings.emplace(expr, finring::build_from_expr(expr)).first;
  return it->second;
}

void BM_build(benchmark::State& state, const char* expr) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(finring::build_from_expr(expr));
  }
}
BENCHMARK_CAPTURE(BM_build, z64, "Z64");
BENCHMARK_CAPTURE(BM_build, m2z2, "M2(Z2)");
BENCHMARK_CAPTURE(BM_build, k_z4_2, "K(Z4,2)");
BENCHMARK_CAPTURE(BM_build, gr_z2_s3, "GR(Z2,S3)");

void BM_structural_sets(benchmark::State& state, const char* expr) {
  const auto& built = cached_ring(expr);
  for (auto _ : state) {
    benchmark::DoNotOptimize(finring::compute_structural_sets_fresh(*built.ring));
  }
}
BENCHMARK_CAPTURE(BM_structural_sets, z64, "Z64");
BENCHMARK_CAPTURE(BM_structural_sets, t2z4, "T2(Z4)");
BENCHMARK_CAPTURE(BM_structural_sets, k_z4_2, "K(Z4,2)");

void BM_jacobson_two_sided(benchmark::State& state, const char* expr) {
  const auto& built = cached_ring(expr);
  for (auto _ : state) {
    benchmark::DoNotOptimize(finring::jacobson_radical_two_sided(*built.ring));
  }
}
BENCHMARK_CAPTURE(BM_jacobson_two_sided, k_z4_2, "K(Z4,2)");

void BM_strongly_jsharp_flags(benchmark::State& state, const char* expr) {
  const auto& built = cached_ring(expr);
  auto sets = finring::compute_structural_sets(*built.ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(finring::elementwise_clean_kind(
        *built.ring, *sets, finring::CleanKind::strongly_jsharp_clean));
  }
}
BENCHMARK_CAPTURE(BM_strongly_jsharp_flags, t2z4, "T2(Z4)");
BENCHMARK_CAPTURE(BM_strongly_jsharp_flags, k_z4_2, "K(Z4,2)");

}  // namespace

BENCHMARK_MAIN();
