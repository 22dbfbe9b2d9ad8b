#include <benchmark/benchmark.h>

#include "qconn/connectivity.hpp"
#include "qconn/enumerate.hpp"
#include "qconn/extremal.hpp"
#include "qconn/graph6.hpp"
#include "qconn/spectral.hpp"

namespace {

using namespace qconn;

void bm_q_index_extremal(benchmark::State& state) {
  const auto g = build_A({static_cast<int>(state.range(0)), 3, 3}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(q_index(g).lower);
}
BENCHMARK(bm_q_index_extremal)->Arg(103)->Arg(185)->Unit(benchmark::kMillisecond);

void bm_dense_oracle(benchmark::State& state) {
  const auto g = build_A({103, 3, 3}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(q_index_dense_oracle(g));
}
BENCHMARK(bm_dense_oracle)->Unit(benchmark::kMillisecond);

void bm_vertex_connectivity(benchmark::State& state) {
  const auto g = build_A({static_cast<int>(state.range(0)), 3, 3}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g).kappa);
}
BENCHMARK(bm_vertex_connectivity)->Arg(40)->Arg(103)->Unit(benchmark::kMillisecond);

void bm_is_k_connected(benchmark::State& state) {
  const auto g = complete(103);
  for (auto _ : state) benchmark::DoNotOptimize(is_k_connected(g, 3).k_connected);
}
BENCHMARK(bm_is_k_connected)->Unit(benchmark::kMillisecond);

void bm_enumerate_order_6(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t edges = 0;
    enumerate_labeled_graphs({6, std::nullopt}, {}, [&](std::uint64_t, const Graph& g) { edges += g.edge_count(); });
    benchmark::DoNotOptimize(edges);
  }
}
BENCHMARK(bm_enumerate_order_6)->Unit(benchmark::kMillisecond);

void bm_graph6_round_trip(benchmark::State& state) {
  const auto g = build_A({103, 3, 3}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(write_graph6(g)).order());
}
BENCHMARK(bm_graph6_round_trip);

}  // namespace

BENCHMARK_MAIN();
