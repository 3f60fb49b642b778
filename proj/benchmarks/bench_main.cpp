#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "propcat/envelope.hpp"
#include "propcat/slcc.hpp"

namespace {

using namespace propcat;

void bm_pushout(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<std::size_t> to_d(n), to_e(n);
    for (std::size_t i = 0; i < n; ++i) {
        to_d[i] = (i % n) + 1;
        to_e[i] = ((i * 7 + 3) % n) + 1;
    }
    FinMap f(n, n, to_d), g(n, n, to_e);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pushout_span(f, g));
    }
}
BENCHMARK(bm_pushout)->Arg(8)->Arg(64)->Arg(512);

void bm_cospan_compose(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<std::size_t> fold(n);
    for (std::size_t i = 0; i < n; ++i) fold[i] = i / 2 + 1;
    Cospan a = normalize(FinMap::identity(n), FinMap(n, n, fold));
    Cospan b = normalize(FinMap(n, n, fold), FinMap::identity(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(a, b));
    }
}
BENCHMARK(bm_cospan_compose)->Arg(8)->Arg(64)->Arg(512);

void bm_envelope_compose(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Envelope env(terminal_properad(1));
    const Word w(n, 1);
    // A chain of merge-then-split layers keeps every vertex busy.
    std::vector<std::size_t> fold(n);
    for (std::size_t i = 0; i < n; ++i) fold[i] = i / 2 + 1;
    const std::size_t k = n / 2 + (n % 2);
    std::vector<Op> ops;
    for (std::size_t q = 1; q <= k; ++q) {
        const std::size_t width = (q * 2 <= n) ? 2 : 1;
        ops.push_back(Op{Word(width, 1), Word(width, 1), 0});
    }
    EnvMorphism down = env.from_raw(w, w, FinMap(n, k, fold), FinMap(n, k, fold), ops);
    for (auto _ : state) {
        benchmark::DoNotOptimize(env.compose(down, down));
    }
}
BENCHMARK(bm_envelope_compose)->Arg(4)->Arg(16)->Arg(64);

void bm_hom_enum(benchmark::State& state) {
    Envelope env(terminal_properad(2));
    const Word a{1, 2}, b{2, 1};
    const std::size_t bound = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(env.hom_enum(a, b, bound));
    }
}
BENCHMARK(bm_hom_enum)->Arg(1)->Arg(2)->Arg(3);

void bm_roundtrip(benchmark::State& state) {
    auto p = terminal_properad(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(roundtrip_check(p, 2));
    }
}
BENCHMARK(bm_roundtrip);

}  // namespace

BENCHMARK_MAIN();
