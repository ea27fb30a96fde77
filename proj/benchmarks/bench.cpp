#include <benchmark/benchmark.h>

#include "lrpc/kem.hpp"
#include "lrpc/lrpc_code.hpp"

using namespace lrpc;

static void BM_ExtMul(benchmark::State& state) {
    const FieldContext& ctx = FieldContext::get(unsigned(state.range(0)),
                                                unsigned(state.range(1)));
    Rng rng(1);
    ExtElement a = ctx.random(rng), b = ctx.random(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = ctx.mul(a, b));
    }
}
BENCHMARK(BM_ExtMul)->Args({2, 71})->Args({2, 127})->Args({4, 30})->Args({16, 16});

static void BM_ExtInv(benchmark::State& state) {
    const FieldContext& ctx = FieldContext::get(2, 71);
    Rng rng(2);
    ExtElement a = ctx.random(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = ctx.inv(ctx.add(a, ctx.one())));
    }
}
BENCHMARK(BM_ExtInv);

static void BM_RingMul(benchmark::State& state) {
    IdealLrpc sys(*find_paramset("kem-128"));
    Rng rng(3);
    ExtVector a(sys.ring().n()), b(sys.ring().n());
    for (auto& c : a) c = sys.ctx().random(rng);
    for (auto& c : b) c = sys.ctx().random(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = sys.ring().mul(a, b));
    }
}
BENCHMARK(BM_RingMul);

static void BM_Keygen(benchmark::State& state) {
    IdealLrpc sys(*find_paramset("kem-128"));
    Rng rng(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sys.keygen(rng));
    }
}
BENCHMARK(BM_Keygen);

static void BM_Encap(benchmark::State& state) {
    IdealLrpc sys(*find_paramset("kem-128"));
    Rng rng(5);
    KeyPair kp = sys.keygen(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sys.encap(kp.pk, rng));
    }
}
BENCHMARK(BM_Encap);

static void BM_Decap(benchmark::State& state) {
    IdealLrpc sys(*find_paramset("kem-128"));
    Rng rng(6);
    KeyPair kp = sys.keygen(rng);
    auto enc = sys.encap(kp.pk, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sys.decap(kp.sk, enc.c));
    }
}
BENCHMARK(BM_Decap);

static void BM_DecodeBasic(benchmark::State& state) {
    const FieldContext& ctx = FieldContext::get(2, 24);
    Rng rng(7);
    unsigned r = 3;
    LrpcCode code = LrpcCode::random(ctx, 20, 10, 2, rng);
    CondensedSolver solver(code);
    Subspace E = Subspace::random(ctx, r, rng);
    ExtVector e = random_vector_with_support(E, 20, rng);
    ExtVector s = code.syndrome(e);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode_basic(code, solver, s, r));
    }
}
BENCHMARK(BM_DecodeBasic);

BENCHMARK_MAIN();
