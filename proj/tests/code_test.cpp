#include <doctest.h>

#include "lrpc/lrpc_code.hpp"

using namespace lrpc;

TEST_CASE("coordinate solver reconstructs vectors and rejects outsiders") {
    const FieldContext& ctx = FieldContext::get(2, 13);
    Rng rng(3);
    Subspace F = Subspace::random(ctx, 4, rng);
    CoordinateSolver cs(ctx, F.basis());
    REQUIRE(cs.independent());
    std::vector<uint8_t> c(4);
    for (int t = 0; t < 30; ++t) {
        ExtElement v = F.random_element(rng);
        REQUIRE(cs.coords(v, c.data()));
        ExtElement back = ctx.zero();
        for (unsigned i = 0; i < 4; ++i)
            if (c[i]) ctx.add_in_place(back, ctx.scalar_mul(c[i], F.basis()[i]));
        CHECK(back == v);
    }
    // an element outside the span must be rejected
    int rejected = 0;
    for (int t = 0; t < 20; ++t)
        if (!cs.coords(ctx.random(rng), c.data())) ++rejected;
    CHECK(rejected > 10);

    // dependent family
    ExtVector dep = F.basis();
    dep.push_back(ctx.add(dep[0], dep[1]));
    CHECK_FALSE(CoordinateSolver(ctx, dep).independent());
}

TEST_CASE("random codes have homogeneous full-rank parity checks") {
    const FieldContext& ctx = FieldContext::get(2, 24);
    Rng rng(8);
    for (int t = 0; t < 5; ++t) {
        LrpcCode code = LrpcCode::random(ctx, 20, 10, 2, rng);
        CHECK(code.n() == 20);
        CHECK(code.redundancy() == 10);
        CHECK(code.d() == 2);
        for (unsigned i = 0; i < 10; ++i)
            for (unsigned j = 0; j < 20; ++j)
                CHECK(code.support().contains(code.H().at(i, j)));
        CHECK(CondensedSolver(code).ok());
    }
}

TEST_CASE("syndrome is linear") {
    const FieldContext& ctx = FieldContext::get(2, 24);
    Rng rng(15);
    LrpcCode code = LrpcCode::random(ctx, 16, 8, 2, rng);
    ExtVector a(16, ctx.zero()), b(16, ctx.zero());
    for (auto& x : a) x = ctx.random(rng);
    for (auto& x : b) x = ctx.random(rng);
    ExtVector ab(16, ctx.zero());
    for (int i = 0; i < 16; ++i) ab[i] = ctx.add(a[i], b[i]);
    ExtVector sa = code.syndrome(a), sb = code.syndrome(b), sab = code.syndrome(ab);
    for (unsigned i = 0; i < 8; ++i) CHECK(sab[i] == ctx.add(sa[i], sb[i]));
}

TEST_CASE("support recovery from a full syndrome space") {
    const FieldContext& ctx = FieldContext::get(2, 30);
    Rng rng(23);
    int recovered = 0;
    for (int t = 0; t < 30; ++t) {
        LrpcCode code = LrpcCode::random(ctx, 20, 8, 2, rng);
        Subspace E = Subspace::random(ctx, 3, rng);
        if (E.product(code.support()).dim() != 6) continue;
        ExtVector e = random_vector_with_support(E, 20, rng);
        Subspace S = code.syndrome_space(code.syndrome(e));
        if (S.dim() != 6) continue;  // deficient syndrome, not this test's topic
        if (code.recover_support(S) == E) ++recovered;
    }
    CHECK(recovered >= 25);
}

TEST_CASE("constrained solve finds the planted error, condensed path agrees") {
    const FieldContext& ctx = FieldContext::get(2, 24);
    Rng rng(37);
    for (int t = 0; t < 20; ++t) {
        LrpcCode code = LrpcCode::random(ctx, 20, 10, 2, rng);
        CondensedSolver fast(code);
        REQUIRE(fast.ok());
        Subspace E = Subspace::random(ctx, 3, rng);
        if (E.product(code.support()).dim() != 6) continue;
        ExtVector e = random_vector_with_support(E, 20, rng);
        ExtVector s = code.syndrome(e);

        ExtVector e1, e2;
        REQUIRE(code.solve_support_constrained(E, s, &e1));
        CHECK(e1 == e);
        CondensedSolver::SolveStats stats;
        REQUIRE(fast.solve(E, s, &e2, &stats));
        CHECK(e2 == e);
        // the back-substitution stays at n multiplications per product-basis
        // coordinate: n * n * r in total
        CHECK(stats.apply_mults == 20u * 20u * 3u);
    }
}

TEST_CASE("zero syndrome decodes to the zero error") {
    const FieldContext& ctx = FieldContext::get(2, 24);
    Rng rng(44);
    LrpcCode code = LrpcCode::random(ctx, 20, 10, 2, rng);
    CondensedSolver solver(code);
    ExtVector s(10, ctx.zero());
    auto e = decode_basic(code, solver, s, 3);
    REQUIRE(e.has_value());
    for (const auto& x : *e) CHECK(ctx.is_zero(x));
}

TEST_CASE("decoder rejects syndromes of too-heavy errors") {
    const FieldContext& ctx = FieldContext::get(2, 24);
    Rng rng(51);
    LrpcCode code = LrpcCode::random(ctx, 20, 10, 2, rng);
    CondensedSolver solver(code);
    int rejected = 0;
    for (int t = 0; t < 20; ++t) {
        // rank-8 error, far beyond the r=3 decoding target
        Subspace E = Subspace::random(ctx, 8, rng);
        ExtVector e = random_vector_with_support(E, 20, rng);
        DecodeReport rep;
        auto dec = decode_basic(code, solver, code.syndrome(e), 3, &rep);
        if (!dec) ++rejected;
    }
    CHECK(rejected == 20);
}

TEST_CASE("random vectors with prescribed support span exactly that support") {
    const FieldContext& ctx = FieldContext::get(2, 40);
    Rng rng(66);
    Subspace E = Subspace::random(ctx, 5, rng);
    for (int t = 0; t < 10; ++t) {
        ExtVector v = random_vector_with_support(E, 12, rng);
        CHECK(Subspace(ctx, v) == E);
        CHECK(rank_weight(ctx, v) == 5);
    }
}
