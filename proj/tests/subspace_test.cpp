#include <doctest.h>

#include <set>

#include "lrpc/rng.hpp"
#include "lrpc/subspace.hpp"

using namespace lrpc;

namespace {

ExtElement lift(const FieldContext& ctx, unsigned v) {
    ExtElement e = ctx.zero();
    for (unsigned i = 0; i < ctx.m(); ++i) e.coords[i] = (v >> i) & 1;
    return e;
}

// all element values of a subspace of F_{2^m} as a set of integers, by
// brute-force enumeration of basis combinations
std::set<unsigned> enumerate(const FieldContext& ctx, const Subspace& s) {
    std::set<unsigned> out;
    unsigned k = s.dim();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        ExtElement acc = ctx.zero();
        for (unsigned i = 0; i < k; ++i)
            if (mask & (1u << i)) ctx.add_in_place(acc, s.basis()[i]);
        unsigned v = 0;
        for (unsigned b = 0; b < ctx.m(); ++b) v |= unsigned(acc.coords[b]) << b;
        out.insert(v);
    }
    return out;
}

}  // namespace

TEST_CASE("canonical encoding: every basis of a subspace encodes identically") {
    const FieldContext& ctx = FieldContext::get(2, 4);
    // the 2-dimensional subspace {0, a, b, a+b} has three distinct bases
    // up to order; all spans must collapse to the same object
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        Subspace s = Subspace::random(ctx, 2, rng);
        auto elems = enumerate(ctx, s);
        REQUIRE(elems.size() == 4);
        std::vector<unsigned> nz;
        for (unsigned v : elems)
            if (v) nz.push_back(v);
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j) {
                if (i == j) continue;
                Subspace t2(ctx, {lift(ctx, nz[i]), lift(ctx, nz[j])});
                CHECK(t2 == s);
                CHECK(t2.encode() == s.encode());
            }
    }
}

TEST_CASE("exactly 35 two-dimensional subspaces of F_2^4 exist and all are hit") {
    const FieldContext& ctx = FieldContext::get(2, 4);
    // brute-force: every pair of distinct nonzero elements spans some plane
    std::set<std::vector<uint8_t>> all;
    for (unsigned a = 1; a < 16; ++a)
        for (unsigned b = a + 1; b < 16; ++b) {
            if (b == a) continue;
            Subspace s(ctx, {lift(ctx, a), lift(ctx, b)});
            if (s.dim() == 2) all.insert(s.encode());
        }
    CHECK(all.size() == 35);

    // random sampling reaches every one of them
    std::set<std::vector<uint8_t>> seen;
    Rng rng(3);
    for (int t = 0; t < 3000 && seen.size() < 35; ++t)
        seen.insert(Subspace::random(ctx, 2, rng).encode());
    CHECK(seen.size() == 35);
}

TEST_CASE("dimension formula dim A + dim B = dim(A+B) + dim(A cap B)") {
    for (auto [q, m] : {std::pair<unsigned, unsigned>{2, 20}, {4, 9}}) {
        const FieldContext& ctx = FieldContext::get(q, m);
        Rng rng(80 + q);
        for (int t = 0; t < 40; ++t) {
            Subspace a = Subspace::random(ctx, 1 + rng.below(6), rng);
            Subspace b = Subspace::random(ctx, 1 + rng.below(6), rng);
            Subspace sum = a.add(b);
            Subspace cap = a.intersect(b);
            CHECK(a.dim() + b.dim() == sum.dim() + cap.dim());
            CHECK(sum.contains(a));
            CHECK(sum.contains(b));
            CHECK(a.contains(cap));
            CHECK(b.contains(cap));
        }
    }
}

TEST_CASE("intersection against brute-force enumeration in F_2^6") {
    const FieldContext& ctx = FieldContext::get(2, 6);
    Rng rng(9);
    for (int t = 0; t < 30; ++t) {
        Subspace a = Subspace::random(ctx, 3, rng);
        Subspace b = Subspace::random(ctx, 3, rng);
        auto ea = enumerate(ctx, a), eb = enumerate(ctx, b);
        std::set<unsigned> want;
        for (unsigned v : ea)
            if (eb.count(v)) want.insert(v);
        CHECK(enumerate(ctx, a.intersect(b)) == want);
    }
}

TEST_CASE("product space equals the span of all pairwise products") {
    const FieldContext& ctx = FieldContext::get(2, 24);
    Rng rng(14);
    for (int t = 0; t < 20; ++t) {
        Subspace e = Subspace::random(ctx, 3, rng);
        Subspace f = Subspace::random(ctx, 2, rng);
        Subspace prod = e.product(f);
        ExtVector gens;
        for (const auto& x : e.basis())
            for (const auto& y : f.basis()) gens.push_back(ctx.mul(x, y));
        CHECK(prod == Subspace(ctx, gens));
        CHECK(prod.dim() <= 6);
        // scaling by a basis element of F keeps us inside the product
        for (const auto& x : e.basis())
            CHECK(prod.contains(ctx.mul(x, f.basis()[0])));
    }
}

TEST_CASE("scale is a bijection compatible with membership") {
    const FieldContext& ctx = FieldContext::get(2, 30);
    Rng rng(21);
    Subspace s = Subspace::random(ctx, 5, rng);
    ExtElement c = ctx.random(rng);
    while (ctx.is_zero(c)) c = ctx.random(rng);
    Subspace sc = s.scale(c);
    CHECK(sc.dim() == s.dim());
    for (int t = 0; t < 20; ++t) {
        ExtElement v = s.random_element(rng);
        CHECK(sc.contains(ctx.mul(c, v)));
    }
    CHECK(sc.scale(ctx.inv(c)) == s);
    CHECK_THROWS(s.scale(ctx.zero()));
}

TEST_CASE("random_subspace_of stays inside the ambient space") {
    const FieldContext& ctx = FieldContext::get(2, 40);
    Rng rng(5);
    Subspace ambient = Subspace::random(ctx, 8, rng);
    for (int t = 0; t < 20; ++t) {
        Subspace s = Subspace::random_subspace_of(ambient, 5, rng);
        CHECK(s.dim() == 5);
        CHECK(ambient.contains(s));
    }
    // uniform elements
    for (int t = 0; t < 20; ++t) CHECK(ambient.contains(ambient.random_element(rng)));
}
