#include "lrpc/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "lrpc/expansion.hpp"
#include "lrpc/kem.hpp"
#include "lrpc/lrpc_code.hpp"

namespace lrpc {

namespace {

// random code with a prescribed support, same resampling rules as
// LrpcCode::random
LrpcCode random_code_with_support(const FieldContext& ctx, const Subspace& F, unsigned n,
                                  unsigned k, Rng& rng) {
    const unsigned rows = n - k;
    for (;;) {
        ExtMatrix H(ctx, rows, n);
        ExtVector entries;
        entries.reserve(size_t(rows) * n);
        for (unsigned i = 0; i < rows; ++i)
            for (unsigned j = 0; j < n; ++j) {
                H.at(i, j) = F.random_element(rng);
                entries.push_back(H.at(i, j));
            }
        if (Subspace(ctx, entries).dim() != F.dim()) continue;
        LrpcCode code(ctx, F, std::move(H));
        if (size_t(rows) * F.dim() >= n && !CondensedSolver(code).ok()) continue;
        if (code.H().rank() != rows) continue;
        return code;
    }
}

// Per-trial seed: the base seed is diffused through splitmix64 before the
// trial index is mixed in, so that nearby base seeds (1, 2, ...) produce
// disjoint trial-seed sets rather than permutations of one another.
uint64_t trial_seed(uint64_t base, uint64_t trial) {
    uint64_t z = base + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return (z ^ (z >> 31)) ^ trial;
}

void basic_trial(const CellSpec& spec, const FieldContext& ctx, uint64_t seed,
                 CellResult& res) {
    const GridCell& c = spec.cell;
    const unsigned rd = c.r * c.d;
    Rng rng(trial_seed(spec.base_seed, seed));
    LrpcCode code = LrpcCode::random(ctx, c.n, c.k, c.d, rng);
    CondensedSolver solver(code);
    Subspace E = Subspace::random(ctx, c.r, rng);
    ExtVector e = random_vector_with_support(E, c.n, rng);
    ExtVector s = code.syndrome(e);

    bool ef_ok = E.product(code.support()).dim() == rd;
    if (!ef_ok) res.dim_ef_deficient++;

    DecodeReport rep;
    auto dec = decode_basic(code, solver, s, c.r, &rep);
    if (rep.dim_S < std::min(rd, c.n - c.k)) res.syndrome_deficient++;

    bool exact = dec && *dec == e;
    if (exact) {
        res.successes++;
    } else {
        res.failures++;
        if (!rep.support_ok)
            res.support_wrong++;
        else if (!rep.solved)
            res.solve_failed++;
    }
    if (ef_ok && rep.dim_S == rd && rep.dim_support == c.r) {
        res.conditioned++;
        if (exact) res.conditioned_exact++;
    }
}

void expansion_trial(const CellSpec& spec, const FieldContext& ctx, uint64_t seed,
                     CellResult& res) {
    const GridCell& c = spec.cell;
    const unsigned rd = c.r * c.d;
    Rng rng(trial_seed(spec.base_seed, seed));

    Subspace F = Subspace::random(ctx, c.d, rng);
    Subspace E(ctx), EF(ctx);
    do {
        E = Subspace::random(ctx, c.r, rng);
        EF = E.product(F);
    } while (EF.dim() != rd);

    const unsigned full = std::min(rd, c.n - c.k);
    Subspace S(ctx);
    switch (spec.plant) {
        case PlantMode::RandomError: {
            LrpcCode code = random_code_with_support(ctx, F, c.n, c.k, rng);
            for (;;) {
                ExtVector e = random_vector_with_support(E, c.n, rng);
                S = code.syndrome_space(code.syndrome(e));
                if (!spec.require_full_syndrome || S.dim() == full) break;
            }
            break;
        }
        case PlantMode::SyndromeDirect: {
            for (;;) {
                ExtVector gens;
                gens.reserve(c.n - c.k);
                for (unsigned i = 0; i < c.n - c.k; ++i) gens.push_back(EF.random_element(rng));
                S = Subspace(ctx, gens);
                if (!spec.require_full_syndrome || S.dim() == full) break;
            }
            break;
        }
        case PlantMode::ForcedCodim:
            S = Subspace::random_subspace_of(EF, rd - spec.codim, rng);
            break;
    }

    Subspace out(ctx);
    switch (spec.alg) {
        case SimAlgorithm::FDecode: out = expand_decode(S, F, c.r); break;
        case SimAlgorithm::FProb: out = expand_prob(S, F, c.r); break;
        default: out = expand_crypto(S, F, c.r); break;
    }
    if (out == EF)
        res.successes++;
    else
        res.failures++;
}

void kem_trial(const CellSpec& spec, const IdealLrpc& scheme, uint64_t seed,
               CellResult& res) {
    Rng rng(trial_seed(spec.base_seed, seed));
    KeyPair kp = scheme.keygen(rng);
    IdealLrpc::EncapResult er = scheme.encap(kp.pk, rng);
    auto key = scheme.decap(kp.sk, er.c);
    if (!key) {
        res.decap_bot++;
        res.failures++;
    } else if (*key != er.key) {
        res.key_mismatch++;
        res.failures++;
    } else {
        res.successes++;
    }
}

void merge(CellResult& into, const CellResult& part) {
    into.successes += part.successes;
    into.failures += part.failures;
    into.dim_ef_deficient += part.dim_ef_deficient;
    into.syndrome_deficient += part.syndrome_deficient;
    into.support_wrong += part.support_wrong;
    into.solve_failed += part.solve_failed;
    into.key_mismatch += part.key_mismatch;
    into.decap_bot += part.decap_bot;
    into.conditioned += part.conditioned;
    into.conditioned_exact += part.conditioned_exact;
}

const char* check_cell(const CellSpec& spec, const ParamSet** kem_ps) {
    const GridCell& c = spec.cell;
    const unsigned rd = c.r * c.d;
    if (c.r == 0 || c.d == 0 || c.m == 0) return "degenerate cell";
    if (rd > c.m) return "m smaller than r*d";
    switch (spec.alg) {
        case SimAlgorithm::Basic:
            if (c.k >= c.n) return "k must be below n";
            if (c.d < 2) return "decoder needs d >= 2";
            break;
        case SimAlgorithm::FDecode:
            if (c.d < 2) return "expansion needs d >= 2";
            if (c.m < 3 * rd - 2) return "m below the 3rd - 2 precondition";
            if (spec.plant != PlantMode::ForcedCodim && c.k >= c.n) return "k must be below n";
            break;
        case SimAlgorithm::FProb:
        case SimAlgorithm::Crypto:
            if (spec.alg == SimAlgorithm::Crypto ? c.d < 3 : c.d < 2)
                return spec.alg == SimAlgorithm::Crypto ? "fixed-shape expansion needs d >= 3"
                                                        : "expansion needs d >= 2";
            if (c.m < 2 * rd - c.r) return "m below the 2rd - r precondition";
            if (spec.plant != PlantMode::ForcedCodim && c.k >= c.n) return "k must be below n";
            break;
        case SimAlgorithm::KemLoop: {
            for (const ParamSet& ps : shipped_paramsets())
                if (ps.q == c.q && ps.n == c.n && ps.m == c.m && ps.d == c.d && ps.r == c.r)
                    *kem_ps = &ps;
            if (!*kem_ps) return "cell does not match a shipped parameter set";
            break;
        }
    }
    if (spec.plant == PlantMode::ForcedCodim && spec.codim > rd)
        return "codim exceeds r*d";
    return nullptr;
}

}  // namespace

CellResult run_cell(const CellSpec& spec, unsigned threads) {
    CellResult res;
    res.trials = spec.trials;

    const ParamSet* kem_ps = nullptr;
    if (const char* reason = check_cell(spec, &kem_ps)) {
        res.skipped = spec.trials;
        res.skip_reason = reason;
        return res;
    }

    const FieldContext& ctx = FieldContext::get(spec.cell.q, spec.cell.m);
    std::optional<IdealLrpc> scheme;
    if (kem_ps) scheme.emplace(*kem_ps);

    if (threads == 0) threads = 1;
    threads = unsigned(std::min<uint64_t>(threads, std::max<uint64_t>(spec.trials, 1)));

    auto t0 = std::chrono::steady_clock::now();
    std::vector<CellResult> parts(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        uint64_t lo = spec.trials * w / threads;
        uint64_t hi = spec.trials * (w + 1) / threads;
        workers.emplace_back([&, w, lo, hi] {
            for (uint64_t t = lo; t < hi; ++t) {
                switch (spec.alg) {
                    case SimAlgorithm::Basic: basic_trial(spec, ctx, t, parts[w]); break;
                    case SimAlgorithm::KemLoop: kem_trial(spec, *scheme, t, parts[w]); break;
                    default: expansion_trial(spec, ctx, t, parts[w]); break;
                }
            }
        });
    }
    for (auto& th : workers) th.join();
    for (const CellResult& p : parts) merge(res, p);
    res.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

void wilson_interval(uint64_t k, uint64_t n, double* lo, double* hi) {
    if (n == 0) {
        *lo = 0;
        *hi = 1;
        return;
    }
    const double z = 1.959963984540054;  // 95%
    double p = double(k) / double(n);
    double z2n = z * z / double(n);
    double center = (p + z2n / 2) / (1 + z2n);
    double half = z * std::sqrt(p * (1 - p) / double(n) + z2n / (4 * double(n))) / (1 + z2n);
    // pin the exact endpoints: rounding in center - half can leave a
    // sub-epsilon residue when k = 0 (resp. k = n)
    *lo = k == 0 ? 0.0 : std::max(0.0, center - half);
    *hi = k == n ? 1.0 : std::min(1.0, center + half);
}

}  // namespace lrpc
