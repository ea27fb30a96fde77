#pragma once

#include <cstdint>
#include <string>

#include "lrpc/params.hpp"

namespace lrpc {

struct GridCell {
    unsigned q = 2, m = 0, n = 0, k = 0, d = 0, r = 0;
};

enum class SimAlgorithm {
    Basic,     // basic decoder on honest instances
    FDecode,   // syndrome space expansion, pairwise-intersection variant
    FProb,     // syndrome space expansion via F * S_ij
    Crypto,    // fixed-shape expansion variant
    KemLoop,   // full keygen/encap/decap round trips (cell must match a shipped set)
};

enum class PlantMode {
    RandomError,     // honest: random code, random error, true syndrome
    ForcedCodim,     // S = uniform subspace of EF of dimension rd - codim
    SyndromeDirect,  // S = span of n-k uniform elements of EF (skips the code)
};

struct CellSpec {
    GridCell cell;
    SimAlgorithm alg = SimAlgorithm::Basic;
    PlantMode plant = PlantMode::RandomError;
    unsigned codim = 1;          // for ForcedCodim
    // resample until dim S = min(n-k, rd): conditions the experiment on the
    // n-k syndrome coordinates being independent elements of EF
    bool require_full_syndrome = false;
    uint64_t trials = 1000;
    uint64_t base_seed = 1;      // per-trial seed = base_seed xor trial index
};

struct CellResult {
    uint64_t trials = 0;
    uint64_t skipped = 0;            // cell invalid for the algorithm
    std::string skip_reason;

    uint64_t successes = 0;
    uint64_t failures = 0;

    // stage breakdown (Basic / KemLoop)
    uint64_t dim_ef_deficient = 0;   // dim EF < r*d
    uint64_t syndrome_deficient = 0; // dim S < min(r*d, n-k)
    uint64_t support_wrong = 0;
    uint64_t solve_failed = 0;
    uint64_t key_mismatch = 0;       // KemLoop: non-bot key disagreement
    uint64_t decap_bot = 0;

    // conditioned-correctness accounting (Basic)
    uint64_t conditioned = 0;        // dim EF = rd, dim S = rd, dim cap S_i = r
    uint64_t conditioned_exact = 0;

    double wall_seconds = 0;

    double failure_rate() const {
        return trials ? double(failures) / double(trials) : 0.0;
    }
    double success_rate() const {
        return trials ? double(successes) / double(trials) : 0.0;
    }
};

/// Runs all trials of one cell, partitioned over `threads` workers; the
/// result is independent of the thread count (per-trial seeds, commutative
/// count merging).
CellResult run_cell(const CellSpec& spec, unsigned threads = 1);

/// Wilson 95% score interval for k successes out of n.
void wilson_interval(uint64_t k, uint64_t n, double* lo, double* hi);

}  // namespace lrpc
