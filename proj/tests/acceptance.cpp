// End-to-end acceptance gate: eleven numbered checks, one PASS/FAIL line
// each, nonzero exit if any fails. Budgets are wall-clock on a single core.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "lrpc/analysis.hpp"
#include "lrpc/expansion.hpp"
#include "lrpc/kem.hpp"
#include "lrpc/sim.hpp"

using namespace lrpc;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int idx, bool pass, const std::string& detail) {
    printf("[%2d] %s  %s\n", idx, pass ? "PASS" : "FAIL", detail.c_str());
    fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// ---------------------------------------------------------------------------

// 1: d=2 headline success rate ~0.29 at q=2, 3r = 2(n-k)
void check_1() {
    auto t0 = Clock::now();
    CellSpec spec;
    spec.cell = {2, 61, 30, 15, 2, 10};
    spec.alg = SimAlgorithm::FDecode;
    spec.plant = PlantMode::SyndromeDirect;
    spec.trials = 10000;
    spec.base_seed = 101;
    CellResult r = run_cell(spec, 1);
    double rate = r.success_rate();
    double secs = seconds_since(t0);
    bool pass = !r.skipped && rate >= 0.26 && rate <= 0.32 && secs < 120;
    report(1, pass, fmt("d=2 n=30 k=15 r=10 q=2: success %.4f (want [0.26,0.32]) in %.0fs",
                        rate, secs));
}

// 2: failure law q^{3r-2(n-k)}/(q-1) for q in {4,8}, r in {8,9}
void check_2() {
    auto t0 = Clock::now();
    struct Cell { unsigned q, m, r; uint64_t trials; };
    const Cell cells[] = {{4, 50, 8, 250000}, {4, 56, 9, 100000},
                          {8, 50, 8, 100000}, {8, 56, 9, 100000}};
    bool pass = true;
    std::string detail;
    for (const Cell& c : cells) {
        CellSpec spec;
        spec.cell = {c.q, c.m, 30, 15, 2, c.r};
        spec.alg = SimAlgorithm::FDecode;
        spec.plant = PlantMode::SyndromeDirect;
        spec.require_full_syndrome = true;  // the law assumes independent syndromes
        spec.trials = c.trials;
        spec.base_seed = 202;
        CellResult r = run_cell(spec, 1);
        double pred = std::pow(double(c.q), 3.0 * c.r - 30.0) / (c.q - 1.0);
        double rate = r.failure_rate();
        bool cell_ok;
        if (pred * double(c.trials) >= 10.0) {
            cell_ok = rate >= pred / 2 && rate <= 2 * pred;  // statistically resolvable
        } else {
            // expectation below resolution: the observation must merely be
            // consistent with (i.e. not refute) the predicted rate
            double lo, hi;
            wilson_interval(r.failures, r.trials, &lo, &hi);
            cell_ok = lo <= 2 * pred;
        }
        pass = pass && !r.skipped && cell_ok;
        detail += fmt("q=%u r=%u: %.3g vs %.3g%s  ", c.q, c.r, rate, pred,
                      cell_ok ? "" : " OUT");
    }
    double secs = seconds_since(t0);
    pass = pass && secs < 300;
    report(2, pass, detail + fmt("(x2 band) in %.0fs", secs));
}

// 3: codim-1 expansion bound for d=3, r=3 across q
void check_3() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    for (unsigned q : {2u, 4u, 16u}) {
        CellSpec spec;
        spec.cell = {q, 31, 20, 11, 3, 3};
        spec.alg = SimAlgorithm::FProb;
        spec.plant = PlantMode::ForcedCodim;
        spec.codim = 1;
        spec.trials = 100000;
        spec.base_seed = 303;
        CellResult r = run_cell(spec, 1);
        double rate = r.failure_rate();
        bool cell_ok = !r.skipped;
        if (q == 2) {
            double bound = std::pow(2.0, (1.0 - 3.0) * (3.0 - 2.0));  // 1/4
            cell_ok = cell_ok && rate <= bound;
            detail += fmt("q=2: %.4f<=%.2f  ", rate, bound);
        } else if (q >= 16) {
            double pred = std::pow(double(q), (2.0 - 3.0) * (3.0 - 2.0));  // 1/q
            cell_ok = cell_ok && rate >= pred / 2 && rate <= 2 * pred;
            detail += fmt("q=16: %.4f~%.4f  ", rate, pred);
        } else {
            detail += fmt("q=4: %.4f (reported)  ", rate);
        }
        pass = pass && cell_ok;
    }
    double secs = seconds_since(t0);
    pass = pass && secs < 600;
    report(3, pass, detail + fmt("in %.0fs", secs));
}

// 4 and 5 share the honest basic-decoder runs
void check_4_and_5() {
    auto t0 = Clock::now();
    bool pass4 = true, pass5 = true;
    std::string d4, d5;
    uint64_t conditioned_total = 0;
    for (unsigned r : {3u, 4u}) {
        CellSpec spec;
        spec.cell = {2, 24, 20, 10, 2, r};
        spec.alg = SimAlgorithm::Basic;
        spec.trials = 100000;
        spec.base_seed = 404;
        CellResult res = run_cell(spec, 1);
        double rate = double(res.syndrome_deficient) / double(res.trials);
        double pred = std::pow(2.0, double(r) * 2 - 10);
        bool ok = !res.skipped && rate >= pred / 2 && rate <= 2 * pred;
        pass4 = pass4 && ok;
        d4 += fmt("r=%u: %.4f vs %.4f%s  ", r, rate, pred, ok ? "" : " OUT");
        conditioned_total += res.conditioned;
        if (res.conditioned_exact != res.conditioned) pass5 = false;
        d5 += fmt("r=%u: %llu/%llu exact  ", r,
                  (unsigned long long)res.conditioned_exact,
                  (unsigned long long)res.conditioned);
    }
    double secs = seconds_since(t0);
    pass4 = pass4 && secs < 300;
    report(4, pass4, d4 + fmt("(x2 band) in %.0fs", secs));
    pass5 = pass5 && conditioned_total >= 10000;
    report(5, pass5, d5 + fmt("(%llu conditioned trials, zero tolerance)",
                              (unsigned long long)conditioned_total));
}

// 6: KEM torture loop on the level-128 set
void check_6() {
    auto t0 = Clock::now();
    CellSpec spec;
    spec.cell = {2, 71, 47, 0, 6, 5};
    spec.alg = SimAlgorithm::KemLoop;
    spec.trials = 100000;
    spec.base_seed = 606;
    CellResult r = run_cell(spec, 1);
    IdealLrpc sys(*find_paramset("kem-128"));
    double secs = seconds_since(t0);
    bool pass = !r.skipped && r.decap_bot == 0 && r.key_mismatch == 0 &&
                sys.public_key_bits() == 3337 && secs < 1800;
    report(6, pass,
           fmt("kem-128 x %llu: %llu bot, %llu mismatch, pk %zu bits in %.0fs",
               (unsigned long long)r.trials, (unsigned long long)r.decap_bot,
               (unsigned long long)r.key_mismatch, sys.public_key_bits(), secs));
}

// 7: PKE round-trip loop on the level-128 set
void check_7() {
    auto t0 = Clock::now();
    const ParamSet& ps = *find_paramset("pke64-128");
    IdealLrpc sys(ps);
    Rng rng(707);
    uint64_t bad = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        KeyPair kp = sys.keygen(rng);
        std::vector<uint8_t> msg(32);
        for (auto& b : msg) b = uint8_t(rng.next());
        PkeCiphertext ct = sys.encrypt(kp.pk, msg, rng);
        auto back = sys.decrypt(kp.sk, ct);
        if (!back || *back != msg) ++bad;
    }
    double secs = seconds_since(t0);
    bool pass = bad == 0 && sys.public_key_bits() == 5893;
    report(7, pass, fmt("pke64-128 x %d round-trips: %llu failures, pk %zu bits in %.0fs",
                        trials, (unsigned long long)bad, sys.public_key_bits(), secs));
}

// 8: estimator reproduces the published tables
void check_8() {
    struct Row { const char* name; double structural, generic; };
    const Row rows[] = {
        {"kem-128", 130, 146}, {"kem-192", 207, 221}, {"kem-256", 312, 329},
        {"pke64-128", 133, 144}, {"pke64-192", 209, 195}, {"pke64-256", 273, 260},
        {"pke80-128", 136, 157}, {"pke80-192", 229, 234}, {"pke80-256", 259, 260},
    };
    bool pass = true;
    std::string detail;
    bool entropy_flagged = false;
    for (const Row& row : rows) {
        const ParamSet& ps = *find_paramset(row.name);
        CostReport rep = validate_paramset(ps);
        bool ok = std::abs(rep.structural_log2 - row.structural) <= 2.0 &&
                  std::abs(rep.generic_log2 - row.generic) <= 2.0 &&
                  rep.pk_bits == ps.table_pk_bits;
        if (!ok) detail += fmt("%s off  ", row.name);
        pass = pass && ok;
        for (const auto& w : rep.warnings)
            if (ps.name == "kem-128" && w.find("entropy") != std::string::npos)
                entropy_flagged = true;
    }
    // the table's 311-bit entropy entry disagrees with the formula (~331.7,
    // matching the identical-n/m entry of the second table); it must be flagged
    pass = pass && entropy_flagged;
    report(8, pass, detail + fmt("9 sets within +-2 bits, pk_bits exact, "
                                 "kem-128 entropy flagged=%d", int(entropy_flagged)));
}

// 9: trivial-intersection probability, exact formula vs direct sampling
void check_9() {
    auto t0 = Clock::now();
    const FieldContext& ctx = FieldContext::get(2, 8);
    Rng rng(909);
    const int samples = 100000;
    int trivial = 0;
    for (int t = 0; t < samples; ++t) {
        Subspace a = Subspace::random(ctx, 2, rng);
        Subspace b = Subspace::random(ctx, 2, rng);
        if (a.intersect(b).dim() == 0) ++trivial;
    }
    double observed = double(trivial) / samples;
    double exact = p_ab_n(2, 2, 8, 2);
    double ratio = observed > exact ? observed / exact : exact / observed;

    bool series_ok = true;
    for (unsigned q : {2u, 3u, 4u})
        for (unsigned n = 8; n <= 16; ++n)
            for (unsigned a = 1; a <= 3; ++a)
                for (unsigned b = 1; b <= 3; ++b) {
                    double err = std::abs(p_ab_n(a, b, n, q) - p_ab_n_approx(a, b, n, q));
                    if (err > 4.0 * std::pow(double(q), 2.0 * (double(a) + b - n)))
                        series_ok = false;
                }
    double secs = seconds_since(t0);
    bool pass = ratio <= 1.05 && series_ok && secs < 60;
    report(9, pass, fmt("P_{2,2}(8): sampled %.4f vs exact %.4f (ratio %.3f), "
                        "series sweep %s, in %.0fs",
                        observed, exact, ratio, series_ok ? "ok" : "OUT", secs));
}

// 10: the crypto expansion's intersection count is a constant of d
void check_10() {
    Rng rng(1010);
    bool pass = true;
    std::string detail;
    for (unsigned d = 3; d <= 8; ++d) {
        unsigned r = 3;
        const FieldContext& ctx = FieldContext::get(2, 2 * r * d - r + 8);
        for (unsigned dim_s : {1u, r * d - 1, r * d}) {  // includes complete syndromes
            Subspace F(ctx), E(ctx), EF(ctx);
            do {
                F = Subspace::random(ctx, d, rng);
                E = Subspace::random(ctx, r, rng);
                EF = E.product(F);
            } while (EF.dim() != r * d);
            Subspace S = Subspace::random_subspace_of(EF, dim_s, rng);
            ExpansionReport rep;
            expand_crypto(S, F, r, &rep);
            if (rep.intersections != (d - 1) + (d - 2)) {
                pass = false;
                detail += fmt("d=%u dim_s=%u: %llu  ", d, dim_s,
                              (unsigned long long)rep.intersections);
            }
        }
    }
    report(10, pass, detail.empty()
                         ? "intersection count = (d-1)+(d-2) for all d in 3..8"
                         : detail);
}

// 11: forced codim-2 spot value
void check_11() {
    auto t0 = Clock::now();
    CellSpec spec;
    spec.cell = {2, 80, 20, 10, 6, 5};
    spec.alg = SimAlgorithm::FProb;
    spec.plant = PlantMode::ForcedCodim;
    spec.codim = 2;
    spec.trials = 100000;
    spec.base_seed = 1111;
    CellResult r = run_cell(spec, 1);
    double rate = r.failure_rate();
    double secs = seconds_since(t0);
    bool pass = !r.skipped && rate < std::pow(2.0, -10);
    report(11, pass, fmt("q=2 c=2 r=5 d=6 m=80: failure %.3g < 2^-10 (%llu/%llu) in %.0fs",
                         rate, (unsigned long long)r.failures,
                         (unsigned long long)r.trials, secs));
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    check_1();
    check_2();
    check_3();
    check_4_and_5();
    check_6();
    check_7();
    check_8();
    check_9();
    check_10();
    check_11();
    printf("%d/11 passed in %.0fs\n", 11 - g_failures, seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
