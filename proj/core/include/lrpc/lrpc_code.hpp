#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrpc/ext_matrix.hpp"
#include "lrpc/field.hpp"
#include "lrpc/fq_matrix.hpp"
#include "lrpc/rng.hpp"
#include "lrpc/subspace.hpp"

namespace lrpc {

/// Coordinates with respect to a fixed (ordered) generating family of
/// F_{q^m} elements. Built once, then each query costs one m x m
/// matrix-vector product over F_q.
class CoordinateSolver {
public:
    CoordinateSolver(const FieldContext& ctx, const ExtVector& gens);

    bool independent() const { return independent_; }
    /// Coordinates of v in the generating family (length gens.size());
    /// returns false if v lies outside the span or the family is dependent.
    bool coords(const ExtElement& v, uint8_t* out) const;

private:
    const FieldContext* ctx_;
    size_t t_;
    bool independent_;
    FqMatrix transform_;           // m x m row-op record T with T * gens^T in RREF
    std::vector<size_t> pivots_;   // pivot columns (= generator indices)
};

/// A code given by a parity-check matrix H whose entries all lie in a small
/// support F of dimension d ("homogeneous of weight d"). Covers both random
/// codes (rectangular H) and the double-circulant blocks used by the
/// cryptosystems.
class LrpcCode {
public:
    LrpcCode(const FieldContext& ctx, Subspace F, ExtMatrix H);

    /// Random [n, k] code: H is (n-k) x n with entries uniform in a random
    /// d-dimensional support F; resampled until H has full rank over F_{q^m},
    /// its entries span F, and (when (n-k)d >= n) the condensed coordinate
    /// system is uniquely solvable, so the code has no rank-1 codewords.
    static LrpcCode random(const FieldContext& ctx, unsigned n, unsigned k, unsigned d,
                           Rng& rng);

    const FieldContext& ctx() const { return *ctx_; }
    unsigned n() const { return unsigned(H_.cols()); }
    unsigned redundancy() const { return unsigned(H_.rows()); }  // n - k
    unsigned d() const { return F_.dim(); }
    const Subspace& support() const { return F_; }
    const ExtMatrix& H() const { return H_; }

    ExtVector syndrome(const ExtVector& e) const;

    /// Span of the syndrome coordinates.
    Subspace syndrome_space(const ExtVector& s) const;

    /// Intersection of the f_i^{-1} S over a basis (f_i) of F.
    Subspace recover_support(const Subspace& S) const;

    /// Solve H e = s for e with all coordinates in E, over the full
    /// unfolded F_q system. Slow but assumption-free; used as an oracle and
    /// as a fallback consistency check.
    bool solve_support_constrained(const Subspace& E, const ExtVector& s,
                                   ExtVector* e_out) const;

private:
    const FieldContext* ctx_;
    Subspace F_;
    ExtMatrix H_;
};

/// Coordinate solver built from H alone (independent of the error support),
/// exploiting the block structure of the unfolded system: the condensed
/// (n-k)d x n matrix with entries h_iju is row-selected and inverted once;
/// each solve is then n^2 r base-field multiplications.
class CondensedSolver {
public:
    explicit CondensedSolver(const LrpcCode& code);

    /// False if no invertible n x n row subset exists (H unusable).
    bool ok() const { return ok_; }

    struct SolveStats {
        uint64_t apply_mults = 0;  // base-field multiplications in the back-substitution
    };

    /// Solve H e = s assuming supp(e) is contained in E with dim(EF) = rd.
    /// Fails if the products f_u * e_v are dependent or some syndrome
    /// coordinate falls outside their span.
    bool solve(const Subspace& E, const ExtVector& s, ExtVector* e_out,
               SolveStats* stats = nullptr) const;

private:
    const LrpcCode* code_;
    bool ok_ = false;
    FqMatrix D_;                                        // n x n inverse of selected rows
    std::vector<std::pair<unsigned, unsigned>> rows_;   // selected (i, u) pairs
};

/// Per-trial decoder instrumentation.
struct DecodeReport {
    unsigned dim_S = 0;         // dim of the syndrome space
    unsigned dim_support = 0;   // dim of the recovered candidate support
    bool support_ok = false;    // candidate support has the expected dimension
    bool solved = false;        // coordinate solve succeeded
};

/// One-shot decoder: S from the syndrome, support as the intersection of
/// the f_i^{-1} S, coordinates via the condensed system. Returns the error
/// vector, or nullopt on failure.
std::optional<ExtVector> decode_basic(const LrpcCode& code, const CondensedSolver& solver,
                                      const ExtVector& s, unsigned r,
                                      DecodeReport* rep = nullptr);

/// Random vector of length n whose support is exactly E (resampled until the
/// coordinates span E; requires n >= dim E).
ExtVector random_vector_with_support(const Subspace& E, unsigned n, Rng& rng);

}  // namespace lrpc
