#pragma once

#include <cstdint>

#include "lrpc/subspace.hpp"

namespace lrpc {

/// Instrumentation for the syndrome space expansion functions. Intersection
/// work is charged at 4*a*b*m base-field operations for input dimensions
/// a and b.
struct ExpansionReport {
    unsigned intersections = 0;
    unsigned iterations = 0;
    uint64_t base_ops = 0;
    unsigned final_dim = 0;
    bool recovered = false;  // final dim == r*d
};

/// Iterative expansion with S <- (S + f_i S_j) cap (S + f_k S_l) over all
/// (i, j, k, l), i != j, k != l, (i,j) != (k,l), where S_j = f_j^{-1} S.
/// Grows S toward the full product space EF; effective when m >= 3rd - 2.
/// Stops when dim S reaches r*d or an entire sweep adds nothing.
Subspace expand_decode(const Subspace& S, const Subspace& F, unsigned r,
                       ExpansionReport* rep = nullptr);

/// Iterative expansion with S <- S + F*(S_i cap S_j) over all i != j.
/// Needs only m >= 2rd - r. Additions that would push dim S past r*d are
/// discarded (they indicate stray vectors picked up when m is tight).
Subspace expand_prob(const Subspace& S, const Subspace& F, unsigned r,
                     ExpansionReport* rep = nullptr);

/// Fixed-shape variant of expand_prob: precomputes S_{i,i+1} for
/// i = 1..d-1, then performs d-2 guarded updates with
/// F*(S_{i,i+1} + S_{i+1,i+2} + S_{i,i+2}). Always performs exactly
/// (d-1) + (d-2) intersections, independent of the input.
Subspace expand_crypto(const Subspace& S, const Subspace& F, unsigned r,
                       ExpansionReport* rep = nullptr);

}  // namespace lrpc
