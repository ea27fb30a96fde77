#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrpc/params.hpp"

namespace lrpc {

/// log2 of the Gaussian binomial [m choose w]_q (number of w-dimensional
/// subspaces of F_q^m). Relative error < 1e-9.
double gaussian_binomial_log2(unsigned m, unsigned w, unsigned q);

/// Structural attack: w*log2(nm) + d*ceil(m/2) - m - n, w = log2(7).
double structural_attack_log2(const ParamSet& ps);
/// Generic rank-syndrome decoding: w*log2(nm) + r*ceil(m(n+1)/(2n)) - m.
double generic_attack_log2(const ParamSet& ps);
/// Quantum variant: the combinatorial exponent is halved.
double quantum_generic_attack_log2(const ParamSet& ps);

/// log2 Prob(codim of S in EF equals l) ~ -l(n-k-rd+l) * log2 q.
double prob_c_equals_l_log2(unsigned q, unsigned n_minus_k, unsigned rd, unsigned l);

/// log2 of the exact count of (m x n) matrices over F_q of rank t.
double rank_count_log2(unsigned q, unsigned n, unsigned m, unsigned t);
/// log2 Prob(rank(random m x n matrix) = t), exact.
double rank_prob_log2(unsigned q, unsigned n, unsigned m, unsigned t);

/// Decoding-failure upper bound: codim-1 residual failure times Prob(c=1),
/// plus Prob(c>=2). Two variants of the codim-1 factor exponent:
/// (2-r)(d-2) in general and (1-r)(d-2) for q=2.
double failure_bound_log2(const ParamSet& ps);
double failure_bound_log2_q2(const ParamSet& ps);

/// P_{a,b}(n): probability that two random subspaces of dimensions a and b
/// of F_q^n intersect trivially. Exact product form and its series
/// approximation 1 - q^{-n}(q^a - 1)(q^b - 1)/(q - 1).
double p_ab_n(unsigned a, unsigned b, unsigned n, unsigned q);
double p_ab_n_approx(unsigned a, unsigned b, unsigned n, unsigned q);

struct CostReport {
    std::string name;
    double structural_log2 = 0;
    double generic_log2 = 0;
    double quantum_generic_log2 = 0;
    double pf_upper_log2 = 0;
    double pf_upper_log2_q2 = 0;
    double entropy_bits = 0;
    uint64_t pk_bits = 0;
    uint64_t ct_bits = 0;
    std::vector<std::string> warnings;  // table discrepancies, targets missed
    bool ok = true;                     // all security targets met
};

CostReport validate_paramset(const ParamSet& ps);

}  // namespace lrpc
