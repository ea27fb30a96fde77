#include "lrpc/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lrpc {

namespace {

constexpr double kOmega = 2.807354922057604;  // log2(7)

double log2_q(unsigned q) { return std::log2(double(q)); }

// log2(1 - q^-e) computed stably for large e
double log2_one_minus_qpow(double neg_exp_log2) {
    // neg_exp_log2 = log2 of the subtracted quantity (must be < 0)
    long double x = std::exp2l((long double)neg_exp_log2);
    return double(std::log1pl(-x) / std::log(2.0L));
}

double log2_sum(double a, double b) {
    // log2(2^a + 2^b)
    if (a < b) std::swap(a, b);
    return a + double(std::log1pl(std::exp2l((long double)(b - a))) / std::log(2.0L));
}

}  // namespace

double gaussian_binomial_log2(unsigned m, unsigned w, unsigned q) {
    if (w > m) throw std::domain_error("subspace dimension exceeds ambient dimension");
    const double lq = log2_q(q);
    long double acc = 0;
    // prod_{i=0}^{w-1} (q^m - q^i)/(q^w - q^i) = prod q^{m-w} (1-q^{i-m})/(1-q^{i-w})
    for (unsigned i = 0; i < w; ++i) {
        acc += (long double)(m - w) * lq;
        acc += log2_one_minus_qpow((double(i) - double(m)) * lq);
        acc -= log2_one_minus_qpow((double(i) - double(w)) * lq);
    }
    return double(acc);
}

double structural_attack_log2(const ParamSet& ps) {
    double nm = double(ps.n) * double(ps.m);
    double exp = double(ps.d) * std::ceil(ps.m / 2.0) - ps.m - ps.n;
    return kOmega * std::log2(nm) + exp * log2_q(ps.q);
}

double generic_attack_log2(const ParamSet& ps) {
    double nm = double(ps.n) * double(ps.m);
    double exp = double(ps.r) * std::ceil(double(ps.m) * (ps.n + 1) / (2.0 * ps.n)) - ps.m;
    return kOmega * std::log2(nm) + exp * log2_q(ps.q);
}

double quantum_generic_attack_log2(const ParamSet& ps) {
    double nm = double(ps.n) * double(ps.m);
    double exp =
        (double(ps.r) / 2.0) * std::ceil(double(ps.m) * (ps.n + 1) / (2.0 * ps.n)) - ps.m;
    return kOmega * std::log2(nm) + exp * log2_q(ps.q);
}

double prob_c_equals_l_log2(unsigned q, unsigned n_minus_k, unsigned rd, unsigned l) {
    return -double(l) * (double(n_minus_k) - double(rd) + double(l)) * log2_q(q);
}

double rank_count_log2(unsigned q, unsigned n, unsigned m, unsigned t) {
    if (t > n || t > m) throw std::domain_error("rank exceeds matrix dimensions");
    const double lq = log2_q(q);
    long double acc = 0;
    // prod_{j=0}^{t-1} (q^n - q^j)(q^m - q^j) / (q^t - q^j)
    for (unsigned j = 0; j < t; ++j) {
        acc += double(n) * lq + log2_one_minus_qpow((double(j) - double(n)) * lq);
        acc += double(m) * lq + log2_one_minus_qpow((double(j) - double(m)) * lq);
        acc -= double(t) * lq + log2_one_minus_qpow((double(j) - double(t)) * lq);
    }
    return double(acc);
}

double rank_prob_log2(unsigned q, unsigned n, unsigned m, unsigned t) {
    return rank_count_log2(q, n, m, t) - double(n) * double(m) * log2_q(q);
}

namespace {

double failure_bound_log2_impl(const ParamSet& ps, bool q2_variant) {
    // ideal [2n, n] code: redundancy equals n
    const double lq = log2_q(ps.q);
    const double nk = ps.n;
    const double rd = double(ps.r) * ps.d;
    double codim1_exp = (q2_variant ? (1.0 - ps.r) : (2.0 - ps.r)) * (double(ps.d) - 2.0);
    double term1 = (codim1_exp + (rd - nk)) * lq;            // Prob(c=1) x residual failure
    double term2 = -2.0 * (nk - rd + 2.0) * lq;              // Prob(c >= 2)
    return log2_sum(term1, term2);
}

}  // namespace

double failure_bound_log2(const ParamSet& ps) { return failure_bound_log2_impl(ps, false); }

double failure_bound_log2_q2(const ParamSet& ps) { return failure_bound_log2_impl(ps, true); }

double p_ab_n(unsigned a, unsigned b, unsigned n, unsigned q) {
    if (a > n || b > n) throw std::domain_error("subspace dimension exceeds n");
    // P_{a,b}(n) = prod_{i=0}^{a-1} (1 - q^{i+b-n}) / (1 - q^{i-n})
    const double lq = log2_q(q);
    long double acc = 0;
    for (unsigned i = 0; i < a; ++i) {
        acc += log2_one_minus_qpow((double(i) + double(b) - double(n)) * lq);
        acc -= log2_one_minus_qpow((double(i) - double(n)) * lq);
    }
    return double(std::exp2l(acc));
}

double p_ab_n_approx(unsigned a, unsigned b, unsigned n, unsigned q) {
    double qa = std::pow(double(q), double(a));
    double qb = std::pow(double(q), double(b));
    return 1.0 - std::pow(double(q), -double(n)) * (qa - 1.0) * (qb - 1.0) / (q - 1.0);
}

CostReport validate_paramset(const ParamSet& ps) {
    CostReport rep;
    rep.name = ps.name;
    rep.structural_log2 = structural_attack_log2(ps);
    rep.generic_log2 = generic_attack_log2(ps);
    rep.quantum_generic_log2 = quantum_generic_attack_log2(ps);
    rep.pf_upper_log2 = failure_bound_log2(ps);
    rep.pf_upper_log2_q2 = failure_bound_log2_q2(ps);
    rep.entropy_bits = gaussian_binomial_log2(ps.m, ps.r, ps.q);
    unsigned bits = 1;
    while ((1u << bits) < ps.q) ++bits;
    rep.pk_bits = uint64_t(ps.n) * ps.m * bits;
    rep.ct_bits = rep.pk_bits;

    auto warn = [&](const std::string& msg) { rep.warnings.push_back(msg); };
    auto flag_delta = [&](const char* what, double got, double printed, double tol) {
        if (std::abs(got - printed) > tol) {
            std::ostringstream os;
            os << what << " computed " << got << " but table prints " << printed;
            warn(os.str());
        }
    };
    flag_delta("structural attack cost", rep.structural_log2, ps.table_structural, 2.0);
    flag_delta("generic attack cost", rep.generic_log2, ps.table_generic, 2.0);
    flag_delta("support entropy", rep.entropy_bits, ps.table_entropy, 2.0);
    if (rep.pk_bits != ps.table_pk_bits) {
        std::ostringstream os;
        os << "public key bits computed " << rep.pk_bits << " but table prints "
           << ps.table_pk_bits;
        warn(os.str());
    }

    if (ps.m < 2 * ps.r * ps.d - ps.r) {
        warn("m below the 2rd - r expansion precondition");
        rep.ok = false;
    }
    if (rep.entropy_bits < ps.target_security ||
        rep.structural_log2 < ps.target_security ||
        rep.generic_log2 < ps.target_security) {
        warn("security target missed");
        rep.ok = false;
    }
    return rep;
}

}  // namespace lrpc
