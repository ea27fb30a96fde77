#include "lrpc/lrpc_code.hpp"

#include <stdexcept>

namespace lrpc {

// --- CoordinateSolver -------------------------------------------------------

CoordinateSolver::CoordinateSolver(const FieldContext& ctx, const ExtVector& gens)
    : ctx_(&ctx), t_(gens.size()), independent_(false) {
    const unsigned m = ctx.m();
    // RREF of [G | I] where column j of G holds gens[j]; the right block then
    // records the row transform T with T*G = [I_t; 0] when gens are independent
    FqMatrix aug(ctx.base(), m, t_ + m);
    for (size_t j = 0; j < t_; ++j)
        for (unsigned i = 0; i < m; ++i) aug.set(i, j, gens[j].coords[i]);
    for (unsigned i = 0; i < m; ++i) aug.set(i, t_ + i, 1);
    std::vector<size_t> pivots;
    aug.rref(&pivots);
    independent_ = t_ == 0 || (pivots.size() >= t_ && pivots[t_ - 1] == t_ - 1);
    transform_ = FqMatrix(ctx.base(), m, m);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) transform_.set(i, j, aug.at(i, t_ + j));
    pivots_ = std::move(pivots);
}

bool CoordinateSolver::coords(const ExtElement& v, uint8_t* out) const {
    if (!independent_) return false;
    const SmallField& fq = ctx_->base();
    const unsigned m = ctx_->m();
    // w = T*v; first t_ entries are the coordinates, the rest must vanish
    for (unsigned i = 0; i < m; ++i) {
        uint8_t acc = 0;
        const uint8_t* row = transform_.row(i);
        if (fq.q() == 2) {
            for (unsigned j = 0; j < m; ++j)
                if (row[j] & v.coords[j]) acc ^= 1;
        } else {
            for (unsigned j = 0; j < m; ++j)
                if (row[j] && v.coords[j]) acc = fq.add(acc, fq.mul(row[j], v.coords[j]));
        }
        if (i < t_) {
            out[i] = acc;
        } else if (acc) {
            return false;
        }
    }
    return true;
}

// --- LrpcCode ---------------------------------------------------------------

LrpcCode::LrpcCode(const FieldContext& ctx, Subspace F, ExtMatrix H)
    : ctx_(&ctx), F_(std::move(F)), H_(std::move(H)) {}

LrpcCode LrpcCode::random(const FieldContext& ctx, unsigned n, unsigned k, unsigned d,
                          Rng& rng) {
    if (k >= n || d == 0 || d > ctx.m()) throw std::domain_error("bad code parameters");
    for (;;) {
        Subspace F = Subspace::random(ctx, d, rng);
        ExtMatrix H(ctx, n - k, n);
        ExtVector entries;
        entries.reserve(size_t(n - k) * n);
        for (unsigned i = 0; i < n - k; ++i)
            for (unsigned j = 0; j < n; ++j) {
                H.at(i, j) = F.random_element(rng);
                entries.push_back(H.at(i, j));
            }
        if (Subspace(ctx, entries).dim() != d) continue;  // entries must span F
        LrpcCode code(ctx, std::move(F), std::move(H));
        // only keep codes whose condensed coordinate system pins the error
        // down uniquely; otherwise rank-1 codewords make decoding ambiguous.
        // checked before the (costlier) extension-field rank test: at q=2
        // it rejects most candidates
        if (size_t(n - k) * d >= n && !CondensedSolver(code).ok()) continue;
        if (code.H().rank() != n - k) continue;
        return code;
    }
}

ExtVector LrpcCode::syndrome(const ExtVector& e) const {
    return H_.apply(e);
}

Subspace LrpcCode::syndrome_space(const ExtVector& s) const {
    return Subspace(*ctx_, s);
}

Subspace LrpcCode::recover_support(const Subspace& S) const {
    const ExtVector& fb = F_.basis();
    Subspace E = S.scale(ctx_->inv(fb[0]));
    for (size_t i = 1; i < fb.size(); ++i) {
        if (E.dim() == 0) break;
        E = E.intersect(S.scale(ctx_->inv(fb[i])));
    }
    return E;
}

bool LrpcCode::solve_support_constrained(const Subspace& E, const ExtVector& s,
                                         ExtVector* e_out) const {
    const unsigned m = ctx_->m();
    const unsigned n = this->n();
    const unsigned rows = redundancy();
    const unsigned re = E.dim();
    if (re == 0) {
        bool zero = true;
        for (const ExtElement& si : s)
            if (!ctx_->is_zero(si)) { zero = false; break; }
        if (zero && e_out) e_out->assign(n, ctx_->zero());
        return zero;
    }
    // unknowns e_{jv} over F_q; equation block i is the unfold of
    // sum_j H[i][j] * e_j = s_i
    FqMatrix A(ctx_->base(), size_t(rows) * m, size_t(n) * re);
    std::vector<uint8_t> b(size_t(rows) * m);
    for (unsigned i = 0; i < rows; ++i) {
        for (unsigned j = 0; j < n; ++j)
            for (unsigned v = 0; v < re; ++v) {
                ExtElement prod = ctx_->mul(H_.at(i, j), E.basis()[v]);
                for (unsigned t = 0; t < m; ++t)
                    A.set(size_t(i) * m + t, size_t(j) * re + v, prod.coords[t]);
            }
        for (unsigned t = 0; t < m; ++t) b[size_t(i) * m + t] = s[i].coords[t];
    }
    std::vector<uint8_t> x;
    if (!A.solve(b, x)) return false;
    if (e_out) {
        e_out->assign(n, ctx_->zero());
        for (unsigned j = 0; j < n; ++j)
            for (unsigned v = 0; v < re; ++v)
                if (x[size_t(j) * re + v])
                    ctx_->add_in_place(
                        (*e_out)[j],
                        ctx_->scalar_mul(x[size_t(j) * re + v], E.basis()[v]));
    }
    return true;
}

// --- CondensedSolver --------------------------------------------------------

CondensedSolver::CondensedSolver(const LrpcCode& code) : code_(&code) {
    const FieldContext& ctx = code.ctx();
    const unsigned n = code.n();
    const unsigned rows = code.redundancy();
    const unsigned d = code.d();
    if (size_t(rows) * d < n) return;  // not enough equations per basis vector

    CoordinateSolver fcoords(ctx, code.support().basis());
    if (!fcoords.independent()) return;

    // condensed matrix row (i, u): entries h_iju over j
    FqMatrix C(ctx.base(), size_t(rows) * d, n);
    std::vector<uint8_t> hc(d);
    for (unsigned i = 0; i < rows; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (!fcoords.coords(code.H().at(i, j), hc.data())) return;
            for (unsigned u = 0; u < d; ++u) C.set(size_t(i) * d + u, j, hc[u]);
        }

    // greedy selection of n independent rows, in row order, by incremental
    // elimination against the pivots collected so far
    FqMatrix A(ctx.base(), n, n);
    std::vector<std::pair<unsigned, unsigned>> sel;
    {
        const SmallField& fq = ctx.base();
        std::vector<std::vector<uint8_t>> echelon;  // reduced rows with pivot recorded
        std::vector<unsigned> pivot_of;             // pivot column of echelon[i]
        size_t have = 0;
        for (size_t row = 0; row < size_t(rows) * d && have < n; ++row) {
            std::vector<uint8_t> w(n);
            for (unsigned j = 0; j < n; ++j) w[j] = C.at(row, j);
            for (size_t e = 0; e < echelon.size(); ++e) {
                uint8_t c = w[pivot_of[e]];
                if (!c) continue;
                for (unsigned j = 0; j < n; ++j)
                    w[j] = fq.sub(w[j], fq.mul(c, echelon[e][j]));
            }
            unsigned p = n;
            for (unsigned j = 0; j < n; ++j)
                if (w[j]) { p = j; break; }
            if (p == n) continue;
            uint8_t inv = fq.inv(w[p]);
            if (inv != 1)
                for (unsigned j = 0; j < n; ++j) w[j] = fq.mul(inv, w[j]);
            echelon.push_back(std::move(w));
            pivot_of.push_back(p);
            for (unsigned j = 0; j < n; ++j) A.set(have, j, C.at(row, j));
            sel.emplace_back(unsigned(row / d), unsigned(row % d));
            ++have;
        }
        if (have < n) return;
    }
    if (!A.invert(D_)) return;
    rows_ = std::move(sel);
    ok_ = true;
}

bool CondensedSolver::solve(const Subspace& E, const ExtVector& s, ExtVector* e_out,
                            SolveStats* stats) const {
    if (!ok_) return false;
    const LrpcCode& code = *code_;
    const FieldContext& ctx = code.ctx();
    const SmallField& fq = ctx.base();
    const unsigned n = code.n();
    const unsigned d = code.d();
    const unsigned r = E.dim();
    if (r == 0) {
        for (const ExtElement& si : s)
            if (!ctx.is_zero(si)) return false;
        if (e_out) e_out->assign(n, ctx.zero());
        return true;
    }

    // product basis f_u e'_v, u-major; coordinates of each syndrome entry
    ExtVector prods;
    prods.reserve(size_t(d) * r);
    for (unsigned u = 0; u < d; ++u)
        for (unsigned v = 0; v < r; ++v)
            prods.push_back(ctx.mul(code.support().basis()[u], E.basis()[v]));
    CoordinateSolver pcoords(ctx, prods);
    if (!pcoords.independent()) return false;  // dim EF < rd

    std::vector<uint8_t> sigma(s.size() * size_t(d) * r);
    for (size_t i = 0; i < s.size(); ++i)
        if (!pcoords.coords(s[i], sigma.data() + i * size_t(d) * r))
            return false;  // syndrome coordinate outside the product space

    // per basis index v: e_{jv} = D * (sigma at the selected rows)
    std::vector<uint8_t> evec(size_t(n) * r, 0);
    std::vector<uint8_t> rhs(n);
    uint64_t mults = 0;
    for (unsigned v = 0; v < r; ++v) {
        for (unsigned t = 0; t < n; ++t) {
            auto [i, u] = rows_[t];
            rhs[t] = sigma[size_t(i) * d * r + size_t(u) * r + v];
        }
        for (unsigned j = 0; j < n; ++j) {
            uint8_t acc = 0;
            const uint8_t* drow = D_.row(j);
            if (fq.q() == 2) {
                for (unsigned t = 0; t < n; ++t)
                    if (drow[t] & rhs[t]) acc ^= 1;
            } else {
                for (unsigned t = 0; t < n; ++t)
                    if (drow[t] && rhs[t]) acc = fq.add(acc, fq.mul(drow[t], rhs[t]));
            }
            mults += n;
            evec[size_t(j) * r + v] = acc;
        }
    }
    if (stats) stats->apply_mults = mults;

    if (e_out) {
        e_out->assign(n, ctx.zero());
        for (unsigned j = 0; j < n; ++j)
            for (unsigned v = 0; v < r; ++v) {
                uint8_t c = evec[size_t(j) * r + v];
                if (!c) continue;
                if (c == 1)
                    ctx.add_in_place((*e_out)[j], E.basis()[v]);
                else
                    ctx.add_in_place((*e_out)[j], ctx.scalar_mul(c, E.basis()[v]));
            }
    }
    return true;
}

// --- decoder ----------------------------------------------------------------

std::optional<ExtVector> decode_basic(const LrpcCode& code, const CondensedSolver& solver,
                                      const ExtVector& s, unsigned r, DecodeReport* rep) {
    const FieldContext& ctx = code.ctx();
    Subspace S = code.syndrome_space(s);
    if (rep) rep->dim_S = S.dim();
    if (S.dim() == 0) {
        if (rep) {
            rep->dim_support = 0;
            rep->support_ok = true;
            rep->solved = true;
        }
        return ExtVector(code.n(), ctx.zero());
    }
    Subspace E = code.recover_support(S);
    if (rep) rep->dim_support = E.dim();
    if (E.dim() != r) return std::nullopt;
    if (rep) rep->support_ok = true;
    ExtVector e;
    if (!solver.solve(E, s, &e)) {
        // degenerate product basis etc.; fall back to the full system
        if (!code.solve_support_constrained(E, s, &e)) return std::nullopt;
    }
    if (code.syndrome(e) != s) return std::nullopt;
    if (rep) rep->solved = true;
    return e;
}

ExtVector random_vector_with_support(const Subspace& E, unsigned n, Rng& rng) {
    if (E.dim() > n) throw std::domain_error("vector too short for the support");
    const FieldContext& ctx = E.ctx();
    if (E.dim() == 0) return ExtVector(n, ctx.zero());
    for (;;) {
        ExtVector v;
        v.reserve(n);
        for (unsigned i = 0; i < n; ++i) v.push_back(E.random_element(rng));
        if (Subspace(ctx, v).dim() == E.dim()) return v;
    }
}

}  // namespace lrpc
