#include "lrpc/expansion.hpp"

#include <stdexcept>

namespace lrpc {

namespace {

// f_i^{-1} S
Subspace shifted(const Subspace& S, const ExtElement& f) {
    return S.scale(S.ctx().inv(f));
}

Subspace intersect_counted(const Subspace& A, const Subspace& B, ExpansionReport* rep) {
    if (rep) {
        rep->intersections += 1;
        rep->base_ops += 4ull * A.dim() * B.dim() * A.ctx().m();
    }
    return A.intersect(B);
}

void finish(const Subspace& S, unsigned rd, ExpansionReport* rep) {
    if (rep) {
        rep->final_dim = S.dim();
        rep->recovered = S.dim() == rd;
    }
}

}  // namespace

Subspace expand_decode(const Subspace& S_in, const Subspace& F, unsigned r,
                       ExpansionReport* rep) {
    const FieldContext& ctx = S_in.ctx();
    const unsigned d = F.dim();
    const unsigned rd = r * d;
    if (d < 2) throw std::domain_error("expansion needs d >= 2");
    Subspace S = S_in;
    if (S.dim() >= rd) {
        finish(S, rd, rep);
        return S;
    }
    // scalars f_i f_j^{-1} are fixed for the whole run
    std::vector<std::vector<ExtElement>> ratio(d, std::vector<ExtElement>(d, ctx.zero()));
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j)
            if (i != j) ratio[i][j] = ctx.mul(F.basis()[i], ctx.inv(F.basis()[j]));

    for (;;) {
        if (rep) rep->iterations += 1;
        unsigned before = S.dim();
        for (unsigned i = 0; i < d && S.dim() < rd; ++i)
            for (unsigned j = 0; j < d; ++j) {
                if (j == i) continue;
                for (unsigned k = 0; k < d && S.dim() < rd; ++k)
                    for (unsigned l = 0; l < d; ++l) {
                        if (l == k || (i == k && j == l)) continue;
                        Subspace A = S.add(S.scale(ratio[i][j]));
                        Subspace B = S.add(S.scale(ratio[k][l]));
                        S = intersect_counted(A, B, rep);
                        if (S.dim() >= rd) break;
                    }
            }
        if (S.dim() >= rd || S.dim() == before) break;
    }
    finish(S, rd, rep);
    return S;
}

Subspace expand_prob(const Subspace& S_in, const Subspace& F, unsigned r,
                     ExpansionReport* rep) {
    const FieldContext& ctx = S_in.ctx();
    const unsigned d = F.dim();
    const unsigned rd = r * d;
    if (d < 2) throw std::domain_error("expansion needs d >= 2");
    Subspace S = S_in;
    if (S.dim() >= rd) {
        finish(S, rd, rep);
        return S;
    }
    std::vector<ExtElement> finv(d, ctx.zero());
    for (unsigned i = 0; i < d; ++i) finv[i] = ctx.inv(F.basis()[i]);

    for (;;) {
        if (rep) rep->iterations += 1;
        unsigned before = S.dim();
        for (unsigned i = 0; i < d && S.dim() < rd; ++i)
            for (unsigned j = i + 1; j < d; ++j) {
                Subspace Si = S.scale(finv[i]);
                Subspace Sj = S.scale(finv[j]);
                Subspace Sij = intersect_counted(Si, Sj, rep);
                if (Sij.dim() == 0) continue;
                Subspace cand = S.add(F.product(Sij));
                // discard additions that overshoot rd: they carry stray
                // vectors picked up when m is tight
                if (cand.dim() <= rd) S = std::move(cand);
                if (S.dim() >= rd) break;
            }
        if (S.dim() >= rd || S.dim() == before) break;
    }
    finish(S, rd, rep);
    return S;
}

Subspace expand_crypto(const Subspace& S_in, const Subspace& F, unsigned r,
                       ExpansionReport* rep) {
    const FieldContext& ctx = S_in.ctx();
    const unsigned d = F.dim();
    const unsigned rd = r * d;
    if (d < 3) throw std::domain_error("fixed-shape expansion needs d >= 3");
    if (rep) rep->iterations = 1;

    // all shifted copies come from the input space, so the intersection
    // count below is a constant of d alone
    std::vector<Subspace> Si;
    Si.reserve(d);
    for (unsigned i = 0; i < d; ++i) Si.push_back(shifted(S_in, F.basis()[i]));

    std::vector<Subspace> adj;  // S_{i,i+1}, i = 0..d-2
    adj.reserve(d - 1);
    for (unsigned i = 0; i + 1 < d; ++i)
        adj.push_back(intersect_counted(Si[i], Si[i + 1], rep));

    Subspace S = S_in;
    for (unsigned i = 0; i + 2 < d; ++i) {
        Subspace skip = intersect_counted(Si[i], Si[i + 2], rep);  // S_{i,i+2}
        Subspace U = adj[i].add(adj[i + 1]).add(skip);
        Subspace cand = S.add(F.product(U));
        if (cand.dim() <= rd) S = std::move(cand);
    }
    finish(S, rd, rep);
    return S;
}

}  // namespace lrpc
