#include "lrpc/ring.hpp"

#include <cstring>
#include <stdexcept>

namespace lrpc {

IdealRing::IdealRing(const FieldContext& ctx, fqpoly::Poly P) : ctx_(&ctx), P_(std::move(P)) {
    fqpoly::normalize(P_);
    int deg = fqpoly::degree(P_);
    if (deg < 1) throw std::domain_error("modulus degree must be positive");
    if (P_[size_t(deg)] != 1) throw std::domain_error("modulus must be monic");
    for (uint8_t c : P_)
        if (c >= ctx.q()) throw std::domain_error("modulus coefficient out of base field");
    n_ = unsigned(deg);
    low_.assign(P_.begin(), P_.begin() + n_);
    if (ctx.q() == 2)
        for (unsigned i = 0; i < n_; ++i)
            if (P_[i]) taps_.push_back(i);
}

ExtVector IdealRing::add(const ExtVector& a, const ExtVector& b) const {
    ExtVector r = a;
    for (unsigned i = 0; i < n_; ++i) ctx_->add_in_place(r[i], b[i]);
    return r;
}

bool IdealRing::is_zero(const ExtVector& a) const {
    for (const ExtElement& e : a)
        if (!ctx_->is_zero(e)) return false;
    return true;
}

void IdealRing::reduce(std::vector<ExtElement>& prod) const {
    // prod has degree <= 2n-2; since P is monic with base-field coefficients,
    // each high coefficient folds down by scalar multiples
    for (size_t i = prod.size(); i-- > n_;) {
        if (ctx_->is_zero(prod[i])) continue;
        ExtElement c = std::move(prod[i]);
        prod[i] = ctx_->zero();
        if (ctx_->q() == 2) {
            for (unsigned t : taps_) ctx_->add_in_place(prod[i - n_ + t], c);
        } else {
            for (unsigned t = 0; t < n_; ++t) {
                if (!low_[t]) continue;
                ExtElement sub = ctx_->scalar_mul(ctx_->base().neg(low_[t]), c);
                ctx_->add_in_place(prod[i - n_ + t], sub);
            }
        }
    }
    prod.resize(n_);
}

ExtVector IdealRing::mul_gf2(const ExtVector& a, const ExtVector& b) const {
    // pack once, accumulate the full unreduced polynomial product, reduce
    // each coefficient mod the field modulus, then fold mod P
    const size_t w = ctx_->words();
    std::vector<uint64_t> pa(n_ * w), pb(n_ * w);
    for (unsigned i = 0; i < n_; ++i) {
        ctx_->pack(a[i], pa.data() + i * w);
        ctx_->pack(b[i], pb.data() + i * w);
    }
    const size_t pw = 2 * w;
    std::vector<uint64_t> acc((2 * n_ - 1) * pw, 0);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j)
            ctx_->clmul_acc(pa.data() + i * w, pb.data() + j * w,
                            acc.data() + (i + j) * pw);
    std::vector<ExtElement> prod(2 * n_ - 1);
    for (unsigned i = 0; i < 2 * n_ - 1; ++i) {
        ctx_->reduce_packed(acc.data() + i * pw);
        prod[i] = ctx_->unpack(acc.data() + i * pw);
    }
    reduce(prod);
    return prod;
}

ExtVector IdealRing::mul_generic(const ExtVector& a, const ExtVector& b) const {
    std::vector<ExtElement> prod(2 * n_ - 1, ctx_->zero());
    for (unsigned i = 0; i < n_; ++i) {
        if (ctx_->is_zero(a[i])) continue;
        for (unsigned j = 0; j < n_; ++j)
            ctx_->add_in_place(prod[i + j], ctx_->mul(a[i], b[j]));
    }
    reduce(prod);
    return prod;
}

ExtVector IdealRing::mul(const ExtVector& a, const ExtVector& b) const {
    if (a.size() != n_ || b.size() != n_) throw std::domain_error("length mismatch");
    return ctx_->q() == 2 ? mul_gf2(a, b) : mul_generic(a, b);
}

ExtVector IdealRing::shift(const ExtVector& a, unsigned i) const {
    std::vector<ExtElement> prod(n_ + i, ctx_->zero());
    for (unsigned j = 0; j < n_; ++j) prod[j + i] = a[j];
    reduce(prod);
    return prod;
}

bool IdealRing::inverse(const ExtVector& a, ExtVector& out) const {
    if (a.size() != n_) throw std::domain_error("length mismatch");
    // extended Euclid in F_{q^m}[X] against P (which stays the modulus even
    // though its coefficients happen to lie in the base field)
    using EPoly = std::vector<ExtElement>;
    auto deg = [&](const EPoly& f) -> int {
        for (size_t i = f.size(); i-- > 0;)
            if (!ctx_->is_zero(f[i])) return int(i);
        return -1;
    };
    EPoly r0(P_.size());
    for (size_t i = 0; i < P_.size(); ++i) {
        r0[i] = ctx_->zero();
        r0[i].coords[0] = P_[i];
    }
    EPoly r1 = a;
    EPoly t0, t1{ctx_->one()};
    int d1 = deg(r1);
    if (d1 < 0) return false;
    while (d1 > 0) {
        ExtElement lead_inv = ctx_->inv(r1[size_t(d1)]);
        EPoly rem = r0;
        EPoly quot(size_t(deg(r0) - d1 + 1), ctx_->zero());
        for (int i = deg(rem); i >= d1; i = deg(rem)) {
            ExtElement c = ctx_->mul(rem[size_t(i)], lead_inv);
            quot[size_t(i - d1)] = c;
            for (int j = 0; j <= d1; ++j) {
                ExtElement t = ctx_->mul(c, r1[size_t(j)]);
                rem[size_t(i - d1 + j)] = ctx_->sub(rem[size_t(i - d1 + j)], t);
            }
        }
        // t2 = t0 - quot * t1
        EPoly qt(quot.size() + t1.size() - 1, ctx_->zero());
        for (size_t i = 0; i < quot.size(); ++i) {
            if (ctx_->is_zero(quot[i])) continue;
            for (size_t j = 0; j < t1.size(); ++j)
                ctx_->add_in_place(qt[i + j], ctx_->mul(quot[i], t1[j]));
        }
        EPoly t2(std::max(t0.size(), qt.size()), ctx_->zero());
        for (size_t i = 0; i < t2.size(); ++i) {
            ExtElement x = i < t0.size() ? t0[i] : ctx_->zero();
            ExtElement y = i < qt.size() ? qt[i] : ctx_->zero();
            t2[i] = ctx_->sub(x, y);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
        d1 = deg(r1);
        if (d1 < 0) return false;  // gcd has positive degree: not invertible
    }
    ExtElement scale = ctx_->inv(r1[0]);
    out.assign(n_, ctx_->zero());
    for (size_t i = 0; i < t1.size() && i < n_; ++i) out[i] = ctx_->mul(scale, t1[i]);
    return true;
}

}  // namespace lrpc
