#include "lrpc/subspace.hpp"

#include <stdexcept>

#include "lrpc/rng.hpp"

namespace lrpc {

Subspace::Subspace(const FieldContext& ctx, const ExtVector& gens) : ctx_(&ctx) {
    reduce(gens);
}

void Subspace::reduce(ExtVector gens) {
    const unsigned m = ctx_->m();
    FqMatrix mat(ctx_->base(), gens.size(), m);
    for (size_t i = 0; i < gens.size(); ++i)
        for (unsigned j = 0; j < m; ++j) mat.set(i, j, gens[i].coords[j]);
    size_t rk = mat.rref();
    basis_.clear();
    basis_.reserve(rk);
    for (size_t i = 0; i < rk; ++i) {
        ExtElement e = ctx_->zero();
        for (unsigned j = 0; j < m; ++j) e.coords[j] = mat.at(i, j);
        basis_.push_back(std::move(e));
    }
}

bool Subspace::contains(const ExtElement& v) const {
    // RREF basis: eliminate pivot coordinates one by one
    std::vector<uint8_t> w = v.coords;
    const SmallField& fq = ctx_->base();
    for (const ExtElement& b : basis_) {
        unsigned p = 0;
        while (!b.coords[p]) ++p;  // pivot is 1 in RREF
        uint8_t c = w[p];
        if (!c) continue;
        for (unsigned j = p; j < ctx_->m(); ++j)
            w[j] = fq.sub(w[j], fq.mul(c, b.coords[j]));
    }
    for (uint8_t c : w)
        if (c) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const ExtElement& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

Subspace Subspace::add(const Subspace& other) const {
    ExtVector gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return Subspace(*ctx_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
    // Zassenhaus: rows [a | a] for our basis, [b | 0] for the other's; after
    // elimination, rows with zero left half carry a basis of the
    // intersection in the right half.
    const unsigned m = ctx_->m();
    const size_t a = basis_.size(), b = other.basis_.size();
    FqMatrix mat(ctx_->base(), a + b, 2 * m);
    for (size_t i = 0; i < a; ++i)
        for (unsigned j = 0; j < m; ++j) {
            mat.set(i, j, basis_[i].coords[j]);
            mat.set(i, m + j, basis_[i].coords[j]);
        }
    for (size_t i = 0; i < b; ++i)
        for (unsigned j = 0; j < m; ++j) mat.set(a + i, j, other.basis_[i].coords[j]);
    size_t rk = mat.rref();
    ExtVector gens;
    for (size_t i = 0; i < rk; ++i) {
        bool left_zero = true;
        for (unsigned j = 0; j < m; ++j)
            if (mat.at(i, j)) { left_zero = false; break; }
        if (!left_zero) continue;
        ExtElement e = ctx_->zero();
        for (unsigned j = 0; j < m; ++j) e.coords[j] = mat.at(i, m + j);
        gens.push_back(std::move(e));
    }
    return Subspace(*ctx_, gens);
}

Subspace Subspace::scale(const ExtElement& c) const {
    if (ctx_->is_zero(c)) throw std::domain_error("scaling a subspace by zero");
    ExtVector gens;
    gens.reserve(basis_.size());
    for (const ExtElement& b : basis_) gens.push_back(ctx_->mul(c, b));
    return Subspace(*ctx_, gens);
}

Subspace Subspace::product(const Subspace& other) const {
    ExtVector gens;
    gens.reserve(basis_.size() * other.basis_.size());
    for (const ExtElement& a : basis_)
        for (const ExtElement& b : other.basis_) gens.push_back(ctx_->mul(a, b));
    return Subspace(*ctx_, gens);
}

bool Subspace::operator==(const Subspace& o) const {
    return ctx_ == o.ctx_ && basis_ == o.basis_;
}

std::vector<uint8_t> Subspace::encode() const {
    std::vector<uint8_t> out;
    out.push_back(uint8_t(basis_.size()));
    size_t eb = ctx_->elem_bytes();
    out.resize(1 + basis_.size() * eb);
    for (size_t i = 0; i < basis_.size(); ++i)
        ctx_->serialize(basis_[i], out.data() + 1 + i * eb);
    return out;
}

Subspace Subspace::random(const FieldContext& ctx, unsigned k, Rng& rng) {
    if (k > ctx.m()) throw std::domain_error("subspace dimension exceeds m");
    for (;;) {
        ExtVector gens;
        gens.reserve(k);
        for (unsigned i = 0; i < k; ++i) gens.push_back(ctx.random(rng));
        Subspace s(ctx, gens);
        if (s.dim() == k) return s;
    }
}

Subspace Subspace::random_subspace_of(const Subspace& ambient, unsigned k, Rng& rng) {
    if (k > ambient.dim()) throw std::domain_error("dimension exceeds ambient space");
    for (;;) {
        ExtVector gens;
        gens.reserve(k);
        for (unsigned i = 0; i < k; ++i) gens.push_back(ambient.random_element(rng));
        Subspace s(*ambient.ctx_, gens);
        if (s.dim() == k) return s;
    }
}

ExtElement Subspace::random_element(Rng& rng) const {
    ExtElement e = ctx_->zero();
    const unsigned q = ctx_->q();
    for (const ExtElement& b : basis_) {
        uint8_t c = q == 2 ? uint8_t(rng.next() & 1) : uint8_t(rng.below(q));
        if (!c) continue;
        if (c == 1)
            ctx_->add_in_place(e, b);
        else
            ctx_->add_in_place(e, ctx_->scalar_mul(c, b));
    }
    return e;
}

}  // namespace lrpc
