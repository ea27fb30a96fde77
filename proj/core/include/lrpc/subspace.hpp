#pragma once

#include <cstdint>
#include <vector>

#include "lrpc/field.hpp"
#include "lrpc/fq_matrix.hpp"

namespace lrpc {

/// F_q-subspace of F_{q^m}, stored as an RREF basis (one element per row,
/// coordinates as matrix columns), so equal subspaces compare equal.
class Subspace {
public:
    explicit Subspace(const FieldContext& ctx) : ctx_(&ctx) {}
    /// Span of the given elements.
    Subspace(const FieldContext& ctx, const ExtVector& gens);

    const FieldContext& ctx() const { return *ctx_; }
    unsigned dim() const { return unsigned(basis_.size()); }
    const ExtVector& basis() const { return basis_; }

    bool contains(const ExtElement& v) const;
    bool contains(const Subspace& other) const;

    /// Sum of subspaces.
    Subspace add(const Subspace& other) const;
    /// Intersection (Zassenhaus).
    Subspace intersect(const Subspace& other) const;
    /// { c * v : v in this } for nonzero c.
    Subspace scale(const ExtElement& c) const;
    /// Product space <a*b : a in this, b in other>.
    Subspace product(const Subspace& other) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Canonical encoding: dim byte followed by the serialized RREF basis
    /// rows. Equal subspaces produce identical bytes.
    std::vector<uint8_t> encode() const;

    /// Uniformly random k-dimensional subspace.
    static Subspace random(const FieldContext& ctx, unsigned k, Rng& rng);
    /// Uniformly random k-dimensional subspace of the given ambient space.
    static Subspace random_subspace_of(const Subspace& ambient, unsigned k, Rng& rng);

    /// Uniformly random element of the subspace.
    ExtElement random_element(Rng& rng) const;

private:
    void reduce(ExtVector gens);

    const FieldContext* ctx_;
    ExtVector basis_;  // RREF rows, nonzero, fixed size = dim
};

}  // namespace lrpc
