#pragma once

#include <cstdint>
#include <vector>

#include "lrpc/field.hpp"
#include "lrpc/fq_matrix.hpp"
#include "lrpc/small_field.hpp"

namespace lrpc {

/// Residue ring F_{q^m}[X]/(P) with P in F_q[X] of degree n. Elements are
/// coefficient vectors of length n over F_{q^m}. Because P has base-field
/// coefficients, multiplication by a ring element preserves the F_q-support
/// of the other factor.
class IdealRing {
public:
    IdealRing(const FieldContext& ctx, fqpoly::Poly P);

    const FieldContext& ctx() const { return *ctx_; }
    unsigned n() const { return n_; }
    const fqpoly::Poly& P() const { return P_; }

    ExtVector zero() const { return ExtVector(n_, ctx_->zero()); }
    ExtVector add(const ExtVector& a, const ExtVector& b) const;
    ExtVector mul(const ExtVector& a, const ExtVector& b) const;
    /// Inverse in the ring; returns false if a is not invertible.
    bool inverse(const ExtVector& a, ExtVector& out) const;

    /// Coefficient vector of X^i * a mod P (a rotation when P = X^n - 1).
    ExtVector shift(const ExtVector& a, unsigned i) const;

    bool is_zero(const ExtVector& a) const;

private:
    ExtVector mul_generic(const ExtVector& a, const ExtVector& b) const;
    ExtVector mul_gf2(const ExtVector& a, const ExtVector& b) const;
    void reduce(std::vector<ExtElement>& prod) const;  // degree < 2n-1 -> < n

    const FieldContext* ctx_;
    unsigned n_;
    fqpoly::Poly P_;                 // monic, degree n, coefficients in F_q
    std::vector<unsigned> taps_;     // exponents of nonzero low terms of P (q = 2)
    std::vector<uint8_t> low_;       // low coefficients of P for general q
};

}  // namespace lrpc
