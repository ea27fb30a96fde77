#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lrpc/small_field.hpp"

namespace lrpc {

/// Element of F_{q^m}: m coordinates over F_q in the power basis of the
/// context's defining polynomial. Coordinate values live in [0, q).
struct ExtElement {
    std::vector<uint8_t> coords;

    bool operator==(const ExtElement& o) const { return coords == o.coords; }
    bool operator!=(const ExtElement& o) const { return coords != o.coords; }
};

using ExtVector = std::vector<ExtElement>;

class Rng;

/// Arithmetic context for F_{q^m} = F_q[x]/(g), g the lexicographically
/// least monic irreducible polynomial of degree m over F_q. Contexts are
/// memoized: get() returns a reference valid for the process lifetime.
///
/// q = 2 uses a bit-packed word representation internally (carryless
/// multiplication plus sparse reduction); other q fall back to table-driven
/// schoolbook arithmetic.
class FieldContext {
public:
    static const FieldContext& get(unsigned q, unsigned m);

    unsigned q() const { return fq_.q(); }
    unsigned m() const { return m_; }
    const SmallField& base() const { return fq_; }
    const fqpoly::Poly& modulus() const { return modulus_; }

    ExtElement zero() const { return ExtElement{std::vector<uint8_t>(m_, 0)}; }
    ExtElement one() const;
    /// x^k for 0 <= k < m (a power-basis unit vector).
    ExtElement basis_elem(unsigned k) const;
    bool is_zero(const ExtElement& a) const;

    ExtElement add(const ExtElement& a, const ExtElement& b) const;
    ExtElement sub(const ExtElement& a, const ExtElement& b) const;
    ExtElement neg(const ExtElement& a) const;
    ExtElement mul(const ExtElement& a, const ExtElement& b) const;
    /// Inverse of a nonzero element; throws std::domain_error on zero.
    ExtElement inv(const ExtElement& a) const;
    ExtElement scalar_mul(uint8_t c, const ExtElement& a) const;

    void add_in_place(ExtElement& a, const ExtElement& b) const;

    ExtElement random(Rng& rng) const;

    // --- serialization ---------------------------------------------------
    /// Bits used per coordinate: ceil(log2 q).
    unsigned bits_per_coord() const { return bits_; }
    /// Serialized size of one element: ceil(m * bits_per_coord / 8).
    size_t elem_bytes() const { return elem_bytes_; }
    /// Little-endian bitstream, coordinate 0 in the lowest bit.
    void serialize(const ExtElement& a, uint8_t* out) const;
    ExtElement deserialize(const uint8_t* in) const;

    // --- q = 2 packed fast path -----------------------------------------
    bool packed() const { return q() == 2; }
    size_t words() const { return words_; }
    void pack(const ExtElement& a, uint64_t* w) const;
    ExtElement unpack(const uint64_t* w) const;
    /// w (2*words() wide, unreduced product of degree <= 2m-2) reduced
    /// modulo the defining polynomial, result in the low words() words.
    void reduce_packed(uint64_t* w) const;
    /// c (2*words() wide) += a * b as polynomials over F_2, no reduction.
    void clmul_acc(const uint64_t* a, const uint64_t* b, uint64_t* c) const;

    FieldContext(const FieldContext&) = delete;
    FieldContext& operator=(const FieldContext&) = delete;

private:
    FieldContext(unsigned q, unsigned m);

    SmallField fq_;
    unsigned m_;
    fqpoly::Poly modulus_;
    unsigned bits_;
    size_t elem_bytes_;
    size_t words_;                 // ceil(m/64) when q == 2, else 0
    std::vector<unsigned> taps_;   // exponents of nonzero modulus terms below m (q == 2)
};

/// Rank weight of a vector over F_{q^m}: rank of its m x n unfold over F_q.
unsigned rank_weight(const FieldContext& ctx, const ExtVector& v);

std::string to_string(const FieldContext& ctx, const ExtElement& a);

}  // namespace lrpc
