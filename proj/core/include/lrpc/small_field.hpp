#pragma once

#include <cstdint>
#include <vector>

namespace lrpc {

/// Arithmetic in a small finite field F_q, q = p^s <= 256, backed by
/// precomputed tables. Elements are integers in [0, q) whose base-p digits
/// are the coordinates in the power basis of a fixed irreducible polynomial
/// over F_p (lexicographically least, so the encoding is canonical).
class SmallField {
public:
    explicit SmallField(unsigned q);

    unsigned q() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned extension_degree() const { return s_; }

    uint8_t add(uint8_t a, uint8_t b) const {
        return p_ == 2 ? static_cast<uint8_t>(a ^ b) : add_[size_t(a) * q_ + b];
    }
    uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
    uint8_t neg(uint8_t a) const { return p_ == 2 ? a : neg_[a]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[size_t(a) * q_ + b]; }
    /// Inverse of a nonzero element; throws std::domain_error on zero.
    uint8_t inv(uint8_t a) const;

private:
    unsigned q_, p_, s_;
    std::vector<uint8_t> add_;  // empty when p == 2
    std::vector<uint8_t> neg_;  // empty when p == 2
    std::vector<uint8_t> mul_;
    std::vector<uint8_t> inv_;
};

/// Dense polynomials over F_q, little-endian coefficient vectors.
/// Shared by the extension-field layer and the ideal-modulus handling.
namespace fqpoly {

using Poly = std::vector<uint8_t>;

void normalize(Poly& f);
int degree(const Poly& f);
Poly add(const SmallField& fq, const Poly& a, const Poly& b);
Poly mul(const SmallField& fq, const Poly& a, const Poly& b);
/// Remainder of a modulo monic f.
Poly mod(const SmallField& fq, Poly a, const Poly& f);
Poly mulmod(const SmallField& fq, const Poly& a, const Poly& b, const Poly& f);
Poly gcd(const SmallField& fq, Poly a, Poly b);
/// a^(q) mod f via square-and-multiply on the exponent q.
Poly pow_q_mod(const SmallField& fq, const Poly& a, const Poly& f);
bool is_irreducible(const SmallField& fq, const Poly& f);
/// The lexicographically least monic irreducible polynomial of degree m:
/// candidates x^m + g(x) are scanned with the low-order coefficients of g
/// enumerated as ascending base-q integers.
Poly lex_least_irreducible(const SmallField& fq, unsigned m);

}  // namespace fqpoly

}  // namespace lrpc
