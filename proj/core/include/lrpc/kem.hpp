#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lrpc/field.hpp"
#include "lrpc/lrpc_code.hpp"
#include "lrpc/params.hpp"
#include "lrpc/ring.hpp"
#include "lrpc/rng.hpp"
#include "lrpc/subspace.hpp"

namespace lrpc {

using SharedKey = std::array<uint8_t, 32>;

struct PublicKey {
    const ParamSet* ps;
    ExtVector h;  // h = x^{-1} y mod P
};

struct SecretKey {
    const ParamSet* ps;
    ExtVector x, y;  // common support F of dimension d
};

struct KeyPair {
    PublicKey pk;
    SecretKey sk;
};

struct PkeCiphertext {
    ExtVector c;
    std::vector<uint8_t> mask;  // M xor keystream(E)
};

/// Hash of the canonical support encoding (domain-separated SHAKE256).
SharedKey support_hash(const Subspace& E);
/// Extendable-output variant for message masking.
std::vector<uint8_t> support_keystream(const Subspace& E, size_t len);

/// Support recovery from a syndrome of a homogeneous code: S from the
/// syndrome coordinates, fixed-shape expansion, then intersection of the
/// f_i^{-1} S. Returns the support, or nullopt when no error of support
/// dimension <= r is consistent with s.
std::optional<Subspace> rank_support_recover(const LrpcCode& code, const ExtVector& s,
                                             unsigned r);

/// KEM / PKE over a [2n, n] code with parity rows (X^i x | X^i y) mod P.
class IdealLrpc {
public:
    explicit IdealLrpc(const ParamSet& ps);

    const ParamSet& params() const { return *ps_; }
    const FieldContext& ctx() const { return *ctx_; }
    const IdealRing& ring() const { return ring_; }

    KeyPair keygen(Rng& rng) const;

    struct EncapResult {
        ExtVector c;
        SharedKey key;
    };
    EncapResult encap(const PublicKey& pk, Rng& rng) const;
    std::optional<SharedKey> decap(const SecretKey& sk, const ExtVector& c) const;

    PkeCiphertext encrypt(const PublicKey& pk, const std::vector<uint8_t>& msg,
                          Rng& rng) const;
    std::optional<std::vector<uint8_t>> decrypt(const SecretKey& sk,
                                                const PkeCiphertext& ct) const;

    /// Parity-check view of the secret key, used by decapsulation and tests.
    LrpcCode secret_code(const SecretKey& sk) const;

    size_t public_key_bits() const;   // n * m * bits_per_coord
    size_t ciphertext_bits() const;

private:
    const ParamSet* ps_;
    const FieldContext* ctx_;
    IdealRing ring_;
};

// --- file formats ---------------------------------------------------------
// All blobs start with magic "LRPC", a format version byte, a kind byte
// (pk/sk/ct/pke-ct) and the parameter-set id. Parsers throw
// std::runtime_error on any malformed input.

std::vector<uint8_t> serialize_public_key(const PublicKey& pk);
PublicKey parse_public_key(const std::vector<uint8_t>& blob);

std::vector<uint8_t> serialize_secret_key(const SecretKey& sk);
SecretKey parse_secret_key(const std::vector<uint8_t>& blob);

std::vector<uint8_t> serialize_ciphertext(const ParamSet& ps, const ExtVector& c);
ExtVector parse_ciphertext(const std::vector<uint8_t>& blob, const ParamSet** ps_out);

std::vector<uint8_t> serialize_pke_ciphertext(const ParamSet& ps, const PkeCiphertext& ct);
PkeCiphertext parse_pke_ciphertext(const std::vector<uint8_t>& blob, const ParamSet** ps_out);

}  // namespace lrpc
