#include "lrpc/kem.hpp"

#include <cstring>
#include <stdexcept>

#include "lrpc/expansion.hpp"
#include "lrpc/shake.hpp"

namespace lrpc {

namespace {

constexpr uint8_t kFormatVersion = 1;
enum BlobKind : uint8_t { kPk = 1, kSk = 2, kCt = 3, kPkeCt = 4 };

void put_header(std::vector<uint8_t>& out, uint8_t kind, const ParamSet& ps) {
    out.insert(out.end(), {'L', 'R', 'P', 'C', kFormatVersion, kind, ps.id});
}

const ParamSet& check_header(const std::vector<uint8_t>& blob, uint8_t kind, size_t* off) {
    if (blob.size() < 7 || std::memcmp(blob.data(), "LRPC", 4) != 0)
        throw std::runtime_error("bad magic");
    if (blob[4] != kFormatVersion) throw std::runtime_error("unsupported format version");
    if (blob[5] != kind) throw std::runtime_error("wrong blob kind");
    const ParamSet* ps = find_paramset(blob[6]);
    if (!ps) throw std::runtime_error("unknown parameter set");
    *off = 7;
    return *ps;
}

void put_ring(std::vector<uint8_t>& out, const FieldContext& ctx, const ExtVector& v) {
    size_t eb = ctx.elem_bytes();
    size_t base = out.size();
    out.resize(base + v.size() * eb);
    for (size_t i = 0; i < v.size(); ++i) ctx.serialize(v[i], out.data() + base + i * eb);
}

ExtVector get_ring(const std::vector<uint8_t>& blob, size_t* off, const FieldContext& ctx,
                   unsigned n) {
    size_t eb = ctx.elem_bytes();
    if (blob.size() < *off + size_t(n) * eb) throw std::runtime_error("truncated input");
    ExtVector v;
    v.reserve(n);
    for (unsigned i = 0; i < n; ++i) v.push_back(ctx.deserialize(blob.data() + *off + i * eb));
    *off += size_t(n) * eb;
    return v;
}

}  // namespace

SharedKey support_hash(const Subspace& E) {
    static const uint8_t prefix[] = "lrpc-support-key.v1";
    Shake256 s;
    s.absorb(prefix, sizeof(prefix) - 1);
    std::vector<uint8_t> enc = E.encode();
    s.absorb(enc);
    s.finalize();
    SharedKey key;
    s.squeeze(key.data(), key.size());
    return key;
}

std::vector<uint8_t> support_keystream(const Subspace& E, size_t len) {
    static const uint8_t prefix[] = "lrpc-support-stream.v1";
    Shake256 s;
    s.absorb(prefix, sizeof(prefix) - 1);
    std::vector<uint8_t> enc = E.encode();
    s.absorb(enc);
    s.finalize();
    std::vector<uint8_t> out(len);
    s.squeeze(out.data(), len);
    return out;
}

std::optional<Subspace> rank_support_recover(const LrpcCode& code, const ExtVector& s,
                                             unsigned r) {
    const FieldContext& ctx = code.ctx();
    Subspace S = code.syndrome_space(s);
    if (S.dim() == 0) return Subspace(ctx);  // zero syndrome: zero support
    if (code.d() >= 3) S = expand_crypto(S, code.support(), r);
    Subspace E = code.recover_support(S);
    // trusted fast path: the full product space was recovered and the
    // intersection came out at the expected dimension
    if (S.dim() == r * code.d() && E.dim() == r) return E;
    // otherwise only accept a support that actually explains the syndrome
    if (E.dim() <= r && code.solve_support_constrained(E, s, nullptr)) return E;
    return std::nullopt;
}

IdealLrpc::IdealLrpc(const ParamSet& ps)
    : ps_(&ps), ctx_(&FieldContext::get(ps.q, ps.m)), ring_(*ctx_, modulus_poly(ps)) {}

KeyPair IdealLrpc::keygen(Rng& rng) const {
    const unsigned n = ps_->n;
    for (;;) {
        Subspace F = Subspace::random(*ctx_, ps_->d, rng);
        ExtVector x = random_vector_with_support(F, n, rng);
        ExtVector y = random_vector_with_support(F, n, rng);
        ExtVector xinv;
        if (!ring_.inverse(x, xinv)) continue;
        ExtVector h = ring_.mul(xinv, y);
        return KeyPair{PublicKey{ps_, std::move(h)}, SecretKey{ps_, std::move(x), std::move(y)}};
    }
}

IdealLrpc::EncapResult IdealLrpc::encap(const PublicKey& pk, Rng& rng) const {
    const unsigned n = ps_->n;
    Subspace E = Subspace::random(*ctx_, ps_->r, rng);
    ExtVector e1 = random_vector_with_support(E, n, rng);
    ExtVector e2 = random_vector_with_support(E, n, rng);
    ExtVector c = ring_.add(e1, ring_.mul(e2, pk.h));
    return EncapResult{std::move(c), support_hash(E)};
}

LrpcCode IdealLrpc::secret_code(const SecretKey& sk) const {
    const unsigned n = ps_->n;
    ExtVector gens = sk.x;
    gens.insert(gens.end(), sk.y.begin(), sk.y.end());
    Subspace F(*ctx_, gens);
    // parity check of the [2n, n] code: column j is X^j x mod P (resp. y),
    // so that H (e1|e2)^T has the coefficients of x e1 + y e2 mod P
    ExtMatrix H(*ctx_, n, 2 * n);
    for (unsigned j = 0; j < n; ++j) {
        ExtVector cx = ring_.shift(sk.x, j);
        ExtVector cy = ring_.shift(sk.y, j);
        for (unsigned i = 0; i < n; ++i) {
            H.at(i, j) = std::move(cx[i]);
            H.at(i, n + j) = std::move(cy[i]);
        }
    }
    return LrpcCode(*ctx_, std::move(F), std::move(H));
}

std::optional<SharedKey> IdealLrpc::decap(const SecretKey& sk, const ExtVector& c) const {
    ExtVector s = ring_.mul(sk.x, c);  // = x e1 + y e2 mod P
    LrpcCode code = secret_code(sk);
    auto E = rank_support_recover(code, s, ps_->r);
    if (!E) return std::nullopt;
    return support_hash(*E);
}

PkeCiphertext IdealLrpc::encrypt(const PublicKey& pk, const std::vector<uint8_t>& msg,
                                 Rng& rng) const {
    const unsigned n = ps_->n;
    Subspace E = Subspace::random(*ctx_, ps_->r, rng);
    ExtVector e1 = random_vector_with_support(E, n, rng);
    ExtVector e2 = random_vector_with_support(E, n, rng);
    PkeCiphertext ct;
    ct.c = ring_.add(e1, ring_.mul(e2, pk.h));
    ct.mask = support_keystream(E, msg.size());
    for (size_t i = 0; i < msg.size(); ++i) ct.mask[i] ^= msg[i];
    return ct;
}

std::optional<std::vector<uint8_t>> IdealLrpc::decrypt(const SecretKey& sk,
                                                       const PkeCiphertext& ct) const {
    ExtVector s = ring_.mul(sk.x, ct.c);
    LrpcCode code = secret_code(sk);
    auto E = rank_support_recover(code, s, ps_->r);
    if (!E) return std::nullopt;
    std::vector<uint8_t> msg = support_keystream(*E, ct.mask.size());
    for (size_t i = 0; i < msg.size(); ++i) msg[i] ^= ct.mask[i];
    return msg;
}

size_t IdealLrpc::public_key_bits() const {
    return size_t(ps_->n) * ps_->m * ctx_->bits_per_coord();
}

size_t IdealLrpc::ciphertext_bits() const {
    return public_key_bits();
}

// --- file formats -----------------------------------------------------------

std::vector<uint8_t> serialize_public_key(const PublicKey& pk) {
    std::vector<uint8_t> out;
    put_header(out, kPk, *pk.ps);
    put_ring(out, FieldContext::get(pk.ps->q, pk.ps->m), pk.h);
    return out;
}

PublicKey parse_public_key(const std::vector<uint8_t>& blob) {
    size_t off;
    const ParamSet& ps = check_header(blob, kPk, &off);
    const FieldContext& ctx = FieldContext::get(ps.q, ps.m);
    PublicKey pk{&ps, get_ring(blob, &off, ctx, ps.n)};
    if (off != blob.size()) throw std::runtime_error("trailing bytes");
    return pk;
}

std::vector<uint8_t> serialize_secret_key(const SecretKey& sk) {
    std::vector<uint8_t> out;
    put_header(out, kSk, *sk.ps);
    const FieldContext& ctx = FieldContext::get(sk.ps->q, sk.ps->m);
    put_ring(out, ctx, sk.x);
    put_ring(out, ctx, sk.y);
    return out;
}

SecretKey parse_secret_key(const std::vector<uint8_t>& blob) {
    size_t off;
    const ParamSet& ps = check_header(blob, kSk, &off);
    const FieldContext& ctx = FieldContext::get(ps.q, ps.m);
    SecretKey sk{&ps, get_ring(blob, &off, ctx, ps.n), get_ring(blob, &off, ctx, ps.n)};
    if (off != blob.size()) throw std::runtime_error("trailing bytes");
    return sk;
}

std::vector<uint8_t> serialize_ciphertext(const ParamSet& ps, const ExtVector& c) {
    std::vector<uint8_t> out;
    put_header(out, kCt, ps);
    put_ring(out, FieldContext::get(ps.q, ps.m), c);
    return out;
}

ExtVector parse_ciphertext(const std::vector<uint8_t>& blob, const ParamSet** ps_out) {
    size_t off;
    const ParamSet& ps = check_header(blob, kCt, &off);
    const FieldContext& ctx = FieldContext::get(ps.q, ps.m);
    ExtVector c = get_ring(blob, &off, ctx, ps.n);
    if (off != blob.size()) throw std::runtime_error("trailing bytes");
    if (ps_out) *ps_out = &ps;
    return c;
}

std::vector<uint8_t> serialize_pke_ciphertext(const ParamSet& ps, const PkeCiphertext& ct) {
    std::vector<uint8_t> out;
    put_header(out, kPkeCt, ps);
    put_ring(out, FieldContext::get(ps.q, ps.m), ct.c);
    uint64_t len = ct.mask.size();
    for (int i = 0; i < 8; ++i) out.push_back(uint8_t(len >> (8 * i)));
    out.insert(out.end(), ct.mask.begin(), ct.mask.end());
    return out;
}

PkeCiphertext parse_pke_ciphertext(const std::vector<uint8_t>& blob, const ParamSet** ps_out) {
    size_t off;
    const ParamSet& ps = check_header(blob, kPkeCt, &off);
    const FieldContext& ctx = FieldContext::get(ps.q, ps.m);
    PkeCiphertext ct;
    ct.c = get_ring(blob, &off, ctx, ps.n);
    if (blob.size() < off + 8) throw std::runtime_error("truncated input");
    uint64_t len = 0;
    for (int i = 0; i < 8; ++i) len |= uint64_t(blob[off + i]) << (8 * i);
    off += 8;
    if (blob.size() != off + len) throw std::runtime_error("length mismatch");
    ct.mask.assign(blob.begin() + off, blob.end());
    if (ps_out) *ps_out = &ps;
    return ct;
}

}  // namespace lrpc
