#include "lrpc/field.hpp"

#include <cstring>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "lrpc/fq_matrix.hpp"
#include "lrpc/rng.hpp"

namespace lrpc {

namespace {

// 64x64 carryless multiply, 4-bit windowed. Returns the low word, writes the
// high word through hi.
inline uint64_t clmul64(uint64_t a, uint64_t b, uint64_t* hi) {
    uint64_t tab_lo[16], tab_hi[16];
    tab_lo[0] = 0;
    tab_hi[0] = 0;
    for (int i = 1; i < 16; ++i) {
        if (i & 1) {
            tab_lo[i] = tab_lo[i - 1] ^ b;
            tab_hi[i] = tab_hi[i - 1];
        } else {
            int h = i >> 1;
            tab_lo[i] = tab_lo[h] << 1;
            tab_hi[i] = (tab_hi[h] << 1) | (tab_lo[h] >> 63);
        }
    }
    uint64_t lo = 0, h = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        h = (h << 4) | (lo >> 60);
        lo <<= 4;
        unsigned idx = unsigned((a >> shift) & 0xf);
        lo ^= tab_lo[idx];
        h ^= tab_hi[idx];
    }
    *hi = h;
    return lo;
}

}  // namespace

FieldContext::FieldContext(unsigned q, unsigned m) : fq_(q), m_(m) {
    if (m == 0) throw std::domain_error("extension degree must be positive");
    modulus_ = fqpoly::lex_least_irreducible(fq_, m);
    bits_ = 1;
    while ((1u << bits_) < q) ++bits_;
    elem_bytes_ = (size_t(m) * bits_ + 7) / 8;
    words_ = 0;
    if (q == 2) {
        words_ = (m + 63) / 64;
        for (unsigned i = 0; i < m; ++i)
            if (modulus_[i]) taps_.push_back(i);
    }
}

const FieldContext& FieldContext::get(unsigned q, unsigned m) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<FieldContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{q, m}];
    if (!slot) slot.reset(new FieldContext(q, m));
    return *slot;
}

ExtElement FieldContext::one() const {
    ExtElement e = zero();
    e.coords[0] = 1;
    return e;
}

ExtElement FieldContext::basis_elem(unsigned k) const {
    if (k >= m_) throw std::domain_error("basis index out of range");
    ExtElement e = zero();
    e.coords[k] = 1;
    return e;
}

bool FieldContext::is_zero(const ExtElement& a) const {
    for (uint8_t c : a.coords)
        if (c) return false;
    return true;
}

ExtElement FieldContext::add(const ExtElement& a, const ExtElement& b) const {
    ExtElement r = a;
    add_in_place(r, b);
    return r;
}

void FieldContext::add_in_place(ExtElement& a, const ExtElement& b) const {
    if (q() == 2) {
        for (unsigned i = 0; i < m_; ++i) a.coords[i] ^= b.coords[i];
    } else {
        for (unsigned i = 0; i < m_; ++i) a.coords[i] = fq_.add(a.coords[i], b.coords[i]);
    }
}

ExtElement FieldContext::sub(const ExtElement& a, const ExtElement& b) const {
    ExtElement r{std::vector<uint8_t>(m_)};
    for (unsigned i = 0; i < m_; ++i) r.coords[i] = fq_.sub(a.coords[i], b.coords[i]);
    return r;
}

ExtElement FieldContext::neg(const ExtElement& a) const {
    ExtElement r = a;
    if (fq_.characteristic() != 2)
        for (auto& c : r.coords) c = fq_.neg(c);
    return r;
}

ExtElement FieldContext::scalar_mul(uint8_t c, const ExtElement& a) const {
    ExtElement r{std::vector<uint8_t>(m_)};
    for (unsigned i = 0; i < m_; ++i) r.coords[i] = fq_.mul(c, a.coords[i]);
    return r;
}

void FieldContext::pack(const ExtElement& a, uint64_t* w) const {
    std::memset(w, 0, words_ * sizeof(uint64_t));
    for (unsigned i = 0; i < m_; ++i)
        if (a.coords[i]) w[i >> 6] |= uint64_t(1) << (i & 63);
}

ExtElement FieldContext::unpack(const uint64_t* w) const {
    ExtElement r = zero();
    for (unsigned i = 0; i < m_; ++i)
        r.coords[i] = uint8_t((w[i >> 6] >> (i & 63)) & 1);
    return r;
}

void FieldContext::clmul_acc(const uint64_t* a, const uint64_t* b, uint64_t* c) const {
    for (size_t i = 0; i < words_; ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < words_; ++j) {
            if (!b[j]) continue;
            uint64_t hi, lo = clmul64(a[i], b[j], &hi);
            c[i + j] ^= lo;
            c[i + j + 1] ^= hi;
        }
    }
}

void FieldContext::reduce_packed(uint64_t* w) const {
    // clear bits 2m-2 .. m by folding them onto the tap positions
    for (size_t bit = 2 * size_t(m_) - 2; bit >= m_; --bit) {
        size_t wi = bit >> 6;
        uint64_t mask = uint64_t(1) << (bit & 63);
        if (!(w[wi] & mask)) continue;
        w[wi] ^= mask;
        size_t base = bit - m_;
        for (unsigned t : taps_) {
            size_t p = base + t;
            w[p >> 6] ^= uint64_t(1) << (p & 63);
        }
    }
    if (m_ & 63) w[words_ - 1] &= (uint64_t(1) << (m_ & 63)) - 1;
    for (size_t i = words_; i < 2 * words_; ++i) w[i] = 0;
}

ExtElement FieldContext::mul(const ExtElement& a, const ExtElement& b) const {
    if (q() == 2) {
        uint64_t wa[4], wb[4], wc[8];
        if (words_ > 4) {  // m > 256 is never used; keep the stack path simple
            throw std::domain_error("extension degree too large");
        }
        pack(a, wa);
        pack(b, wb);
        std::memset(wc, 0, sizeof(uint64_t) * 2 * words_);
        clmul_acc(wa, wb, wc);
        reduce_packed(wc);
        return unpack(wc);
    }
    // schoolbook product, degree <= 2m-2, then reduce by the monic modulus
    std::vector<uint8_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (!a.coords[i]) continue;
        for (unsigned j = 0; j < m_; ++j)
            if (b.coords[j])
                prod[i + j] = fq_.add(prod[i + j], fq_.mul(a.coords[i], b.coords[j]));
    }
    for (size_t i = prod.size(); i-- > m_;) {
        uint8_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < m_; ++j)
            if (modulus_[j])
                prod[i - m_ + j] = fq_.sub(prod[i - m_ + j], fq_.mul(c, modulus_[j]));
    }
    prod.resize(m_);
    return ExtElement{std::move(prod)};
}

ExtElement FieldContext::inv(const ExtElement& a) const {
    if (is_zero(a)) throw std::domain_error("inversion of zero");
    // extended Euclid in F_q[x] against the defining polynomial
    fqpoly::Poly r0 = modulus_, r1(a.coords.begin(), a.coords.end());
    fqpoly::normalize(r1);
    fqpoly::Poly t0{}, t1{1};
    while (fqpoly::degree(r1) > 0) {
        // r0 = q*r1 + r2
        fqpoly::Poly q_poly;
        fqpoly::Poly rem = r0;
        int d1 = fqpoly::degree(r1);
        uint8_t li = fq_.inv(r1[d1]);
        q_poly.assign(size_t(fqpoly::degree(r0) - d1 + 1), 0);
        for (int i = fqpoly::degree(rem); i >= d1; i = fqpoly::degree(rem)) {
            uint8_t c = fq_.mul(rem[i], li);
            q_poly[i - d1] = c;
            for (int j = 0; j <= d1; ++j)
                rem[i - d1 + j] = fq_.sub(rem[i - d1 + j], fq_.mul(c, r1[j]));
            fqpoly::normalize(rem);
        }
        fqpoly::normalize(q_poly);
        fqpoly::Poly qt = fqpoly::mul(fq_, q_poly, t1);
        fqpoly::Poly t2(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < t2.size(); ++i) {
            uint8_t x = i < t0.size() ? t0[i] : 0;
            uint8_t y = i < qt.size() ? qt[i] : 0;
            t2[i] = fq_.sub(x, y);
        }
        fqpoly::normalize(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.empty()) throw std::domain_error("inversion of zero");  // gcd != 1 impossible for irreducible modulus
    uint8_t scale = fq_.inv(r1[0]);
    ExtElement out = zero();
    for (size_t i = 0; i < t1.size(); ++i) out.coords[i] = fq_.mul(scale, t1[i]);
    return out;
}

ExtElement FieldContext::random(Rng& rng) const {
    ExtElement e = zero();
    if (q() == 2) {
        for (unsigned i = 0; i < m_; i += 64) {
            uint64_t w = rng.next();
            for (unsigned j = 0; j < 64 && i + j < m_; ++j)
                e.coords[i + j] = uint8_t((w >> j) & 1);
        }
    } else {
        for (unsigned i = 0; i < m_; ++i) e.coords[i] = uint8_t(rng.below(q()));
    }
    return e;
}

void FieldContext::serialize(const ExtElement& a, uint8_t* out) const {
    std::memset(out, 0, elem_bytes_);
    size_t bitpos = 0;
    for (unsigned i = 0; i < m_; ++i) {
        uint8_t v = a.coords[i];
        for (unsigned b = 0; b < bits_; ++b, ++bitpos)
            if ((v >> b) & 1) out[bitpos >> 3] |= uint8_t(1) << (bitpos & 7);
    }
}

ExtElement FieldContext::deserialize(const uint8_t* in) const {
    ExtElement a = zero();
    size_t bitpos = 0;
    for (unsigned i = 0; i < m_; ++i) {
        uint8_t v = 0;
        for (unsigned b = 0; b < bits_; ++b, ++bitpos)
            v |= uint8_t((in[bitpos >> 3] >> (bitpos & 7)) & 1) << b;
        if (v >= q()) throw std::runtime_error("coordinate out of range");
        a.coords[i] = v;
    }
    return a;
}

unsigned rank_weight(const FieldContext& ctx, const ExtVector& v) {
    FqMatrix mat(ctx.base(), v.size(), ctx.m());
    for (size_t i = 0; i < v.size(); ++i)
        for (unsigned j = 0; j < ctx.m(); ++j) mat.set(i, j, v[i].coords[j]);
    return unsigned(mat.rref());
}

std::string to_string(const FieldContext& ctx, const ExtElement& a) {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < ctx.m(); ++i) {
        if (!a.coords[i]) continue;
        if (!first) os << "+";
        first = false;
        if (a.coords[i] != 1 || i == 0) os << unsigned(a.coords[i]);
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace lrpc
