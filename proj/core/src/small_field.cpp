#include "lrpc/small_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrpc {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

// F_p digit vectors of length s, encoded as integers base p.
std::vector<uint8_t> digits(unsigned v, unsigned p, unsigned s) {
    std::vector<uint8_t> d(s);
    for (unsigned i = 0; i < s; ++i) { d[i] = uint8_t(v % p); v /= p; }
    return d;
}

unsigned undigits(const std::vector<uint8_t>& d, unsigned p) {
    unsigned v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

// Irreducibility over F_p by trial division (only needed for s <= 8).
bool prime_poly_irreducible(unsigned p, const std::vector<uint8_t>& f) {
    int deg = int(f.size()) - 1;
    if (deg < 1) return false;
    // iterate monic divisors of degree 1..deg/2
    for (int dd = 1; dd <= deg / 2; ++dd) {
        unsigned count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (unsigned v = 0; v < count; ++v) {
            std::vector<uint8_t> g = digits(v, p, dd);
            g.push_back(1);
            // remainder of f mod g over F_p
            std::vector<int> r(f.begin(), f.end());
            for (int i = deg; i >= dd; --i) {
                int c = r[i] % p;
                if (c == 0) continue;
                for (int j = 0; j <= dd; ++j) {
                    int t = r[i - dd + j] - c * g[j];
                    t %= int(p);
                    if (t < 0) t += p;
                    r[i - dd + j] = t;
                }
            }
            bool zero = true;
            for (int i = 0; i < dd; ++i)
                if (r[i] % p != 0) { zero = false; break; }
            if (zero) return false;
        }
    }
    return true;
}

std::vector<uint8_t> least_prime_poly(unsigned p, unsigned s) {
    unsigned count = 1;
    for (unsigned i = 0; i < s; ++i) count *= p;
    for (unsigned v = 0; v < count; ++v) {
        std::vector<uint8_t> f = digits(v, p, s);
        f.push_back(1);
        if (prime_poly_irreducible(p, f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

SmallField::SmallField(unsigned q) : q_(q) {
    if (q < 2 || q > 256) throw std::domain_error("field size must be in [2, 256]");
    unsigned p = 2;
    while (q % p != 0) ++p;
    if (!is_prime(p)) throw std::domain_error("field size must be a prime power");
    unsigned s = 0, t = q;
    while (t > 1) {
        if (t % p != 0) throw std::domain_error("field size must be a prime power");
        t /= p;
        ++s;
    }
    p_ = p;
    s_ = s;

    std::vector<uint8_t> modpoly;  // degree s over F_p, used when s > 1
    if (s > 1) modpoly = least_prime_poly(p, s);

    if (p != 2) {
        add_.resize(size_t(q) * q);
        neg_.resize(q);
        for (unsigned a = 0; a < q; ++a) {
            auto da = digits(a, p, s);
            std::vector<uint8_t> dn(s);
            for (unsigned i = 0; i < s; ++i) dn[i] = uint8_t((p - da[i]) % p);
            neg_[a] = uint8_t(undigits(dn, p));
            for (unsigned b = 0; b < q; ++b) {
                auto db = digits(b, p, s);
                std::vector<uint8_t> dc(s);
                for (unsigned i = 0; i < s; ++i) dc[i] = uint8_t((da[i] + db[i]) % p);
                add_[size_t(a) * q + b] = uint8_t(undigits(dc, p));
            }
        }
    }

    mul_.resize(size_t(q) * q);
    for (unsigned a = 0; a < q; ++a) {
        auto da = digits(a, p, s);
        for (unsigned b = 0; b <= a; ++b) {
            auto db = digits(b, p, s);
            std::vector<uint8_t> prod(2 * s - 1, 0);
            for (unsigned i = 0; i < s; ++i)
                for (unsigned j = 0; j < s; ++j)
                    prod[i + j] = uint8_t((prod[i + j] + da[i] * db[j]) % p);
            if (s > 1) {
                for (size_t i = prod.size(); i-- > s;) {
                    unsigned c = prod[i];
                    if (!c) continue;
                    prod[i] = 0;
                    for (unsigned j = 0; j < s; ++j) {
                        unsigned t2 = prod[i - s + j] + (p - modpoly[j] % p) * c;
                        prod[i - s + j] = uint8_t(t2 % p);
                    }
                }
                prod.resize(s);
            }
            uint8_t v = uint8_t(undigits(prod, p));
            mul_[size_t(a) * q + b] = v;
            mul_[size_t(b) * q + a] = v;
        }
    }

    inv_.assign(q, 0);
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
            if (mul_[size_t(a) * q + b] == 1) { inv_[a] = uint8_t(b); break; }
}

uint8_t SmallField::inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return inv_[a];
}

namespace fqpoly {

void normalize(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) {
    for (size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return int(i);
    return -1;
}

Poly add(const SmallField& fq, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint8_t x = i < a.size() ? a[i] : 0;
        uint8_t y = i < b.size() ? b[i] : 0;
        r[i] = fq.add(x, y);
    }
    normalize(r);
    return r;
}

Poly mul(const SmallField& fq, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j]) r[i + j] = fq.add(r[i + j], fq.mul(a[i], b[j]));
    }
    normalize(r);
    return r;
}

Poly mod(const SmallField& fq, Poly a, const Poly& f) {
    int df = degree(f);
    if (df < 0) throw std::domain_error("zero modulus");
    uint8_t lead_inv = fq.inv(f[df]);
    for (int i = degree(a); i >= df; i = degree(a)) {
        uint8_t c = fq.mul(a[i], lead_inv);
        for (int j = 0; j <= df; ++j)
            a[i - df + j] = fq.sub(a[i - df + j], fq.mul(c, f[j]));
        normalize(a);
    }
    return a;
}

Poly mulmod(const SmallField& fq, const Poly& a, const Poly& b, const Poly& f) {
    return mod(fq, mul(fq, a, b), f);
}

Poly gcd(const SmallField& fq, Poly a, Poly b) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        Poly r = mod(fq, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint8_t li = fq.inv(a.back());
        for (auto& c : a) c = fq.mul(c, li);
    }
    return a;
}

Poly pow_q_mod(const SmallField& fq, const Poly& a, const Poly& f) {
    unsigned e = fq.q();
    Poly result{1};
    Poly base = a;
    while (e) {
        if (e & 1) result = mulmod(fq, result, base, f);
        base = mulmod(fq, base, base, f);
        e >>= 1;
    }
    return result;
}

bool is_irreducible(const SmallField& fq, const Poly& f) {
    int m = degree(f);
    if (m < 1) return false;
    if (m == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    Poly x{0, 1};
    Poly t = x;
    for (int k = 1; k <= m; ++k) {
        t = pow_q_mod(fq, t, f);  // t = x^(q^k) mod f
        if (k < m && m % k == 0) {
            // gcd(x^(q^k) - x, f) must be 1 for every proper divisor k of m
            Poly diff = add(fq, t, [&] {
                Poly nx = x;
                for (auto& c : nx) c = fq.neg(c);
                return nx;
            }());
            Poly g = gcd(fq, diff, f);
            if (degree(g) != 0) return false;
        }
    }
    return degree(add(fq, t, [&] {
               Poly nx = x;
               for (auto& c : nx) c = fq.neg(c);
               return nx;
           }())) < 0;
}

Poly lex_least_irreducible(const SmallField& fq, unsigned m) {
    if (m == 0) throw std::domain_error("degree must be positive");
    const unsigned q = fq.q();
    Poly f(m + 1, 0);
    f[m] = 1;
    // enumerate the low-order part as an ascending base-q counter
    while (true) {
        if (f[0] != 0 && is_irreducible(fq, f)) return f;
        unsigned i = 0;
        while (i < m && f[i] == q - 1) { f[i] = 0; ++i; }
        if (i == m) throw std::logic_error("no irreducible polynomial of requested degree");
        ++f[i];
    }
}

}  // namespace fqpoly

}  // namespace lrpc
