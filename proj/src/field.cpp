#include "scg/field.hpp"

#include <stdexcept>

namespace scg {
namespace {

// Primitive polynomial for each degree k, as a bitmask with the x^k term set.
// Index 0 unused. These are the canonical (Conway) choices; the constructor
// re-verifies the properties it relies on rather than trusting the table.
constexpr unsigned kModulus[17] = {
    0,      0x3,    0x7,    0xb,    0x13,   0x25,   0x5b,   0x83,
    0x11d,  0x211,  0x46f,  0x805,  0x10eb, 0x201b, 0x40a9, 0x8035,
    0x1002d,
};

int poly_degree(unsigned p) {
    int d = -1;
    while (p) { ++d; p >>= 1; }
    return d;
}

// Arithmetic in GF(2)[x] on bitmasks, used only for the construction checks.
unsigned poly_mod(unsigned long long a, unsigned m) {
    int dm = poly_degree(m);
    for (int d = 63; d >= dm; --d)
        if (a >> d & 1) a ^= (unsigned long long)m << (d - dm);
    return (unsigned)a;
}

unsigned poly_mulmod(unsigned a, unsigned b, unsigned m) {
    unsigned long long acc = 0;
    for (int i = 0; b >> i; ++i)
        if (b >> i & 1) acc ^= (unsigned long long)a << i;
    return poly_mod(acc, m);
}

unsigned poly_gcd(unsigned a, unsigned b) {
    while (b) {
        int da = poly_degree(a), db = poly_degree(b);
        if (da < db) { std::swap(a, b); std::swap(da, db); }
        if (!b) break;
        a ^= b << (da - db);
    }
    return a;
}

// x^(2^e) mod m by repeated squaring of the residue.
unsigned poly_frob_iter(unsigned m, int e) {
    unsigned r = 2;  // x
    for (int i = 0; i < e; ++i) r = poly_mulmod(r, r, m);
    return r;
}

bool poly_irreducible(unsigned m, int k) {
    if (poly_degree(m) != k || (m & 1) == 0) return false;  // x | m otherwise
    unsigned x = poly_mod(2, m);                            // k = 1 reduces x
    if (poly_frob_iter(m, k) != x) return false;            // x^(2^k) = x
    for (int p = 2; p <= k; ++p) {
        if (k % p) continue;
        bool prime = true;
        for (int t = 2; t * t <= p; ++t)
            if (p % t == 0) prime = false;
        if (!prime) continue;
        if (poly_gcd(poly_frob_iter(m, k / p) ^ x, m) != 1) return false;
    }
    return true;
}

}  // namespace

Field::Field(int k) : k_(k) {
    if (k < 1 || k > 16)
        throw std::invalid_argument("field degree must be between 1 and 16");
    q_ = 1u << k;
    modulus_ = kModulus[k];
    if (!poly_irreducible(modulus_, k))
        throw std::logic_error("field modulus table entry is not irreducible");

    // Powers of x enumerate the whole multiplicative group (x is primitive
    // for every table entry); verify while building exp/log.
    unsigned n = q_ - 1;
    exp_.assign(2 * n, 0);
    log_.assign(q_, 0);
    unsigned v = 1;
    for (unsigned i = 0; i < n; ++i) {
        exp_[i] = (fel)v;
        exp_[i + n] = (fel)v;
        if (v != 1 ? log_[v] != 0 : i != 0)
            throw std::logic_error("generator x is not primitive for the field modulus");
        log_[v] = (fel)i;
        v = poly_mulmod(v, 2, modulus_);
    }
    if (v != 1)
        throw std::logic_error("generator x is not primitive for the field modulus");

    inv_.assign(q_, 0);
    for (unsigned a = 1; a < q_; ++a) inv_[a] = exp_[(n - log_[a]) % n];

    if (k <= 8) {
        mul_.assign((size_t)q_ * q_, 0);
        for (unsigned a = 1; a < q_; ++a)
            for (unsigned b = 1; b < q_; ++b)
                mul_[(a << k_) | b] = exp_[(unsigned)log_[a] + log_[b]];
    }

    tr_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        unsigned s = 0, t = a;
        for (int i = 0; i < k_; ++i) {
            s ^= t;
            t = poly_mulmod(t, t, modulus_);
        }
        if (s > 1) throw std::logic_error("trace fell outside the prime field");
        tr_[a] = (std::uint8_t)s;
    }
}

fel Field::inv(fel a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

fel Field::pow(fel a, unsigned long long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    unsigned n = q_ - 1;
    unsigned long long r = (unsigned long long)log_[a] * (e % n) % n;
    return exp_[(unsigned)r];
}

}  // namespace scg
