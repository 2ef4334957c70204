#pragma once

#include <cstdint>
#include <vector>

namespace scg {

// A field element is the bit pattern of a polynomial in the generator x,
// little-endian coefficients. Always < 2^k for its field.
using fel = std::uint16_t;

// GF(2^k) for 1 <= k <= 16. The modulus for each k comes from a fixed
// built-in table of primitive polynomials, so bit patterns are stable across
// runs and machines; the constructor re-verifies irreducibility and that x
// generates the multiplicative group. Multiplication uses log/exp tables in
// the generator x (plus a direct q*q table for k <= 8, where it is small).
//
// Immutable after construction; safe to share between threads.
class Field {
public:
    explicit Field(int k);

    int k() const { return k_; }
    unsigned q() const { return q_; }
    unsigned modulus() const { return modulus_; }

    fel add(fel a, fel b) const { return a ^ b; }

    fel mul(fel a, fel b) const {
        if (a == 0 || b == 0) return 0;
        if (!mul_.empty()) return mul_[(unsigned(a) << k_) | b];
        return exp_[unsigned(log_[a]) + log_[b]];
    }

    // Throws std::domain_error on a = 0.
    fel inv(fel a) const;

    fel div(fel a, fel b) const { return mul(a, inv(b)); }
    fel sq(fel a) const { return mul(a, a); }
    fel pow(fel a, unsigned long long e) const;

    // Absolute trace GF(2^k) -> GF(2): sum of the k Frobenius powers.
    int trace(fel a) const { return tr_[a]; }

    // N = {a^2 + a : a in the field} = kernel of the trace. |N| = q/2.
    bool in_artin_schreier_N(fel b) const { return tr_[b] == 0; }

private:
    int k_;
    unsigned q_;
    unsigned modulus_;
    std::vector<fel> exp_;          // 2(q-1) entries so mul skips the mod
    std::vector<fel> log_;          // log_[0] unused
    std::vector<fel> mul_;          // k <= 8: direct q*q table
    std::vector<fel> inv_;
    std::vector<std::uint8_t> tr_;
};

}  // namespace scg
