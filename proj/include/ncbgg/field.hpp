#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "ncbgg/errors.hpp"

namespace ncbgg {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// The field F_p for a prime p < 2^31.  Elements are canonical residues in
/// [0, p); products fit in 64 bits before reduction.
class PrimeField {
public:
    using Elt = std::uint64_t;

    PrimeField() : p_(2) {} // placeholder modulus for empty containers

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t(1) << 31))
            throw precondition_error("prime modulus must be < 2^31, got " + std::to_string(p));
        if (!is_prime_u64(p))
            throw precondition_error("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    Elt from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elt>(r);
    }
    bool is_zero(Elt a) const { return a == 0; }
    bool eq(Elt a, Elt b) const { return a == b; }

    Elt add(Elt a, Elt b) const {
        Elt s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elt sub(Elt a, Elt b) const { return a >= b ? a - b : a + p_ - b; }
    Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
    Elt mul(Elt a, Elt b) const { return (a * b) % p_; }

    Elt inv(Elt a) const {
        if (a == 0) throw precondition_error("division by zero in F_p");
        // extended Euclid on (a, p)
        long long t = 0, newt = 1;
        long long r = static_cast<long long>(p_), newr = static_cast<long long>(a);
        while (newr != 0) {
            long long q = r / newr;
            long long tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<long long>(p_);
        return static_cast<Elt>(t);
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

    Elt random(std::mt19937_64& rng) const {
        std::uniform_int_distribution<std::uint64_t> d(0, p_ - 1);
        return d(rng);
    }

    std::string to_string(Elt a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

/// The rationals, backed by GMP.  All elements are kept canonical
/// (reduced fraction, positive denominator).
class Rationals {
public:
    using Elt = mpq_class;

    Elt zero() const { return Elt(0); }
    Elt one() const { return Elt(1); }
    Elt from_int(long long v) const { return Elt(static_cast<long>(v)); }
    bool is_zero(const Elt& a) const { return a == 0; }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }

    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt sub(const Elt& a, const Elt& b) const { return a - b; }
    Elt neg(const Elt& a) const { return -a; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt inv(const Elt& a) const {
        if (a == 0) throw precondition_error("division by zero in Q");
        return 1 / a;
    }
    Elt div(const Elt& a, const Elt& b) const { return a / inv_guard(b); }

    Elt random(std::mt19937_64& rng) const {
        std::uniform_int_distribution<int> d(-4, 4);
        return Elt(d(rng));
    }

    std::string to_string(const Elt& a) const { return a.get_str(); }

    bool operator==(const Rationals&) const { return true; }

private:
    const Elt& inv_guard(const Elt& b) const {
        if (b == 0) throw precondition_error("division by zero in Q");
        return b;
    }
};

} // namespace ncbgg
