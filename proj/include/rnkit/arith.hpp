#pragma once

// Exact integer primitives shared by every other header. All arithmetic is
// mpz-backed; nothing in this library ever touches floating point.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rnkit {

using Integer = mpz_class;

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Jacobi symbol (a/b). b must be odd and >= 3.
inline int jacobi(const Integer& a, const Integer& b) {
    if (b <= 0 || mpz_even_p(b.get_mpz_t()) || b < 3)
        throw std::invalid_argument("jacobi: modulus must be odd and >= 3");
    return mpz_jacobi(a.get_mpz_t(), b.get_mpz_t());
}

struct IsqrtResult {
    Integer root;
    bool exact;  // true iff the input is a perfect square
};

/// Floor square root by Newton iteration with an exact correction step.
inline IsqrtResult isqrt(const Integer& a) {
    if (a < 0)
        throw std::domain_error("isqrt: negative input");
    if (a == 0)
        return {Integer(0), true};
    // initial guess: 2^ceil(bits/2) >= sqrt(a)
    const size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
    Integer x;
    mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
    Integer y = (x + a / x) / 2;
    while (y < x) {
        x = y;
        y = (x + a / x) / 2;
    }
    // x = floor(sqrt(a)); correct possible off-by-one from the last step
    while (x * x > a)
        --x;
    return {x, x * x == a};
}

inline bool is_square(const Integer& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

struct PerfectPower {
    Integer base;
    unsigned long exponent;  // >= 2
};

/// If a = y^n with n >= 2, returns the maximal-exponent (minimal-base)
/// representation, else nullopt. Requires a >= 2.
inline std::optional<PerfectPower> perfect_power(const Integer& a) {
    if (a < 2)
        throw std::domain_error("perfect_power: input must be >= 2");
    Integer cur = a;
    unsigned long exponent = 1;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        const size_t bits = mpz_sizeinbase(cur.get_mpz_t(), 2);
        for (unsigned long p = 2; p <= bits; ++p) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), cur.get_mpz_t(), p) != 0) {
                cur = root;
                exponent *= p;
                progressed = true;
                break;
            }
        }
    }
    if (exponent < 2)
        return std::nullopt;
    return PerfectPower{cur, exponent};
}

/// 2-adic valuation of a nonzero integer.
inline unsigned long val2(const Integer& a) {
    if (a == 0)
        throw std::domain_error("val2: zero input");
    return mpz_scan1(a.get_mpz_t(), 0);
}

inline Integer pow2(unsigned long e) {
    Integer r;
    mpz_setbit(r.get_mpz_t(), e);
    return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

namespace detail {

inline Integer pollard_rho(const Integer& n, unsigned long seed) {
    // Brent's variant; n composite, odd, not a prime power of interest here
    Integer x = seed + 2, y = x, c = seed + 1, d = 1;
    Integer diff;
    while (d == 1) {
        x = (x * x + c) % n;
        y = (y * y + c) % n;
        y = (y * y + c) % n;
        diff = x - y;
        if (diff == 0)
            return 0;  // cycle without factor; caller retries with new seed
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    return d == n ? Integer(0) : d;
}

inline void factor_rec(Integer n, std::vector<Integer>& out) {
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    // perfect powers first: rho struggles on squares
    if (auto pp = perfect_power(n)) {
        std::vector<Integer> base_primes;
        factor_rec(pp->base, base_primes);
        for (unsigned long i = 0; i < pp->exponent; ++i)
            for (const auto& p : base_primes)
                out.push_back(p);
        return;
    }
    Integer d = 0;
    for (unsigned long seed = 1; d == 0 || d == n; ++seed)
        d = pollard_rho(n, seed);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace detail

/// Prime factorization of |n| (n != 0), unsorted multiset of primes.
/// Trial division up to 10^6, then Pollard rho on the cofactor.
inline std::vector<Integer> factor(Integer n) {
    if (n == 0)
        throw std::domain_error("factor: zero input");
    if (n < 0)
        n = -n;
    std::vector<Integer> primes;
    if (n == 1)
        return primes;
    while (mpz_even_p(n.get_mpz_t())) {
        primes.emplace_back(2);
        n /= 2;
    }
    for (unsigned long p = 3; p <= 1000000 && Integer(p) * p <= n; p += 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.emplace_back(p);
            n /= p;
        }
    }
    detail::factor_rec(n, primes);
    return primes;
}

}  // namespace rnkit
