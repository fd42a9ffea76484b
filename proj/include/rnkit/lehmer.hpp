#pragma once

// Lehmer pairs given by their parameter (a, c) with a = (alpha+beta)^2 and
// c = a - 4*alpha*beta, the Lehmer numbers L_k(alpha, beta), primitive-divisor
// testing and the table of defective parameters for odd 6 < k <= 30.

#include "rnkit/arith.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rnkit {

struct LehmerParams {
    Integer a;
    Integer c;

    Integer b() const { return (a - c) / 4; }

    /// nullopt when valid, else the violated condition.
    std::optional<std::string> violation() const {
        if (a <= 0)
            return "a must be positive";
        if ((((a - c) % 4) + 4) % 4 != 0)
            return "a == c (mod 4) required";
        if (c == 0)
            return "c must be nonzero";
        Integer bb = b();
        if (bb == 0)
            return "alpha*beta must be nonzero";
        if (gcd(a, bb) != 1)
            return "gcd((alpha+beta)^2, alpha*beta) must be 1";
        // a = b, 2b, 3b make alpha/beta a root of unity (a = 4b is c = 0)
        if (a == bb || a == 2 * bb || a == 3 * bb)
            return "alpha/beta is a root of unity";
        return std::nullopt;
    }

    bool valid() const { return !violation().has_value(); }
};

inline void require_valid(const LehmerParams& p) {
    if (auto v = p.violation())
        throw std::invalid_argument("invalid Lehmer parameter: " + *v);
}

/// The Lehmer number L_k(alpha, beta), via the parity-split integer
/// recurrence L1 = L2 = 1, L_k = a L_{k-1} - b L_{k-2} (odd k),
/// L_k = L_{k-1} - b L_{k-2} (even k).
inline Integer lehmer_number(const LehmerParams& p, unsigned long k) {
    require_valid(p);
    if (k < 1)
        throw std::invalid_argument("lehmer_number: k must be >= 1");
    if (k <= 2)
        return 1;
    const Integer b = p.b();
    Integer prev2 = 1, prev1 = 1;  // L_1, L_2
    for (unsigned long i = 3; i <= k; ++i) {
        Integer cur = (i % 2 == 1 ? p.a * prev1 : prev1) - b * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

/// Coefficient (k-i-1)! k / ((k-2i)! i!) of the power-sum expansion.
inline Integer expansion_coeff(unsigned long k, unsigned long i) {
    if (k < 1 || i > k / 2)
        throw std::invalid_argument("expansion_coeff: need 1 <= k and 0 <= i <= k/2");
    Integer num, den1, den2;
    mpz_fac_ui(num.get_mpz_t(), k - i - 1);
    num *= k;
    mpz_fac_ui(den1.get_mpz_t(), k - 2 * i);
    mpz_fac_ui(den2.get_mpz_t(), i);
    Integer den = den1 * den2;
    if (num % den != 0)
        throw std::logic_error("expansion_coeff: not integral");
    return num / den;
}

/// alpha^k + beta^k for alpha + beta = s, alpha*beta = q, as the signed sum
/// over expansion coefficients.
inline Integer power_sum(const Integer& s, const Integer& q, unsigned long k) {
    if (k < 1)
        throw std::invalid_argument("power_sum: k must be >= 1");
    Integer total = 0;
    for (unsigned long i = 0; i <= k / 2; ++i) {
        Integer term = expansion_coeff(k, i) * ipow(s, k - 2 * i) * ipow(q, i);
        if (i % 2 == 1)
            term = -term;
        total += term;
    }
    return total;
}

struct PrimitiveDivisor {
    bool has;
    std::optional<Integer> witness;  // a primitive prime when has == true
};

/// Whether L_k(alpha, beta) has a prime divisor not dividing
/// (alpha^2-beta^2)^2 L_1 ... L_{k-1}. Note (alpha^2-beta^2)^2 = a*c.
inline PrimitiveDivisor has_primitive_divisor(const LehmerParams& p, unsigned long k) {
    require_valid(p);
    if (k <= 1)
        throw std::invalid_argument("has_primitive_divisor: k must be > 1");
    Integer lk = lehmer_number(p, k);
    if (lk < 0)
        lk = -lk;
    if (lk <= 1)
        return {false, std::nullopt};
    Integer forbidden = p.a * p.c;
    if (forbidden < 0)
        forbidden = -forbidden;
    for (unsigned long i = 1; i < k; ++i) {
        Integer li = lehmer_number(p, i);
        forbidden *= li < 0 ? -li : li;
    }
    // strip every prime shared with the forbidden product
    Integer rest = lk;
    for (;;) {
        Integer g = gcd(rest, forbidden);
        if (g == 1)
            break;
        rest /= g;
    }
    if (rest == 1)
        return {false, std::nullopt};
    auto primes = factor(rest);
    return {true, *std::min_element(primes.begin(), primes.end())};
}

struct DefectiveEntry {
    unsigned long k;
    Integer a;
    Integer c;
    bool flagged;  // entry stored verbatim but excluded from property tests
};

/// The complete verbatim table of k-defective parameters for odd 6 < k <= 30.
/// (7, 14, -22) is flagged: see the note shipped with the data file.
inline const std::vector<DefectiveEntry>& defective_entries() {
    static const std::vector<DefectiveEntry> table = {
        {7, 1, -7, false},  {7, 1, -19, false}, {7, 3, -5, false},
        {7, 5, -7, false},  {7, 13, -3, false}, {7, 14, -22, true},
        {9, 5, -3, false},  {9, 7, -1, false},  {9, 7, -5, false},
        {13, 1, -7, false}, {15, 7, -1, false}, {15, 10, -2, false},
    };
    return table;
}

/// Table rows for one index k (odd, 6 < k <= 30); empty for unlisted k.
inline std::vector<DefectiveEntry> defective_table(unsigned long k) {
    if (k % 2 == 0 || k <= 6 || k > 30)
        throw std::invalid_argument("defective_table: k must be odd with 6 < k <= 30");
    std::vector<DefectiveEntry> out;
    for (const auto& e : defective_entries())
        if (e.k == k)
            out.push_back(e);
    return out;
}

/// Parameter-pair equivalence as used by the table: identical after
/// normalizing the sign, i.e. (a, c) matches (a2, c2) or (-a2, -c2).
inline bool params_equivalent(const Integer& a1, const Integer& c1,
                              const Integer& a2, const Integer& c2) {
    return (a1 == a2 && c1 == c2) || (a1 == -a2 && c1 == -c2);
}

/// True iff (a, c) is equivalent to some table row for index k.
inline bool is_listed_defective(const Integer& a, const Integer& c, unsigned long k) {
    for (const auto& e : defective_entries())
        if (e.k == k && params_equivalent(a, c, e.a, e.c))
            return true;
    return false;
}

}  // namespace rnkit
