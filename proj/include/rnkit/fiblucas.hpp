#pragma once

// Fibonacci/Lucas numbers, the Pell-type equation u^2 - 5v^2 = +-4 and the
// perfect-power classification of both sequences.
// Conventions: F0 = 0, F1 = 1, L0 = 2, L1 = 1.

#include "rnkit/arith.hpp"

#include <vector>

namespace rnkit {

struct FibLucasPair {
    unsigned long k;
    Integer f;  // F_k
    Integer l;  // L_k
};

/// Exact (F_k, L_k) via fast doubling.
inline FibLucasPair fib_lucas(unsigned long k) {
    // returns (F_n, F_{n+1})
    Integer a = 0, b = 1;  // F_0, F_1
    if (k > 0) {
        const size_t bits = sizeof(unsigned long) * 8;
        for (size_t i = bits; i-- > 0;) {
            // (a, b) = (F_m, F_{m+1}) -> m doubled
            Integer c = a * (2 * b - a);      // F_{2m}
            Integer d = a * a + b * b;        // F_{2m+1}
            if ((k >> i) & 1) {
                a = d;
                b = c + d;
            } else {
                a = c;
                b = d;
            }
        }
    }
    return {k, a, 2 * b - a};  // L_k = 2 F_{k+1} - F_k
}

struct PellSolution {
    Integer u;
    Integer v;
    unsigned long k;  // index with (u, v) = (L_k, F_k)
    int sign;         // the +-4 branch: u^2 - 5 v^2 = sign * 4
};

/// All positive (u, v) with u <= bound and u^2 - 5 v^2 = +-4, annotated with
/// the Fibonacci/Lucas index realizing them.
inline std::vector<PellSolution> solve_pell5(const Integer& bound) {
    std::vector<PellSolution> out;
    for (Integer u = 1; u <= bound; ++u) {
        for (int sign : {-1, +1}) {
            Integer rhs = u * u - sign * 4;
            if (rhs <= 0 || rhs % 5 != 0)
                continue;
            auto r = isqrt(rhs / 5);
            if (!r.exact || r.root < 1)
                continue;
            // locate the index; both sequences are monotone from k = 2 on
            unsigned long k = 0;
            for (;; ++k) {
                auto fl = fib_lucas(k);
                if (fl.l == u && fl.f == r.root)
                    break;
                if (k > 2 && fl.l > u && fl.f > r.root)
                    throw std::logic_error("solve_pell5: Pell solution not a Lucas/Fibonacci pair");
            }
            out.push_back({u, r.root, k, sign});
        }
    }
    return out;
}

struct SequencePower {
    unsigned long k;
    Integer z;
    unsigned long n;
    char which;  // 'F' or 'L'
};

/// All k <= k_max with F_k or L_k a perfect power z^n (z > 1, n > 1).
inline std::vector<SequencePower> fib_lucas_powers(unsigned long k_max) {
    std::vector<SequencePower> out;
    for (unsigned long k = 0; k <= k_max; ++k) {
        auto fl = fib_lucas(k);
        for (char which : {'F', 'L'}) {
            const Integer& v = which == 'F' ? fl.f : fl.l;
            if (v < 4)
                continue;  // z > 1, n > 1 forces z^n >= 4
            if (auto pp = perfect_power(v))
                out.push_back({k, pp->base, pp->exponent, which});
        }
    }
    return out;
}

}  // namespace rnkit
