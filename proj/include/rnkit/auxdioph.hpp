#pragma once

// Bounded brute-force verifiers for the auxiliary Diophantine statements the
// classification relies on. Each verifier is a direct loop over its variable
// ranges with exact arithmetic; none reuses the structural machinery it is
// meant to cross-check. Verdicts are always "within bounds", never proofs.

#include "rnkit/arith.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace rnkit {

using SearchBounds = std::map<std::string, unsigned long>;
using Tuple = std::vector<Integer>;

inline unsigned long bound_or(const SearchBounds& b, const std::string& key,
                              unsigned long fallback) {
    auto it = b.find(key);
    return it == b.end() ? fallback : it->second;
}

struct LemmaReport {
    std::string lemma;
    SearchBounds bounds;
    std::vector<Tuple> claimed;  // the published solution set, intersected with bounds
    std::vector<Tuple> found;
    std::vector<std::string> notes;

    bool confirmed() const {
        auto norm = [](std::vector<Tuple> v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v;
        };
        return norm(claimed) == norm(found);
    }
    std::string verdict() const {
        return confirmed() ? "confirmed-within-bounds" : "discrepancy";
    }
};

namespace detail {

/// v = y^n for some n in [2, n_max] with 1 < y <= y_max (0 = unbounded)?
/// Returns every such (y, n).
inline std::vector<std::pair<Integer, unsigned long>> power_hits(
    const Integer& v, unsigned long n_max, const Integer& y_max = 0) {
    std::vector<std::pair<Integer, unsigned long>> out;
    if (v < 4)
        return out;
    for (unsigned long n = 2; n <= n_max; ++n) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), n) != 0 && root > 1 &&
            (y_max == 0 || root <= y_max))
            out.emplace_back(root, n);
    }
    return out;
}

}  // namespace detail

/// Lemma 2.8 scope: x^m - y^n = 1 with min(x, y, m, n) > 1.
inline LemmaReport verify_catalan(const SearchBounds& b = {}) {
    LemmaReport rep;
    rep.lemma = "2.8";
    const unsigned long xb = bound_or(b, "x", 1000), yb = bound_or(b, "y", 1000);
    const unsigned long mb = bound_or(b, "m", 20), nb = bound_or(b, "n", 20);
    rep.bounds = {{"x", xb}, {"y", yb}, {"m", mb}, {"n", nb}};
    if (xb >= 3 && yb >= 2 && mb >= 2 && nb >= 3)
        rep.claimed.push_back({3, 2, 2, 3});
    for (unsigned long x = 2; x <= xb; ++x)
        for (unsigned long m = 2; m <= mb; ++m) {
            Integer v = ipow(x, m) - 1;
            for (auto& [y, n] : detail::power_hits(v, nb, yb))
                rep.found.push_back({Integer(x), y, Integer(m), Integer(n)});
        }
    return rep;
}

/// Lemmas 2.11 (+1) / 2.12 (-1): 2^r 3^s + sign = y^n, y > 1, n > 1.
inline LemmaReport verify_pow23(const SearchBounds& b, int sign) {
    LemmaReport rep;
    rep.lemma = sign > 0 ? "2.11" : "2.12";
    const unsigned long rb = bound_or(b, "r", 30), sb = bound_or(b, "s", 30);
    const unsigned long nb = bound_or(b, "n", 20);
    rep.bounds = {{"r", rb}, {"s", sb}, {"n", nb}};
    if (sign > 0) {
        if (rb >= 3 && sb >= 1) rep.claimed.push_back({3, 1, 5, 2});
        if (rb >= 4 && sb >= 1) rep.claimed.push_back({4, 1, 7, 2});
        if (rb >= 5 && sb >= 2) rep.claimed.push_back({5, 2, 17, 2});
    }
    for (unsigned long r = 1; r <= rb; ++r)
        for (unsigned long s = 1; s <= sb; ++s) {
            Integer v = pow2(r) * ipow(3, s) + sign;
            for (auto& [y, n] : detail::power_hits(v, nb))
                rep.found.push_back({Integer(r), Integer(s), y, Integer(n)});
        }
    return rep;
}

/// Lemmas 2.9 (+1) / 2.10 (-1): 2^r +- 1 = 3^s y^n with s >= 1, 3 does not
/// divide y, y > 1, n > 1. Both are claimed empty. allow_3_div_y drops
/// the 3-coprimality side condition (sanity knob for the tests).
inline LemmaReport verify_3s_pm1(const SearchBounds& b, int sign,
                                 bool allow_3_div_y = false) {
    LemmaReport rep;
    rep.lemma = sign > 0 ? "2.9" : "2.10";
    const unsigned long rb = bound_or(b, "r", 60), nb = bound_or(b, "n", 20);
    rep.bounds = {{"r", rb}, {"n", nb}};
    if (allow_3_div_y)
        rep.notes.push_back("side condition 3 | y admitted");
    for (unsigned long r = 1; r <= rb; ++r) {
        Integer v = pow2(r) + sign;
        if (v < 3 || v % 3 != 0)
            continue;
        Integer rest = v;
        for (unsigned long s = 1; rest % 3 == 0; ++s) {
            rest /= 3;
            if (rest <= 1)
                break;
            for (auto& [y, n] : detail::power_hits(rest, nb))
                if (allow_3_div_y || y % 3 != 0)
                    rep.found.push_back({Integer(r), Integer(s), y, Integer(n)});
        }
    }
    return rep;
}

/// Lemma 2.5: x^3 + 1 = 3 y^2, claimed empty.
inline LemmaReport verify_nagell_cubic(const SearchBounds& b = {}) {
    LemmaReport rep;
    rep.lemma = "2.5";
    const unsigned long xb = bound_or(b, "x", 10000);
    rep.bounds = {{"x", xb}};
    for (unsigned long x = 1; x <= xb; ++x) {
        Integer v = ipow(x, 3) + 1;
        if (v % 3 != 0)
            continue;
        auto r = isqrt(v / 3);
        if (r.exact && r.root >= 1)
            rep.found.push_back({Integer(x), r.root});
    }
    return rep;
}

/// Lemma 2.6: x^2 + x + 1 = 3 y^p, |x| > 1, y > 1, p an odd prime; claimed empty.
inline LemmaReport verify_nagell_quadratic(const SearchBounds& b = {}) {
    LemmaReport rep;
    rep.lemma = "2.6";
    const unsigned long xb = bound_or(b, "x", 500), pb = bound_or(b, "p", 7);
    rep.bounds = {{"x", xb}, {"p", pb}};
    for (long x = -static_cast<long>(xb); x <= static_cast<long>(xb); ++x) {
        if (x >= -1 && x <= 1)
            continue;
        Integer v = Integer(x) * x + x + 1;
        if (v % 3 != 0)
            continue;
        Integer w = v / 3;
        for (unsigned long p = 3; p <= pb; p += 2) {
            if (!is_probable_prime(p))
                continue;
            Integer root;
            if (w > 1 && mpz_root(root.get_mpz_t(), w.get_mpz_t(), p) != 0 && root > 1)
                rep.found.push_back({Integer(x), root, Integer(p)});
        }
    }
    return rep;
}

/// Lemma 2.7: (2^r + 1)/3 = y^n, y > 1, n > 1; claimed empty.
inline LemmaReport verify_repunit_base2(const SearchBounds& b = {}) {
    LemmaReport rep;
    rep.lemma = "2.7";
    const unsigned long rb = bound_or(b, "r", 60), nb = bound_or(b, "n", 20);
    rep.bounds = {{"r", rb}, {"n", nb}};
    for (unsigned long r = 1; r <= rb; ++r) {
        Integer v = pow2(r) + 1;
        if (v % 3 != 0)
            continue;
        for (auto& [y, n] : detail::power_hits(v / 3, nb))
            rep.found.push_back({Integer(r), y, Integer(n)});
    }
    return rep;
}

/// Lemma 4.1: (x^n + 1)/(x + 1) = y^2, x > 1, n > 1; claimed empty.
inline LemmaReport verify_ljunggren_square(const SearchBounds& b = {}) {
    LemmaReport rep;
    rep.lemma = "4.1";
    const unsigned long xb = bound_or(b, "x", 200), nb = bound_or(b, "n", 20);
    rep.bounds = {{"x", xb}, {"n", nb}};
    for (unsigned long x = 2; x <= xb; ++x)
        for (unsigned long n = 2; n <= nb; ++n) {
            Integer v = ipow(x, n) + 1;
            if (v % (Integer(x) + 1) != 0)
                continue;
            auto r = isqrt(v / (Integer(x) + 1));
            if (r.exact && r.root >= 1)
                rep.found.push_back({Integer(x), r.root, Integer(n)});
        }
    return rep;
}

/// The four small-curve reports (Lemmas 2.5, 2.6, 2.7, 4.1) in one batch.
inline std::vector<LemmaReport> verify_small_curves(const SearchBounds& b = {}) {
    return {verify_nagell_cubic(b), verify_nagell_quadratic(b),
            verify_repunit_base2(b), verify_ljunggren_square(b)};
}

/// Lemma 4.2: 2^(2r-3) - 2^r + 1 = 97^s, r >= 5; claimed {(5, 1)}.
inline LemmaReport verify_97(unsigned long r_max = 60) {
    LemmaReport rep;
    rep.lemma = "4.2";
    rep.bounds = {{"r", r_max}};
    if (r_max >= 5)
        rep.claimed.push_back({5, 1});
    for (unsigned long r = 5; r <= r_max; ++r) {
        Integer v = pow2(2 * r - 3) - pow2(r) + 1;
        unsigned long s = 0;
        while (v % 97 == 0) {
            v /= 97;
            ++s;
        }
        if (v == 1 && s >= 1)
            rep.found.push_back({Integer(r), Integer(s)});
    }
    return rep;
}

/// Lemmas 4.3 / 4.4: 7x^2 + 25^(2y) = 2^(z+2) resp. 15x^2 + 49^(2y) = 2^(z+2);
/// both claimed empty.
inline std::vector<LemmaReport> verify_4344(const SearchBounds& b = {}) {
    const unsigned long zb = bound_or(b, "z", 60);
    std::vector<LemmaReport> reps;
    struct Case { const char* id; unsigned long d1; unsigned long base; };
    for (auto [id, d1, base] : {Case{"4.3", 7, 25}, Case{"4.4", 15, 49}}) {
        LemmaReport rep;
        rep.lemma = id;
        rep.bounds = {{"z", zb}};
        for (unsigned long z = 1; z <= zb; ++z) {
            const Integer target = pow2(z + 2);
            for (unsigned long y = 1;; ++y) {
                Integer py = ipow(base, 2 * y);
                if (py >= target)
                    break;
                Integer rem = target - py;
                if (rem % d1 != 0)
                    continue;
                auto r = isqrt(rem / d1);
                if (r.exact && r.root >= 1)
                    rep.found.push_back({r.root, Integer(y), Integer(z)});
            }
        }
        reps.push_back(std::move(rep));
    }
    return reps;
}

/// Lemma 2.2 as a universal property of one pair: every prime q dividing
/// (x^p - 1)/(x - 1) satisfies q = p or q == 1 (mod 2p), and if p divides the
/// quotient it divides it exactly once.
inline bool birkhoff_vandiver_check(const Integer& x, unsigned long p) {
    if (x >= -1 && x <= 1)
        throw std::invalid_argument("birkhoff_vandiver_check: need |x| > 1");
    if (p == 2 || !is_probable_prime(p))
        throw std::invalid_argument("birkhoff_vandiver_check: p must be an odd prime");
    Integer q = (ipow(x, p) - 1) / (x - 1);
    if (q < 0)
        q = -q;
    if (q % (Integer(p) * p) == 0)
        return false;
    for (const auto& prime : factor(q))
        if (prime != p && prime % (2 * p) != 1)
            return false;
    return true;
}

/// Lemma 2.2 over a grid of (x, p); the report lists violating pairs.
inline LemmaReport verify_birkhoff_vandiver(const SearchBounds& b = {}) {
    LemmaReport rep;
    rep.lemma = "2.2";
    const unsigned long xb = bound_or(b, "x", 50), pb = bound_or(b, "p", 13);
    rep.bounds = {{"x", xb}, {"p", pb}};
    for (long x = -static_cast<long>(xb); x <= static_cast<long>(xb); ++x) {
        if (x >= -1 && x <= 1)
            continue;
        for (unsigned long p = 3; p <= pb; p += 2) {
            if (!is_probable_prime(p))
                continue;
            if (!birkhoff_vandiver_check(x, p))
                rep.found.push_back({Integer(x), Integer(p)});
        }
    }
    return rep;
}

}  // namespace rnkit
