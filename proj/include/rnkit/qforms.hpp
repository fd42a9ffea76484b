#pragma once

// The representation equation d1 X^2 + d2 Y^2 = 2^(Z+2) with gcd(X, Y) = 1:
// least solutions, expansion of every solution from the least one by ring
// exponentiation, and the allied one-coefficient equation 1 + D y^2 = 2^(z+2).

#include "rnkit/arith.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rnkit {

struct QFInstance {
    Integer d1;
    Integer d2;

    std::optional<std::string> violation() const {
        if (d1 < 1 || d2 < 1)
            return "coefficients must be positive";
        if (mpz_even_p(d1.get_mpz_t()) || mpz_even_p(d2.get_mpz_t()))
            return "coefficients must be odd";
        if (gcd(d1, d2) != 1)
            return "coefficients must be coprime";
        return std::nullopt;
    }
};

inline void require_valid(const QFInstance& q) {
    if (auto v = q.violation())
        throw std::invalid_argument("invalid instance: " + *v);
}

struct QFSolution {
    Integer x;
    Integer y;
    unsigned long z;

    friend bool operator==(const QFSolution& a, const QFSolution& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend auto operator<=>(const QFSolution& a, const QFSolution& b) {
        if (auto c = a.z <=> b.z; c != 0) return c;
        if (int c = cmp(a.x, b.x); c != 0) return c <=> 0;
        return cmp(a.y, b.y) <=> 0;
    }
};

inline bool satisfies(const QFInstance& q, const QFSolution& s) {
    return q.d1 * s.x * s.x + q.d2 * s.y * s.y == pow2(s.z + 2);
}

inline constexpr unsigned long kDefaultZBound = 64;

namespace detail {

/// All essentially distinct solutions at one fixed level N = 2^(z+2), given a
/// square root r of -d2 * d1^(-1) (mod N). Any solution has X, Y odd coprime,
/// so X == tau * Y (mod N) for one of the four roots tau in {+-r, N/2 +- r};
/// inside the lattice {(x, y) : x == tau y (mod N)} the solution vector is
/// forced to be (up to sign) the first vector of a Lagrange-reduced basis
/// under the form d1 x^2 + d2 y^2: the Gram determinant is d1 d2 N^2, so a
/// second basis vector of value <= (4/3) N would need the first to exceed
/// (3/4) d1 d2 N > (4/3) N, a contradiction for d1 d2 >= 3.
inline std::set<std::pair<Integer, Integer>> level_solutions(const QFInstance& q,
                                                             unsigned long z,
                                                             const Integer& r) {
    const Integer mod = pow2(z + 2);
    const Integer half = pow2(z + 1);
    std::set<std::pair<Integer, Integer>> found;
    const std::vector<Integer> roots = {r, Integer(mod - r), Integer((half + r) % mod),
                                        Integer((half - r + mod) % mod)};
    for (const Integer& root : roots) {
        auto qf = [&](const Integer& x, const Integer& y) -> Integer {
            return q.d1 * x * x + q.d2 * y * y;
        };
        Integer ux = root, uy = 1, vx = mod, vy = 0;
        Integer qu = qf(ux, uy), qv = qf(vx, vy);
        if (qu > qv) {
            std::swap(ux, vx);
            std::swap(uy, vy);
            std::swap(qu, qv);
        }
        while (true) {
            // subtract the nearest-integer multiple of u from v
            Integer bil = q.d1 * ux * vx + q.d2 * uy * vy;
            Integer m, num = 2 * bil + qu, den = 2 * qu;
            mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            vx -= m * ux;
            vy -= m * uy;
            qv = qf(vx, vy);
            if (qv >= qu)
                break;
            std::swap(ux, vx);
            std::swap(uy, vy);
            std::swap(qu, qv);
        }
        for (const auto& [cx, cy] : {std::pair{ux, uy}, std::pair{vx, vy}}) {
            Integer x = cx < 0 ? -cx : cx, y = cy < 0 ? -cy : cy;
            if (x >= 1 && y >= 1 && gcd(x, y) == 1 && qf(x, y) == mod)
                found.emplace(x, y);
        }
    }
    return found;
}

}  // namespace detail

/// The solution with minimal Z <= z_bound, or nullopt when none is found
/// within the bound (no claim of nonexistence beyond it).
inline std::optional<QFSolution> least_solution(const QFInstance& q,
                                                unsigned long z_bound = kDefaultZBound) {
    require_valid(q);
    // X, Y are coprime and 2^(Z+2) is even, so both are odd; odd squares are
    // 1 mod 8, hence d1 + d2 == 0 (mod 8) is necessary.
    if ((q.d1 + q.d2) % 8 != 0)
        return std::nullopt;
    // Maintain r with r^2 == -d2 * d1^(-1) (mod 2^(z+2)) by Hensel lifting;
    // the target is 1 (mod 8) whenever d1 + d2 == 0 (mod 8), so the root
    // exists at every level.
    Integer r = 1;
    for (unsigned long z = 1; z <= z_bound; ++z) {
        const Integer mod = pow2(z + 2);
        Integer d1inv;
        mpz_invert(d1inv.get_mpz_t(), q.d1.get_mpz_t(), mod.get_mpz_t());
        Integer a = (-q.d2 * d1inv) % mod;
        if (a < 0)
            a += mod;
        if ((r * r - a) % mod != 0)
            r += pow2(z);
        auto found = detail::level_solutions(q, z, r);
        if (found.size() > 1)
            throw std::logic_error("least_solution: two essentially distinct solutions at one Z");
        if (!found.empty())
            return QFSolution{found.begin()->first, found.begin()->second, z};
    }
    return std::nullopt;
}

namespace detail {

// Element (A + B sqrt(d1) + C sqrt(-d2) + D sqrt(-d1 d2)), coordinates scaled
// by 2^den_log2. For d1 = 1 the formal sqrt(d1) collapses to 1 at extraction.
struct Ring4 {
    Integer a, b, c, d;
    unsigned long den_log2;
};

inline Ring4 mul(const Ring4& p, const Ring4& r, const Integer& d1, const Integer& d2) {
    Ring4 out;
    out.a = p.a * r.a + d1 * p.b * r.b - d2 * p.c * r.c - d1 * d2 * p.d * r.d;
    out.b = p.a * r.b + p.b * r.a - d2 * (p.c * r.d + p.d * r.c);
    out.c = p.a * r.c + p.c * r.a + d1 * (p.b * r.d + p.d * r.b);
    out.d = p.a * r.d + p.d * r.a + p.b * r.c + p.c * r.b;
    out.den_log2 = p.den_log2 + r.den_log2;
    return out;
}

}  // namespace detail

/// The solution with Z = Z1 * t obtained as the t-th power of
/// (X1 sqrt(d1) + Y1 sqrt(-d2)) / 2, coordinates taken in absolute value.
/// For d1 > 1 only odd t is admissible.
inline QFSolution expand_solution(const QFInstance& q, const QFSolution& least,
                                  unsigned long t) {
    require_valid(q);
    if (t < 1)
        throw std::invalid_argument("expand_solution: t must be >= 1");
    if (q.d1 > 1 && t % 2 == 0)
        throw std::invalid_argument("expand_solution: even t is not admissible when d1 > 1");
    if (!satisfies(q, least))
        throw std::invalid_argument("expand_solution: least solution does not satisfy the instance");

    detail::Ring4 base{0, least.x, least.y, 0, 1};
    detail::Ring4 acc{1, 0, 0, 0, 0};
    for (unsigned long i = 0; i < t; ++i)
        acc = detail::mul(acc, base, q.d1, q.d2);
    // result = (acc.a + acc.b sqrt(d1) + acc.c sqrt(-d2) + acc.d sqrt(-d1 d2)) / 2^t
    // and must equal (X sqrt(d1) + Y sqrt(-d2)) / 2 for odd t (d1 > 1), or
    // (X + Y sqrt(-d2)) / 2 when d1 = 1 (sqrt(d1) collapses into the
    // rational part).
    Integer xs, ys;
    if (q.d1 > 1) {
        if (acc.a != 0 || acc.d != 0)
            throw std::logic_error("expand_solution: unexpected ring components");
        xs = acc.b;
        ys = acc.c;
    } else {
        xs = acc.a + acc.b;
        ys = acc.c + acc.d;
    }
    // scale 2^(t-1) out: (xs / 2^t) = X / 2
    const Integer scale = pow2(t - 1);
    if (xs % scale != 0 || ys % scale != 0)
        throw std::logic_error("expand_solution: non-half-integer coordinates");
    xs /= scale;
    ys /= scale;
    if (xs < 0) xs = -xs;
    if (ys < 0) ys = -ys;
    QFSolution out{xs, ys, least.z * t};
    if (!satisfies(q, out))
        throw std::logic_error("expand_solution: result fails the defining equation");
    return out;
}

/// All solutions with Z = Z1 * t for admissible t <= t_max.
inline std::vector<std::pair<unsigned long, QFSolution>> expand_solutions(
    const QFInstance& q, const QFSolution& least, unsigned long t_max) {
    std::vector<std::pair<unsigned long, QFSolution>> out;
    const unsigned long step = q.d1 > 1 ? 2 : 1;
    for (unsigned long t = 1; t <= t_max; t += step)
        out.emplace_back(t, expand_solution(q, least, t));
    return out;
}

/// True iff distinct solutions have pairwise distinct Z (duplicates of the
/// same triple are allowed).
inline bool distinct_z_check(const std::vector<QFSolution>& sols) {
    std::set<QFSolution> dedup(sols.begin(), sols.end());
    std::set<unsigned long> zs;
    for (const auto& s : dedup)
        if (!zs.insert(s.z).second)
            return false;
    return true;
}

/// Least solution of X'^2 + (d1 d2) Y'^2 = 2^(Z'+2) derived from the least
/// solution of the two-coefficient form: (|d1 X1^2 - d2 Y1^2| / 2, X1 Y1, 2 Z1).
inline QFSolution composed_least(const QFInstance& q, const QFSolution& least) {
    require_valid(q);
    if (q.d1 == 1 || q.d2 == 1)
        throw std::invalid_argument("composed_least: requires min(d1, d2) > 1");
    if (!satisfies(q, least))
        throw std::invalid_argument("composed_least: not a solution of the instance");
    Integer diff = q.d1 * least.x * least.x - q.d2 * least.y * least.y;
    if (diff < 0) diff = -diff;
    QFSolution out{diff / 2, least.x * least.y, 2 * least.z};
    if (QFInstance composed{1, q.d1 * q.d2}; !satisfies(composed, out))
        throw std::logic_error("composed_least: result fails the composed equation");
    return out;
}

/// All (y, z) with z <= z_bound solving 1 + D y^2 = 2^(z+2).
inline std::vector<std::pair<Integer, unsigned long>> solve_one_coeff(
    const Integer& D, unsigned long z_bound) {
    if (D < 1 || mpz_even_p(D.get_mpz_t()))
        throw std::invalid_argument("solve_one_coeff: D must be odd and positive");
    std::vector<std::pair<Integer, unsigned long>> out;
    for (unsigned long z = 1; z <= z_bound; ++z) {
        Integer rem = pow2(z + 2) - 1;
        if (rem % D != 0)
            continue;
        auto r = isqrt(rem / D);
        if (r.exact && r.root >= 1)
            out.emplace_back(r.root, z);
    }
    return out;
}

}  // namespace rnkit
