#include "rnkit/fiblucas.hpp"

#include <catch_amalgamated.hpp>

using namespace rnkit;

TEST_CASE("fib_lucas base cases and known values") {
    auto fl = fib_lucas(0);
    CHECK(fl.f == 0);
    CHECK(fl.l == 2);
    fl = fib_lucas(3);
    CHECK(fl.f == 2);
    CHECK(fl.l == 4);  // L_3 = 2^2
    fl = fib_lucas(6);
    CHECK(fl.f == 8);  // F_6 = 2^3
    CHECK(fl.l == 18);
    fl = fib_lucas(12);
    CHECK(fl.f == 144);
    CHECK(fl.l == 322);
}

TEST_CASE("fib_lucas matches the additive recurrence") {
    Integer f0 = 0, f1 = 1, l0 = 2, l1 = 1;
    for (unsigned long k = 0; k <= 90; ++k) {
        auto fl = fib_lucas(k);
        CHECK(fl.f == f0);
        CHECK(fl.l == l0);
        Integer f2 = f0 + f1, l2 = l0 + l1;
        f0 = f1; f1 = f2;
        l0 = l1; l1 = l2;
    }
}

TEST_CASE("Pell-type identity and parity laws up to k = 60") {
    for (unsigned long k = 0; k <= 60; ++k) {
        auto fl = fib_lucas(k);
        int sign = k % 2 == 0 ? 1 : -1;
        CHECK(fl.l * fl.l - 5 * fl.f * fl.f == sign * 4);
        bool even = mpz_even_p(Integer(fl.f * fl.l).get_mpz_t()) != 0;
        CHECK(even == (k % 3 == 0));
        if (k >= 1)
            CHECK(gcd(fl.f, fl.l) == (k % 3 == 0 ? 2 : 1));
    }
}

TEST_CASE("solve_pell5 small bounds") {
    auto sols = solve_pell5(3);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].u == 1);
    CHECK(sols[0].v == 1);
    CHECK(sols[0].k == 1);
    CHECK(sols[0].sign == -1);
    CHECK(sols[1].u == 3);
    CHECK(sols[1].v == 1);
    CHECK(sols[1].k == 2);
    CHECK(sols[1].sign == 1);

    sols = solve_pell5(4);
    REQUIRE(sols.size() == 3);
    CHECK(sols[2].u == 4);
    CHECK(sols[2].v == 2);
    CHECK(sols[2].k == 3);
    CHECK(sols[2].sign == -1);
}

TEST_CASE("solve_pell5 output is exactly the Lucas/Fibonacci pairs in range") {
    const Integer bound = 1000;
    auto sols = solve_pell5(bound);
    for (const auto& s : sols) {
        auto fl = fib_lucas(s.k);
        CHECK(fl.l == s.u);
        CHECK(fl.f == s.v);
        CHECK(s.u * s.u - 5 * s.v * s.v == s.sign * 4);
    }
    // every index with L_k <= bound and F_k >= 1 appears
    std::size_t expected = 0;
    for (unsigned long k = 1; fib_lucas(k).l <= bound || k < 3; ++k)
        if (fib_lucas(k).l <= bound)
            ++expected;
    CHECK(sols.size() == expected);
}

TEST_CASE("fib_lucas_powers classification to k = 30") {
    auto hits = fib_lucas_powers(30);
    std::vector<SequencePower> fib, lucas;
    for (const auto& h : hits)
        (h.which == 'F' ? fib : lucas).push_back(h);
    REQUIRE(fib.size() == 2);
    CHECK(fib[0].k == 6);
    CHECK(fib[0].z == 2);
    CHECK(fib[0].n == 3);
    CHECK(fib[1].k == 12);
    CHECK(fib[1].z == 12);
    CHECK(fib[1].n == 2);
    REQUIRE(lucas.size() == 1);
    CHECK(lucas[0].k == 3);
    CHECK(lucas[0].z == 2);
    CHECK(lucas[0].n == 2);

    CHECK(fib_lucas_powers(2).empty());
}
