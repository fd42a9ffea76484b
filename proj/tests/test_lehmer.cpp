#include "rnkit/lehmer.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

using namespace rnkit;

namespace {

// Independent evaluator: exact arithmetic in the ring spanned by
// {1, sqrt(a), sqrt(c), sqrt(a)sqrt(c)} with rational coordinates, then
// L_k = (alpha^k - beta^k) / (alpha - beta) resp. / (alpha^2 - beta^2).
struct RingElem {
    mpq_class one, ra, rc, rac;
};

RingElem ring_mul(const RingElem& p, const RingElem& q, const mpz_class& a, const mpz_class& c) {
    RingElem r;
    r.one = p.one * q.one + a * p.ra * q.ra + c * p.rc * q.rc + a * c * p.rac * q.rac;
    r.ra = p.one * q.ra + p.ra * q.one + c * (p.rc * q.rac + p.rac * q.rc);
    r.rc = p.one * q.rc + p.rc * q.one + a * (p.ra * q.rac + p.rac * q.ra);
    r.rac = p.one * q.rac + p.rac * q.one + p.ra * q.rc + p.rc * q.ra;
    return r;
}

Integer lehmer_via_ring(const LehmerParams& p, unsigned long k) {
    // alpha = (sqrt(a) + sqrt(c)) / 2
    RingElem alpha{0, mpq_class(1, 2), mpq_class(1, 2), 0};
    RingElem acc{1, 0, 0, 0};
    for (unsigned long i = 0; i < k; ++i)
        acc = ring_mul(acc, alpha, p.a, p.c);
    // odd k: alpha^k - beta^k = 2 rc sqrt(c), divided by alpha - beta = sqrt(c)
    // even k: alpha^k - beta^k = 2 rac sqrt(ac), divided by sqrt(a)sqrt(c)
    mpq_class val = 2 * (k % 2 == 1 ? acc.rc : acc.rac);
    REQUIRE(val.get_den() == 1);
    return val.get_num();
}

}  // namespace

TEST_CASE("lehmer parameter validation") {
    CHECK(LehmerParams{7, -25}.valid());
    CHECK(LehmerParams{1, -7}.valid());
    CHECK_FALSE(LehmerParams{-3, -7}.valid());   // a must be positive
    CHECK_FALSE(LehmerParams{4, -7}.valid());    // a != c (mod 4)
    CHECK_FALSE(LehmerParams{8, 0}.valid());     // c = 0
    CHECK_FALSE(LehmerParams{4, 4}.valid());     // alpha*beta = 0
    CHECK_FALSE(LehmerParams{6, -6}.valid());    // gcd(a, b) = 3
    CHECK_FALSE(LehmerParams{1, -3}.valid());    // a = b: root of unity ratio
    CHECK_FALSE(LehmerParams{2, -2}.valid());    // a = 2b
    CHECK_FALSE(LehmerParams{3, -1}.valid());    // a = 3b
    CHECK_THROWS_AS(lehmer_number({4, -7}, 3), std::invalid_argument);
}

TEST_CASE("lehmer_number values from the (7, -25) pair") {
    LehmerParams p{7, -25};
    CHECK(lehmer_number(p, 1) == 1);
    CHECK(lehmer_number(p, 2) == 1);
    CHECK(lehmer_number(p, 3) == -1);
    CHECK(lehmer_number(p, 5) == -55);
    CHECK_THROWS_AS(lehmer_number(p, 0), std::invalid_argument);
}

TEST_CASE("lehmer_number agrees with ring exponentiation") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-30, 30);
    int done = 0;
    while (done < 20) {
        LehmerParams p{std::abs(dist(rng)) + 1, dist(rng)};
        if (!p.valid())
            continue;
        ++done;
        for (unsigned long k = 1; k <= 30; ++k)
            CHECK(lehmer_number(p, k) == lehmer_via_ring(p, k));
    }
}

TEST_CASE("expansion coefficients") {
    for (unsigned long k = 1; k <= 12; ++k)
        CHECK(expansion_coeff(k, 0) == 1);
    CHECK(expansion_coeff(5, 1) == 5);
    CHECK(expansion_coeff(7, 3) == 7);
    CHECK_THROWS_AS(expansion_coeff(5, 3), std::invalid_argument);
}

TEST_CASE("power_sum examples") {
    CHECK(power_sum(1, 2, 3) == -5);
    for (long s = -5; s <= 5; ++s)
        CHECK(power_sum(s, 17, 1) == s);
    // alpha^4 + beta^4 = 1 - 2^5 + 2^(2*5-3) for s = 1, q = 2^3
    CHECK(power_sum(1, 8, 4) == 97);
}

TEST_CASE("power_sum satisfies the two-term recurrence") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        Integer s = dist(rng), q = dist(rng);
        Integer p0 = 2, p1 = s;
        for (unsigned long k = 2; k <= 30; ++k) {
            Integer pk = s * p1 - q * p0;
            CHECK(power_sum(s, q, k) == pk);
            p0 = p1;
            p1 = pk;
        }
    }
}

TEST_CASE("primitive divisor examples") {
    CHECK_FALSE(has_primitive_divisor({1, -7}, 13).has);
    CHECK_FALSE(has_primitive_divisor({7, -1}, 9).has);
    auto r = has_primitive_divisor({1, -7}, 11);
    CHECK(r.has);
    REQUIRE(r.witness);
    // witness must divide L_11 and be coprime to a*c and all earlier terms
    LehmerParams p{1, -7};
    CHECK(lehmer_number(p, 11) % *r.witness == 0);
    CHECK(Integer(p.a * p.c) % *r.witness != 0);
    for (unsigned long i = 1; i < 11; ++i)
        CHECK(lehmer_number(p, i) % *r.witness != 0);
    CHECK_THROWS_AS(has_primitive_divisor({1, -7}, 1), std::invalid_argument);
}

TEST_CASE("defective table contents") {
    CHECK(defective_table(7).size() == 6);
    CHECK(defective_table(11).empty());
    auto t15 = defective_table(15);
    REQUIRE(t15.size() == 2);
    CHECK(t15[0].a == 7);
    CHECK(t15[0].c == -1);
    CHECK(t15[1].a == 10);
    CHECK(t15[1].c == -2);
    CHECK_THROWS_AS(defective_table(8), std::invalid_argument);
    CHECK_THROWS_AS(defective_table(5), std::invalid_argument);
    CHECK_THROWS_AS(defective_table(31), std::invalid_argument);
}

TEST_CASE("defective table matches the shipped data file") {
    std::ifstream in(std::string(RNKIT_DATA_DIR) + "/defective_pairs.txt");
    REQUIRE(in.good());
    std::vector<DefectiveEntry> from_file;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream row(line);
        unsigned long k;
        long a, c;
        REQUIRE((row >> k >> a >> c));
        from_file.push_back({k, a, c, false});
    }
    const auto& table = defective_entries();
    REQUIRE(from_file.size() == table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(from_file[i].k == table[i].k);
        CHECK(from_file[i].a == table[i].a);
        CHECK(from_file[i].c == table[i].c);
    }
}

TEST_CASE("listed defective parameters have no primitive divisor") {
    for (const auto& e : defective_entries()) {
        if (e.flagged)
            continue;
        LehmerParams p{e.a, e.c};
        REQUIRE(p.valid());
        CHECK_FALSE(has_primitive_divisor(p, e.k).has);
    }
    // the flagged row happens to verify as well; kept out of the loop above
    // because it is stored verbatim from a source line under suspicion
    CHECK_FALSE(has_primitive_divisor({14, -22}, 7).has);
}

TEST_CASE("non-listed valid parameters up to 20 all have primitive divisors") {
    for (unsigned long k = 7; k <= 29; k += 2)
        for (long a = 1; a <= 20; ++a)
            for (long c = -20; c <= 20; ++c) {
                LehmerParams p{a, c};
                if (!p.valid() || is_listed_defective(a, c, k))
                    continue;
                INFO("k=" << k << " a=" << a << " c=" << c);
                CHECK(has_primitive_divisor(p, k).has);
            }
}

TEST_CASE("indices above 30 are totally non-defective (spot check)") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> dist(-20, 20);
    for (unsigned long k = 31; k <= 41; k += 2) {
        int done = 0;
        while (done < 10) {
            LehmerParams p{std::abs(dist(rng)) + 1, dist(rng)};
            if (!p.valid())
                continue;
            ++done;
            INFO("k=" << k << " a=" << p.a << " c=" << p.c);
            CHECK(has_primitive_divisor(p, k).has);
        }
    }
}
