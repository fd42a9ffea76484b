#include "rnkit/classifier.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace rnkit;

namespace {

std::set<Solution> labeled_set(const Classification& cls) {
    std::set<Solution> out;
    for (const auto& s : cls.solutions)
        out.insert(s.sol);
    return out;
}

}  // namespace

TEST_CASE("solver instance validation") {
    CHECK_FALSE(Instance{3, 5}.violation());
    CHECK(Instance{3, 9}.violation());   // not coprime
    CHECK(Instance{4, 5}.violation());   // even
    CHECK(Instance{3, 1}.violation());   // d2 must exceed 1
    CHECK_THROWS_AS(brute_force({3, 9}), std::invalid_argument);
}

TEST_CASE("brute force oracle on known instances") {
    auto sols = brute_force({3, 5}, 20);
    CHECK(sols == std::vector<Solution>{{1, 1, 1}, {3, 1, 3}, {1, 3, 5}, {13, 1, 7}});

    sols = brute_force({13, 3}, 20);
    CHECK(sols == std::vector<Solution>{{1, 1, 2}, {1, 5, 6}, {71, 1, 14}});

    sols = brute_force({31, 97}, 20);
    CHECK(sols == std::vector<Solution>{{1, 1, 5}, {15, 2, 12}, {65, 1, 15}});

    for (const auto& s : brute_force({5, 3}, 50))
        CHECK(satisfies({5, 3}, s));
}

TEST_CASE("odd-m structural classification") {
    auto pc = classify_odd_m({11, 5}, 64);
    CHECK(pc.structural_complete);
    REQUIRE(pc.sols.size() == 2);
    std::set<Solution> got;
    for (auto& [s, label] : pc.sols)
        got.insert(s);
    CHECK(got == std::set<Solution>{{1, 1, 2}, {19, 3, 10}});

    pc = classify_odd_m({21, 11}, 64);
    got.clear();
    for (auto& [s, label] : pc.sols)
        got.insert(s);
    CHECK(got == std::set<Solution>{{1, 1, 3}, {79, 1, 15}});

    FamilyInfo fam;
    pc = classify_odd_m({31, 97}, 64, &fam);
    got.clear();
    for (auto& [s, label] : pc.sols)
        got.insert(s);
    CHECK(got == std::set<Solution>{{1, 1, 5}, {65, 1, 15}});
    CHECK(fam.member);
    CHECK(fam.lambda == 1);
    CHECK(fam.z1 == 5);
    // printed closed form gives 63; ring exponentiation gives 65
    CHECK(fam.computed_t3_x == 65);
    CHECK(fam.printed_t3_x == 63);
    CHECK_FALSE(fam.printed_formula_matches);

    CHECK_THROWS_AS(classify_odd_m({1, 7}, 64), std::invalid_argument);
}

TEST_CASE("even-m structural classification") {
    auto pc = classify_even_m({7, 3}, 64);
    CHECK(pc.structural_complete);
    std::set<Solution> got;
    for (auto& [s, label] : pc.sols)
        got.insert(s);
    CHECK(got == std::set<Solution>{{1, 2, 2}, {5, 4, 6}});

    pc = classify_even_m({15, 7}, 64);
    got.clear();
    for (auto& [s, label] : pc.sols)
        got.insert(s);
    CHECK(got == std::set<Solution>{{1, 2, 4}, {33, 2, 12}});

    // family instance: Lemma 4.5 override
    pc = classify_even_m({3, 5}, 64);
    CHECK(pc.structural_complete);
    CHECK(pc.sols.empty());

    pc = classify_even_m({31, 97}, 64);
    REQUIRE(pc.sols.size() == 1);
    CHECK(pc.sols[0].first == Solution{15, 2, 12});
}

TEST_CASE("classify merges structural and oracle routes") {
    auto cls = classify({5, 3});
    CHECK(cls.count == 4);
    CHECK(labeled_set(cls) == std::set<Solution>{{1, 1, 1}, {1, 3, 3}, {5, 1, 5}, {19, 5, 9}});
    CHECK(cls.theorem_b_exception);
    CHECK_FALSE(cls.discrepancy);
    for (const auto& s : cls.solutions)
        CHECK(s.provenance == "both");

    cls = classify({31, 97});
    CHECK(cls.count == 3);
    CHECK(cls.family.member);
    CHECK_FALSE(cls.discrepancy);
    REQUIRE_FALSE(cls.notes.empty());  // printed-formula mismatch is reported

    cls = classify({9, 7});
    CHECK_FALSE(cls.theorem_b_exception);
    CHECK(cls.count <= 2);
}

TEST_CASE("theorem A mode") {
    auto cls = classify({1, 7}, 20);
    CHECK(cls.theorem_a_mode);
    CHECK(cls.theorem_a_exception);
    CHECK(cls.count == 6);
    CHECK(labeled_set(cls) ==
          std::set<Solution>{{1, 1, 1}, {3, 1, 2}, {5, 1, 3}, {11, 1, 5}, {13, 3, 7}, {181, 1, 13}});

    cls = classify({1, 23}, 20);
    CHECK(cls.theorem_a_exception);
    CHECK(cls.count == 2);
    CHECK(labeled_set(cls) == std::set<Solution>{{3, 1, 3}, {45, 1, 9}});

    for (long r = 4; r <= 8; ++r)
        CHECK(classify({1, (1L << r) - 1}, 100).theorem_a_exception);
    CHECK_FALSE(classify({1, 11}, 20).theorem_a_exception);
}

TEST_CASE("Eq.(3.7) family self-test") {
    for (unsigned long z1 = 1; z1 <= 12; ++z1)
        for (int lambda : {1, -1}) {
            Integer d1 = pow2(z1) - lambda;
            Integer d2 = 3 * pow2(z1) + lambda;
            Instance inst{d1, d2};
            if (d1 <= 1 || inst.violation())
                continue;
            auto least = least_solution({d1, d2}, 64);
            REQUIRE(least);
            if (least->x != 1 || least->y != 1 || least->z != z1)
                continue;  // d1 not realized with X1 = 1
            auto t3 = expand_solution({d1, d2}, *least, 3);
            Solution s{t3.x, 1, 3 * z1};
            INFO("z1=" << z1 << " lambda=" << lambda);
            CHECK(satisfies(inst, s));
            auto oracle = brute_force(inst, 3 * z1 + 1);
            CHECK(std::find(oracle.begin(), oracle.end(), s) != oracle.end());
            // the t = 3 abscissa is X1 (2^(Z1+1) + lambda)
            CHECK(t3.x == pow2(z1 + 1) + lambda);
        }
}

TEST_CASE("structural equals oracle on 200 seeded random instances") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> dist(1, 30);
    int done = 0;
    while (done < 200) {
        Instance inst{2 * dist(rng) + 1, 2 * dist(rng) + 1};
        if (inst.violation() || inst.d1 <= 1)
            continue;
        ++done;
        auto cls = classify(inst);
        INFO("d1=" << inst.d1 << " d2=" << inst.d2);
        CHECK_FALSE(cls.discrepancy);
        auto oracle = brute_force(inst);
        CHECK(labeled_set(cls) == std::set<Solution>(oracle.begin(), oracle.end()));
    }
}

TEST_CASE("parity law: even-m solutions force d1 == 7 (mod 8)") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<long> dist(1, 30);
    for (int i = 0; i < 100; ++i) {
        Instance inst{2 * dist(rng) + 1, 2 * dist(rng) + 1};
        if (inst.violation() || inst.d1 <= 1)
            continue;
        for (const auto& s : brute_force(inst, 60))
            if (s.m % 2 == 0)
                CHECK(inst.d1 % 8 == 7);
    }
}

TEST_CASE("every n is a multiple of the relevant least-solution z") {
    for (const auto& inst : {Instance{3, 5}, Instance{5, 3}, Instance{13, 3},
                             Instance{31, 97}, Instance{11, 5}, Instance{7, 3}}) {
        auto odd_least = least_solution({inst.d1, inst.d2}, 64);
        auto even_least = least_solution({inst.d1, inst.d2 * inst.d2}, 64);
        for (const auto& s : brute_force(inst, 100)) {
            if (s.m % 2 == 1) {
                REQUIRE(odd_least);
                CHECK(s.n % odd_least->z == 0);
            } else {
                REQUIRE(even_least);
                CHECK(s.n % even_least->z == 0);
            }
        }
    }
}

TEST_CASE("exception counts at n_max = 200") {
    CHECK(classify({3, 5}).count == 4);
    CHECK(classify({5, 3}).count == 4);
    CHECK(classify({13, 3}).count == 3);
    CHECK(classify({31, 97}).count == 3);
    CHECK(classify({7, 3}).count == 2);
    CHECK(classify({7, 5}).count == 2);
    CHECK(classify({15, 7}).count == 2);
    CHECK(classify({11, 5}).count == 2);
    CHECK(classify({21, 11}).count == 2);
    CHECK(classify({3, 29}).count == 2);
}

TEST_CASE("scan census") {
    auto rows = scan(20, 60);
    bool saw35 = false, saw53 = false;
    for (const auto& r : rows) {
        CHECK(r.theorem_b_consistent);
        if (r.d1 == 3 && r.d2 == 5) {
            saw35 = true;
            CHECK(r.count == 4);
        }
        if (r.d1 == 5 && r.d2 == 3) {
            saw53 = true;
            CHECK(r.count == 4);
        }
    }
    CHECK(saw35);
    CHECK(saw53);

    // parallel run yields identical rows
    auto rows4 = scan(20, 60, 4);
    REQUIRE(rows.size() == rows4.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].d1 == rows4[i].d1);
        CHECK(rows[i].count == rows4[i].count);
    }
    CHECK_THROWS_AS(scan(2), std::invalid_argument);
}
