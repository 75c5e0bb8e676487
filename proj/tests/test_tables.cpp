#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cuniform/io.hpp"
#include "cuniform/tables.hpp"

using namespace cuniform;

TEST_SUITE("tables") {

TEST_CASE("c-DDT of the swapped inverse") {
    for (unsigned n = 2; n <= 6; ++n) {
        const Field f(n);
        const auto g = swapped_inverse(f);
        for (Element c = 2; c < f.size(); ++c) {
            const auto t = c_ddt(g, c);
            for (Element b = 0; b < f.size(); ++b) REQUIRE(t(0, b) == 1);
            REQUIRE(t(1, 0) == 1);
        }
        const auto t1 = c_ddt(g, 1);
        CHECK(t1(0, 0) == f.size());
        for (Element b = 1; b < f.size(); ++b) REQUIRE(t1(0, b) == 0);
    }
}

TEST_CASE("c-DDT rows sum to 2^n") {
    std::mt19937 rng(5);
    for (unsigned n = 2; n <= 7; ++n) {
        const Field f(n);
        std::vector<Element> v(f.size());
        for (auto& e : v) e = rng() & f.mask();
        const FunctionTable r(f, v);
        for (const auto& F : {swapped_inverse(f), r}) {
            for (Element c = 0; c < f.size(); ++c) {
                const auto t = c_ddt(F, c);
                for (Element a = 0; a < f.size(); ++a) {
                    std::uint32_t sum = 0;
                    for (Element b = 0; b < f.size(); ++b) sum += t(a, b);
                    REQUIRE(sum == f.size());
                }
            }
        }
    }
}

TEST_CASE("uniformity values for small n") {
    for (unsigned n : {2u, 3u}) {
        const Field f(n);
        const auto g = swapped_inverse(f);
        for (Element c = 2; c < f.size(); ++c) {
            const auto d = c_diff_uniformity(g, c);
            CHECK(d.value <= (n == 2 ? 1u : 3u));
        }
    }
    const Field f2(2);
    for (const auto& r : scan_all_c(swapped_inverse(f2), TableKind::Bct, 2)) {
        if (r.c != 1) CHECK(r.value == 1);
    }
    CHECK(c_boomerang_uniformity(swapped_inverse(Field(4)), 1).value == 6);
}

TEST_CASE("n = 3 c-BCT entries 1..4 all occur") {
    const Field f(3);
    const auto g = swapped_inverse(f);
    std::set<std::uint32_t> seen;
    for (Element c = 2; c < f.size(); ++c) {
        const auto t = c_bct(g, c);
        for (Element a = 0; a < f.size(); ++a) {
            for (Element b = 0; b < f.size(); ++b) {
                REQUIRE(t(a, b) <= 4);
                seen.insert(t(a, b));
            }
        }
    }
    for (std::uint32_t v : {1u, 2u, 3u, 4u}) CHECK(seen.count(v) == 1);
}

TEST_CASE("c-BCT examples") {
    CHECK(c_bct(swapped_inverse(Field(3)), 2)(5, 0) == 4);
    CHECK(c_bct(swapped_inverse(Field(4)), 8)(14, 12) == 5);
    CHECK_THROWS_AS(c_bct(swapped_inverse(Field(3)), 0), std::invalid_argument);
    CHECK_THROWS_AS(c_bct_via_inverse(swapped_inverse(Field(3)), 0), std::invalid_argument);
}

TEST_CASE("c-BCT against a direct double loop") {
    for (unsigned n = 2; n <= 5; ++n) {
        const Field f(n);
        const auto g = swapped_inverse(f);
        for (Element c = 1; c < f.size(); ++c) {
            const auto t = c_bct(g, c);
            const Element ci = f.inv(c);
            for (Element a = 0; a < f.size(); ++a) {
                for (Element b = 0; b < f.size(); ++b) {
                    std::uint32_t count = 0;
                    for (Element x = 0; x < f.size(); ++x) {
                        for (Element gm = 0; gm < f.size(); ++gm) {
                            const bool e1 = (g(x ^ gm) ^ f.mul(c, g(x))) == b;
                            const bool e2 = (g(x ^ gm ^ a) ^ f.mul(ci, g(x ^ a))) == b;
                            count += e1 && e2;
                        }
                    }
                    REQUIRE(t(a, b) == count);
                    REQUIRE(enumerate_bct_solutions(g, c, a, b).size() == count);
                }
            }
        }
    }
}

TEST_CASE("c-BCT oracle equivalence and duality") {
    for (unsigned n = 2; n <= 5; ++n) {
        const Field f(n);
        const auto g = swapped_inverse(f);
        for (Element c = 1; c < f.size(); ++c) {
            const auto t = c_bct(g, c);
            REQUIRE(t == c_bct_via_inverse(g, c));
            const auto dual = c_bct(g, f.inv(c));
            REQUIRE(t.counts() == dual.counts());
        }
    }
}

TEST_CASE("c-BCT of a permutation at c = 1") {
    const Field f(4);
    std::vector<Element> id(f.size());
    for (Element x = 0; x < f.size(); ++x) id[x] = x;
    const auto t = c_bct_via_inverse(FunctionTable(f, id), 1);
    for (Element a = 0; a < f.size(); ++a) CHECK(t(a, 0) == f.size());
    CHECK(c_bct_via_inverse(swapped_inverse(f), 1)(0, 0) == f.size());
}

TEST_CASE("boomerang uniformity dominates differential uniformity at c = 1") {
    for (unsigned n = 2; n <= 8; ++n) {
        const auto g = swapped_inverse(Field(n));
        REQUIRE(c_boomerang_uniformity(g, 1).value >= c_diff_uniformity(g, 1).value);
    }
}

TEST_CASE("solution lists match counts") {
    std::mt19937 rng(9);
    for (unsigned n = 2; n <= 8; ++n) {
        const Field f(n);
        const auto g = swapped_inverse(f);
        std::map<Element, std::pair<UniformityTable, UniformityTable>> cache;
        for (int i = 0; i < 1000; ++i) {
            const Element c = 1 + rng() % (f.size() - 1);
            const Element a = rng() & f.mask(), b = rng() & f.mask();
            auto it = cache.find(c);
            if (it == cache.end()) it = cache.emplace(c, std::pair{c_ddt(g, c), c_bct(g, c)}).first;
            const auto xs = enumerate_ddt_solutions(g, c, a, b);
            REQUIRE(xs.size() == it->second.first(a, b));
            for (Element x : xs) REQUIRE((g(x ^ a) ^ f.mul(c, g(x))) == b);
            const auto sols = enumerate_bct_solutions(g, c, a, b);
            REQUIRE(sols.size() == it->second.second(a, b));
            REQUIRE(std::is_sorted(sols.begin(), sols.end()));
        }
    }
}

TEST_CASE("appendix worked examples") {
    const Field f2(2);
    const auto s2 = enumerate_bct_solutions(swapped_inverse(f2), 2, 2, 0);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0] == BctSolution{2, 0});

    const Field f5(5);
    const auto s5 = enumerate_bct_solutions(swapped_inverse(f5), 0x14, 0x10, 0x0c);
    const std::vector<BctSolution> want{{0, 17}, {3, 1}, {11, 16}, {14, 31}, {19, 30}};
    CHECK(s5 == want);
}

TEST_CASE("admissibility") {
    CHECK(admissible(TableKind::Ddt, 2, 0, 0));
    CHECK_FALSE(admissible(TableKind::Ddt, 1, 0, 3));
    CHECK(admissible(TableKind::Ddt, 1, 1, 0));
    CHECK_FALSE(admissible(TableKind::Bct, 2, 0, 1));
    CHECK_FALSE(admissible(TableKind::Bct, 2, 1, 0));
    CHECK(admissible(TableKind::Bct, 2, 1, 1));
}

TEST_CASE("sweeps do not depend on the worker count") {
    const auto g = swapped_inverse(Field(6));
    for (auto kind : {TableKind::Ddt, TableKind::Bct}) {
        const auto one = scan_all_c(g, kind, 1);
        CHECK(one == scan_all_c(g, kind, 2));
        CHECK(one == scan_all_c(g, kind, default_workers()));
        CHECK(one.size() == (kind == TableKind::Ddt ? 62u : 63u));
    }
}

TEST_CASE("CSV and JSON round trip") {
    const Field f(4);
    const auto g = swapped_inverse(f);
    for (auto t : {c_ddt(g, 3), c_bct(g, 7)}) {
        CHECK(table_from_csv(table_to_csv(t), t.kind(), 4, t.c()) == t);
        CHECK(table_from_csv(table_to_csv(t, true), t.kind(), 4, t.c()) == t);
        const auto j = table_to_json(t, f);
        CHECK(table_from_json(nlohmann::json::parse(j.dump())) == t);
        CHECK(j["modulus"] == "13");
    }
    CHECK_THROWS_AS(table_from_csv("x,y\n", TableKind::Ddt, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(table_from_csv("a,b,count\n10,0,1\n", TableKind::Ddt, 4, 3),
                    std::invalid_argument);
}

TEST_CASE("hex helpers") {
    CHECK(hex(0) == "0");
    CHECK(hex(255) == "ff");
    CHECK(parse_hex("0x1F") == 31);
    CHECK_THROWS_AS(parse_hex("g"), std::invalid_argument);
    CHECK_THROWS_AS(parse_hex(""), std::invalid_argument);
}

}  // TEST_SUITE
