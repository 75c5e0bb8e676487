#include <doctest.h>

#include <numeric>
#include <random>

#include "cuniform/function_table.hpp"

using namespace cuniform;

namespace {

FunctionTable identity(const Field& f) {
    std::vector<Element> v(f.size());
    std::iota(v.begin(), v.end(), Element{0});
    return FunctionTable(f, v);
}

}  // namespace

TEST_SUITE("functions") {

TEST_CASE("inverse map") {
    const Field f3(3);
    const auto inv = inverse_map(f3);
    CHECK(inv(0) == 0);
    CHECK(inv(1) == 1);
    CHECK(inv(2) == 5);
    for (unsigned n = 2; n <= 10; ++n) {
        const Field f(n);
        const auto g = inverse_map(f);
        for (Element x = 0; x < f.size(); ++x) REQUIRE(g(g(x)) == x);
    }
}

TEST_CASE("power map") {
    const Field f3(3);
    CHECK(power_map(f3, 1) == identity(f3));
    CHECK(power_map(f3, 6) == inverse_map(f3));
    CHECK(power_map(f3, 3)(2) == 3);
}

TEST_CASE("table validation") {
    const Field f2(2);
    CHECK_THROWS_AS(FunctionTable(f2, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FunctionTable(f2, {0, 1, 2, 4}), std::invalid_argument);
    CHECK(FunctionTable(f2, {1, 0, 3, 2}).is_permutation());
    CHECK_FALSE(FunctionTable(f2, {1, 1, 3, 2}).is_permutation());
    CHECK_THROWS_AS(FunctionTable(f2, {1, 1, 3, 2}).inverse(), std::invalid_argument);
}

TEST_CASE("swap outputs") {
    const Field f3(3);
    const auto g = swap_outputs(identity(f3), 0, 1);
    CHECK(g(0) == 1);
    CHECK(g(1) == 0);
    for (Element x = 2; x < 8; ++x) CHECK(g(x) == x);
    const auto s = swapped_inverse(f3);
    CHECK(s(0) == 1);
    CHECK(s(1) == 0);
    CHECK(s(2) == 5);
    CHECK(swap_outputs(swap_outputs(inverse_map(f3), 2, 6), 2, 6) == inverse_map(f3));
    CHECK_THROWS_AS(swap_outputs(identity(f3), 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(swap_outputs(identity(f3), 3, 8), std::invalid_argument);
}

TEST_CASE("closed-form swap agrees with transposition") {
    std::mt19937 rng(3);
    for (unsigned n = 2; n <= 8; ++n) {
        const Field f(n);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Element> v(f.size());
            for (auto& e : v) e = rng() & f.mask();
            const FunctionTable t(f, v);
            const Element x0 = rng() & f.mask();
            Element x1 = rng() & f.mask();
            if (x1 == x0) x1 ^= 1;
            REQUIRE(swap_outputs_closed_form(t, x0, x1) == swap_outputs(t, x0, x1));
        }
    }
}

TEST_CASE("swapped inverse") {
    const Field f2(2);
    CHECK(swapped_inverse(f2) == FunctionTable(f2, {1, 0, 3, 2}));
    for (unsigned n = 2; n <= 12; ++n) {
        const Field f(n);
        const auto g = swapped_inverse(f);
        REQUIRE(g.is_permutation());
        for (Element x = 0; x < f.size(); ++x) {
            REQUIRE(g(g(x)) == x);
            REQUIRE(g(x) == swapped_inverse_formula(f, x));
        }
        REQUIRE(g.inverse() == g);
    }
}

TEST_CASE("sbox parsing") {
    const Field f2(2), f4(4);
    CHECK(parse_sbox(f2, "1\n0\n3\n2\n") == swapped_inverse(f2));
    CHECK(parse_sbox(f2, "0x1\r\n0x0\r\n0x3\r\n0x2") == swapped_inverse(f2));

    try {
        parse_sbox(f2, "1\n0\n3\n");
        FAIL("expected a length error");
    } catch (const SboxParseError& e) {
        CHECK(e.kind() == SboxParseError::Kind::LineCount);
    }
    std::string text;
    for (int i = 0; i < 16; ++i) text += i == 5 ? "10\n" : "0\n";
    try {
        parse_sbox(f4, text);
        FAIL("expected a range error");
    } catch (const SboxParseError& e) {
        CHECK(e.kind() == SboxParseError::Kind::OutOfRange);
        CHECK(e.line() == 6);
    }
    try {
        parse_sbox(f2, "1\nzz\n3\n2\n");
        FAIL("expected a syntax error");
    } catch (const SboxParseError& e) {
        CHECK(e.kind() == SboxParseError::Kind::Malformed);
        CHECK(e.line() == 2);
    }
    const auto g = swapped_inverse(f4);
    CHECK(parse_sbox(f4, format_sbox(g)) == g);
}

}  // TEST_SUITE
