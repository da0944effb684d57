#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "polycode/field.hpp"
#include "oracles.hpp"

using namespace polycode;

namespace {
const std::vector<std::pair<uint32_t, uint32_t>> kBundledOrders = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4},
    {5, 2}, {3, 3}, {2, 5}, {2, 6}, {3, 4}, {2, 7}, {3, 5}};
}

TEST_CASE("field construction basics") {
    Fq f3(3, 1);
    CHECK(f3.q() == 3);
    CHECK(f3.xi().enc() == 2); // 2 generates GF(3)*

    Fq f9(3, 2);
    CHECK(f9.q() == 9);
    CHECK(f9.mul_order(f9.xi().enc()) == 8);

    SECTION("errors") {
        CHECK_THROWS_AS(Fq(4, 1), error);
        CHECK_THROWS_AS(Fq(2, 21), error); // 2^21 > 2^20
        CHECK_THROWS_AS(Fq(2, 2, {1, 0, 1}), error); // x^2+1 = (x+1)^2 over GF(2)
        try {
            Fq(4, 1);
        } catch (const error& e) {
            CHECK(e.code() == errc::non_prime_p);
        }
        try {
            Fq(2, 2, {1, 0, 1});
        } catch (const error& e) {
            CHECK(e.code() == errc::reducible_modulus);
        }
        try {
            Fq(2, 30);
        } catch (const error& e) {
            CHECK(e.code() == errc::field_too_large);
        }
    }
}

TEST_CASE("GF(4) against exhaustive multiplication table") {
    Fq f4(2, 2, {1, 1, 1}); // x^2 + x + 1
    oracle::ModelField m(2, 2, {1, 1, 1});
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 4; ++b) {
            CHECK(f4.mul(a, b) == m.mul(a, b));
            CHECK(f4.add(a, b) == m.add(a, b));
        }
    // xi = x satisfies xi^2 = xi + 1
    Fe xi = f4.xi();
    CHECK(xi.enc() == 2);
    CHECK((xi * xi).enc() == f4.add(xi.enc(), 1));
    CHECK(mul_order(xi) == 3);
}

TEST_CASE("arithmetic agrees with the model field everywhere (q <= 81)") {
    for (auto [p, s] : kBundledOrders) {
        Fq f(p, s);
        if (f.q() > 81) continue;
        oracle::ModelField m(p, s, f.modulus());
        for (uint32_t a = 0; a < f.q(); ++a)
            for (uint32_t b = 0; b < f.q(); ++b) {
                REQUIRE(f.add(a, b) == m.add(a, b));
                REQUIRE(f.mul(a, b) == m.mul(a, b));
            }
    }
}

TEST_CASE("mul_order") {
    Fq f3(3, 1);
    CHECK(f3.mul_order(2) == 2);
    Fq f9(3, 2);
    CHECK(f9.mul_order(f9.xi().enc()) == 8);
    Fq f4(2, 2);
    CHECK(f4.mul_order(f4.xi().enc()) == 3);

    SECTION("brute force cross-check") {
        for (auto [p, s] : kBundledOrders) {
            Fq f(p, s);
            if (f.q() > 81) continue;
            oracle::ModelField m(p, s, f.modulus());
            for (uint32_t a = 1; a < f.q(); ++a) REQUIRE(f.mul_order(a) == m.order(a));
        }
    }
    SECTION("zero rejected") { CHECK_THROWS_AS(f3.mul_order(0), error); }
}

TEST_CASE("nth_root_solutions") {
    SECTION("x^{q-1} = 1 has all nonzero solutions") {
        Fq f9(3, 2);
        auto roots = f9.nth_root_solutions(1, 8);
        CHECK(roots.size() == 8);
        std::set<uint32_t> unique(roots.begin(), roots.end());
        CHECK(unique.size() == 8);
        CHECK(unique.count(0) == 0);
    }
    SECTION("square roots of 4 in GF(5)") {
        Fq f5(5, 1);
        auto roots = f5.nth_root_solutions(4, 2);
        REQUIRE(roots.size() == 2);
        // sorted by discrete log: log(2)=1, log(3)=3
        CHECK(roots[0] == 2);
        CHECK(roots[1] == 3);
    }
    SECTION("no cube roots of 3 in GF(7)") {
        Fq f7(7, 1);
        CHECK(f7.nth_root_solutions(3, 3).empty());
    }
    SECTION("solution count and validity vs brute force") {
        for (auto [p, s] : kBundledOrders) {
            Fq f(p, s);
            if (f.q() > 81) continue;
            oracle::ModelField m(p, s, f.modulus());
            for (long long n : {1, 2, 3, 5, 8, 12, 27}) {
                for (uint32_t a = 1; a < f.q(); ++a) {
                    auto mine = f.nth_root_solutions(a, n);
                    auto ref = m.nth_roots(a, n);
                    std::vector<uint32_t> sorted_mine = mine;
                    std::sort(sorted_mine.begin(), sorted_mine.end());
                    REQUIRE(sorted_mine == ref);
                    uint32_t d = std::gcd((uint32_t)(n % (f.q() - 1) == 0 ? f.q() - 1 : n % (f.q() - 1)),
                                          f.q() - 1);
                    REQUIRE((mine.empty() || mine.size() == d));
                    // sorted by discrete log
                    for (size_t i = 1; i < mine.size(); ++i) REQUIRE(f.log(mine[i - 1]) < f.log(mine[i]));
                }
            }
        }
    }
    SECTION("zero rejected") {
        Fq f3(3, 1);
        CHECK_THROWS_AS(f3.nth_root_solutions(0, 2), error);
    }
}

TEST_CASE("frobenius_inverse_root") {
    Fq f3(3, 1);
    CHECK(f3.frobenius_inverse_root(2, 5) == 2); // prime field: identity

    Fq f9(3, 2);
    CHECK(f9.frobenius_inverse_root(1, 4) == 1);
    // unique b with b^3 = xi is xi^3
    uint32_t b = f9.frobenius_inverse_root(f9.xi().enc(), 1);
    CHECK(b == f9.exp(3));
    CHECK(f9.pow(b, 3) == f9.xi().enc());

    SECTION("round trip over every bundled field, r <= 3") {
        for (auto [p, s] : kBundledOrders) {
            Fq f(p, s);
            for (uint32_t r = 0; r <= 3; ++r)
                for (uint32_t a = 0; a < std::min(f.q(), 128u); ++a) {
                    uint32_t root = f.frobenius_inverse_root(a, r);
                    long long e = 1;
                    for (uint32_t i = 0; i < r; ++i) e *= p;
                    REQUIRE(f.pow(root, e) == a);
                }
        }
    }
}

TEST_CASE("trace_to_subfield") {
    Fq f9(3, 2);
    CHECK(f9.trace_to_subfield(1, 1) == 2); // 1 + 1
    // Tr(xi) = xi + xi^3 lies in GF(3)
    uint32_t t = f9.trace_to_subfield(f9.xi().enc(), 1);
    CHECK(t < 3);
    CHECK(t == f9.add(f9.xi().enc(), f9.pow(f9.xi().enc(), 3)));

    Fq f4(2, 2);
    CHECK(f4.trace_to_subfield(f4.xi().enc(), 1) == 1); // xi + xi^2 = 1

    SECTION("additivity and surjectivity, q <= 81") {
        for (auto [p, s] : kBundledOrders) {
            Fq f(p, s);
            if (f.q() > 81) continue;
            for (uint32_t r = 1; r <= s; ++r) {
                if (s % r != 0) continue;
                std::set<uint32_t> image;
                for (uint32_t a = 0; a < f.q(); ++a) image.insert(f.trace_to_subfield(a, r));
                uint32_t sub_q = 1;
                for (uint32_t i = 0; i < r; ++i) sub_q *= p;
                REQUIRE(image.size() == sub_q);
                for (uint32_t a = 0; a < f.q(); ++a)
                    for (uint32_t b = 0; b < f.q(); ++b)
                        REQUIRE(f.trace_to_subfield(f.add(a, b), r) ==
                                f.add(f.trace_to_subfield(a, r), f.trace_to_subfield(b, r)));
            }
        }
    }
    SECTION("r must divide s") {
        CHECK_THROWS_AS(f9.trace_to_subfield(1, 3), error);
        try {
            f9.trace_to_subfield(1, 3);
        } catch (const error& e) {
            CHECK(e.code() == errc::not_a_subfield);
        }
    }
}

TEST_CASE("exp/log consistency on every bundled field") {
    for (auto [p, s] : kBundledOrders) {
        Fq f(p, s);
        uint32_t r = f.q() - 1;
        for (uint32_t a = 1; a < f.q(); ++a) {
            REQUIRE(f.exp(f.log(a)) == a);
            for (uint32_t b = 1; b < std::min(f.q(), 64u); ++b)
                REQUIRE((f.log(f.mul(a, b)) == (f.log(a) + f.log(b)) % r));
        }
    }
}

TEST_CASE("element value semantics") {
    Fq f9(3, 2);
    Fe a = f9.xi();
    Fe b = a * a;
    CHECK(b == f9.xi_pow(2));
    CHECK(a.pow(-1) == a.inv());
    CHECK((a / a).is_one());
    CHECK((a - a).is_zero());
    CHECK(a.pow(8).is_one());
    CHECK(f9.from_int(5) == f9.from_int(2));
    CHECK(a.str() == "z");
    CHECK(f9.one().str() == "1");
    CHECK(f9.zero().str() == "0");
    CHECK(f9.xi_pow(3).str() == "z^3");

    SECTION("mixed fields rejected") {
        Fq f4(2, 2);
        CHECK_THROWS_AS(f9.xi() + f4.xi(), error);
    }
    SECTION("structurally equal contexts interoperate") {
        Fq g9(3, 2);
        CHECK(f9.xi() + g9.xi() == f9.xi_pow(1) + f9.xi_pow(1));
    }
}
