#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polycode/poly.hpp"

using namespace polycode;

namespace {
const std::vector<std::pair<uint32_t, uint32_t>> kBundledOrders = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4},
    {5, 2}, {3, 3}, {2, 5}, {2, 6}, {3, 4}, {2, 7}, {3, 5}};
}

TEST_CASE("ring arithmetic") {
    Fq f3(3, 1);
    SECTION("(x+1)(x+2) = x^2 + 2 over GF(3)") {
        Poly a(f3, {1, 1});
        Poly b(f3, {2, 1});
        CHECK(a * b == Poly(f3, {2, 0, 1}));
    }
    SECTION("divrem(x^2, x) = (x, 0)") {
        auto [q, r] = Poly::monomial(f3, 2).divrem(Poly::x(f3));
        CHECK(q == Poly::x(f3));
        CHECK(r.is_zero());
    }
    SECTION("eval(x^3 - x - 1, 0) = 2 over GF(3)") {
        Poly f(f3, {2, 2, 0, 1});
        CHECK(f.eval(0u) == 2);
    }
    SECTION("divrem invariant on random operands") {
        std::mt19937_64 rng(7);
        Fq f9(3, 2);
        for (int it = 0; it < 200; ++it) {
            std::vector<uint32_t> ac((rng() % 12) + 1), bc((rng() % 8) + 1);
            for (auto& v : ac) v = rng() % 9;
            for (auto& v : bc) v = rng() % 9;
            Poly a(f9, ac), b(f9, bc);
            if (b.is_zero()) continue;
            auto [q, r] = a.divrem(b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
    SECTION("division by zero") {
        CHECK_THROWS_AS(Poly::x(f3).divrem(Poly::zero(f3)), error);
    }
    SECTION("mixed fields") {
        Fq f4(2, 2);
        CHECK_THROWS_AS(Poly::x(f3) + Poly::x(f4), error);
    }
}

TEST_CASE("gcd_euclid") {
    Fq f3(3, 1);
    SECTION("gcd(f, 0) = monic(f)") {
        Poly f(f3, {2, 0, 2}); // 2x^2 + 2
        CHECK(gcd_euclid(f, Poly::zero(f3)) == f.monic());
    }
    SECTION("gcd(x^2-1, x-1) = x+2 over GF(3)") {
        CHECK(gcd_euclid(Poly(f3, {2, 0, 1}), Poly(f3, {2, 1})) == Poly(f3, {2, 1}));
    }
    SECTION("gcd(x^12-1, x^8-1) = x^4+2 over GF(3)") {
        CHECK(gcd_euclid(Poly::binomial(f3, 12, 1), Poly::binomial(f3, 8, 1)) == Poly(f3, {2, 0, 0, 0, 1}));
    }
    SECTION("gcd(0, 0) rejected") {
        CHECK_THROWS_AS(gcd_euclid(Poly::zero(f3), Poly::zero(f3)), error);
    }
}

TEST_CASE("binomial_gcd closed form") {
    Fq f3(3, 1);
    SECTION("examples") {
        CHECK(binomial_gcd(f3, 12, 1, 8, 1) == Poly::binomial(f3, 4, 1));
        Fq f5(5, 1);
        CHECK(binomial_gcd(f5, 4, 2, 2, 2).is_one());
        CHECK(binomial_gcd(f3, 27, 1, 18, 1) == Poly::binomial(f3, 9, 1));
    }
    SECTION("agrees with the Euclid oracle on 1000 samples per bundled field") {
        for (auto [p, s] : kBundledOrders) {
            Fq f(p, s);
            std::mt19937_64 rng(0xabcdef12 + p * 100 + s);
            for (int it = 0; it < 1000; ++it) {
                long long n = 1 + (long long)(rng() % 64);
                long long m = 1 + (long long)(rng() % 64);
                uint32_t a = 1 + (uint32_t)(rng() % (f.q() - 1));
                uint32_t b = 1 + (uint32_t)(rng() % (f.q() - 1));
                Poly closed = binomial_gcd(f, n, a, m, b);
                Poly ref = gcd_euclid(Poly::binomial(f, (int)n, a), Poly::binomial(f, (int)m, b));
                REQUIRE(closed == ref);
            }
        }
    }
    SECTION("zero constant rejected") {
        CHECK_THROWS_AS(binomial_gcd(f3, 4, 0, 2, 1), error);
    }
}

TEST_CASE("multi_binomial_gcd") {
    Fq f3(3, 1);
    SECTION("examples") {
        CHECK(multi_binomial_gcd(f3, {{12, 1}, {8, 1}, {6, 1}}) == Poly::binomial(f3, 2, 1));
        CHECK(multi_binomial_gcd(f3, {{7, 2}}) == Poly::binomial(f3, 7, 2));
        Fq f5(5, 1);
        CHECK(multi_binomial_gcd(f5, {{4, 2}, {2, 2}}).is_one());
    }
    SECTION("agrees with a Euclid fold on random triples") {
        for (auto [p, s] : kBundledOrders) {
            Fq f(p, s);
            std::mt19937_64 rng(0x5151 + p * 10 + s);
            for (int it = 0; it < 300; ++it) {
                std::vector<std::pair<long long, uint32_t>> pairs;
                Poly acc(f);
                bool first = true;
                for (int j = 0; j < 3; ++j) {
                    long long n = 1 + (long long)(rng() % 40);
                    uint32_t a = 1 + (uint32_t)(rng() % (f.q() - 1));
                    pairs.push_back({n, a});
                    Poly bin = Poly::binomial(f, (int)n, a);
                    acc = first ? bin : gcd_euclid(acc, bin);
                    first = false;
                }
                REQUIRE(multi_binomial_gcd(f, pairs) == acc);
            }
        }
    }
    SECTION("empty list rejected") {
        CHECK_THROWS_AS(multi_binomial_gcd(f3, {}), error);
    }
}
