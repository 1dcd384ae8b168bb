#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "cycleguess/core.hpp"

using namespace cycleguess;

TEST_CASE("factorize picks the greatest divisor below the square root") {
    struct Row {
        int s, a, b;
    };
    const Row rows[] = {{2, 1, 2},  {3, 1, 3},  {4, 2, 2},  {6, 2, 3},
                        {7, 1, 7},  {8, 2, 4},  {9, 3, 3},  {10, 2, 5},
                        {12, 3, 4}, {16, 4, 4}, {36, 6, 6}, {30, 5, 6}};
    for (const Row& r : rows) {
        const ColourSpace sp = factorize(r.s);
        CAPTURE(r.s);
        CHECK(sp.a == r.a);
        CHECK(sp.b == r.b);
        CHECK(sp.a * sp.b == sp.s);
        CHECK(sp.a <= sp.b);
    }
}

TEST_CASE("factorize rejects colour counts below 2") {
    CHECK_THROWS_AS(factorize(1), std::invalid_argument);
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(-5), std::invalid_argument);
}

TEST_CASE("phi/psi/pi is a bijection Z_s <-> Z_a x Z_b") {
    for (int s = 2; s <= 12; ++s) {
        const ColourSpace sp = factorize(s);
        for (int z = 0; z < s; ++z) {
            const int x = phi(sp, z);
            const int y = psi(sp, z);
            CHECK(0 <= x);
            CHECK(x < sp.a);
            CHECK(0 <= y);
            CHECK(y < sp.b);
            CHECK(pi(sp, x, y) == z);
        }
    }
    const ColourSpace sp6 = factorize(6);
    CHECK_THROWS_AS(phi(sp6, 6), std::invalid_argument);
    CHECK_THROWS_AS(pi(sp6, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(pi(sp6, 0, 3), std::invalid_argument);
}

TEST_CASE("cycle neighbour arithmetic wraps") {
    const Cycle c(5);
    CHECK(c.prev(0) == 4);
    CHECK(c.next(4) == 0);
    CHECK(c.prev(3) == 2);
    CHECK(c.next(3) == 4);
    CHECK_THROWS_AS(Cycle(2), std::invalid_argument);
}

TEST_CASE("checked power saturates on overflow") {
    CHECK(pow_u64_checked(2, 10) == 1024);
    CHECK(pow_u64_checked(6, 7) == 279936);
    CHECK(pow_u64_checked(10, 19) == 10000000000000000000ull);
    CHECK(pow_u64_checked(2, 64) == UINT64_MAX);
    CHECK(pow_u64_checked(10, 20) == UINT64_MAX);
    CHECK(pow_u64_checked(1, 1000) == 1);
    CHECK(pow_u64_checked(7, 0) == 1);
}

TEST_CASE("colouring <-> integer encoding is the lexicographic bijection") {
    const int n = 5, s = 6;
    CHECK(encode_colouring(Colouring{0, 0, 0, 0, 0}, s) == 0);
    CHECK(encode_colouring(Colouring{0, 0, 0, 0, 1}, s) == 1);
    CHECK(encode_colouring(Colouring{1, 0, 0, 0, 0}, s) == 1296);
    CHECK(encode_colouring(Colouring{5, 5, 5, 5, 5}, s) == 7775);
    CHECK(decode_colouring(7775, n, s) == Colouring{5, 5, 5, 5, 5});
    for (std::uint64_t id : {0ull, 1ull, 17ull, 1296ull, 7775ull})
        CHECK(encode_colouring(decode_colouring(id, n, s), s) == id);
    CHECK_THROWS_AS(encode_colouring(Colouring{0, 6}, 6), std::invalid_argument);
    CHECK_THROWS_AS(encode_colouring(Colouring{-1, 0}, 6), std::invalid_argument);
}
