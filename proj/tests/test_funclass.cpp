#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cycleguess/errors.hpp"
#include "cycleguess/funclass.hpp"
#include "cycleguess/protocol.hpp"

using namespace cycleguess;

TEST_CASE("all sixteen binary functions: six flat, two of them entangled") {
    const ColourSpace sp = factorize(2);
    int flat = 0, semi = 0, perfect = 0, entangled = 0;
    for (int code = 0; code < 16; ++code) {
        const std::vector<int> table = {(code >> 3) & 1, (code >> 2) & 1,
                                        (code >> 1) & 1, code & 1};
        const FunctionClass c = classify(LocalFunction(sp, table));
        flat += c.is_flat;
        semi += c.is_semi_perfect;
        perfect += c.is_perfect;
        if (c.is_flat && !c.is_semi_perfect) {
            ++entangled;
            // Exactly the two parity functions, each with one full unit of
            // conditional mutual information.
            const bool is_xor = table == std::vector<int>{0, 1, 1, 0};
            const bool is_xnor = table == std::vector<int>{1, 0, 0, 1};
            CHECK((is_xor || is_xnor));
            CHECK(c.cond_mi == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    CHECK(flat == 6);
    CHECK(entangled == 2);
    CHECK(semi == 4);
    CHECK(perfect == 4);
    CHECK(enumerate_flat_tables(2).size() == 6);
}

TEST_CASE("flat-table enumeration is sorted, complete and flat") {
    const auto tables = enumerate_flat_tables(3);
    CHECK(tables.size() == 1680); // 9! / 6^3
    CHECK(std::is_sorted(tables.begin(), tables.end()));
    const ColourSpace sp = factorize(3);
    for (size_t i = 0; i < tables.size(); i += 167)
        CHECK(classify(LocalFunction(sp, tables[i])).is_flat);
}

TEST_CASE("modular sum stays maximally entangled for every colour count") {
    for (int s : {2, 3, 5, 6, 8}) {
        CAPTURE(s);
        const FunctionClass c = classify(builtin_function("xor", s));
        CHECK(c.is_flat);
        CHECK_FALSE(c.is_semi_perfect);
        CHECK(c.cond_mi == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("left projection is perfect with |L| = 1 and |R| = s") {
    for (int s : {2, 3, 6}) {
        CAPTURE(s);
        const FunctionClass c = classify(builtin_function("proj", s));
        CHECK(c.is_perfect);
        CHECK(c.cond_mi == doctest::Approx(0.0).epsilon(1e-12));
        for (int z = 0; z < s; ++z) {
            CHECK(c.left_sizes[static_cast<size_t>(z)] == 1);
            CHECK(c.right_sizes[static_cast<size_t>(z)] == s);
        }
    }
}

TEST_CASE("the factor-product function is perfect and splits s = b * a") {
    const LocalFunction f = builtin_function("pi", 6);
    const FunctionClass c = classify(f);
    CHECK(c.is_perfect);
    const auto [left, right] = lr_sets(f, 4); // 4 = pi(1, 1) over 6 = 2*3
    CHECK(left == std::vector<int>{3, 4, 5});  // phi(x) = 1
    CHECK(right == std::vector<int>{1, 4});    // psi(y) = 1
    for (int z = 0; z < 6; ++z) {
        CHECK(c.left_sizes[static_cast<size_t>(z)] == 3);
        CHECK(c.right_sizes[static_cast<size_t>(z)] == 2);
    }
    // |L(z)| * |R(z)| = s holds for every perfect function's outputs.
    for (int s = 2; s <= 12; ++s) {
        const FunctionClass d = classify(builtin_function("pi", s));
        CHECK(d.is_perfect);
        for (int z = 0; z < s; ++z)
            CHECK(d.left_sizes[static_cast<size_t>(z)] *
                      d.right_sizes[static_cast<size_t>(z)] == s);
    }
    CHECK_THROWS_AS(builtin_function("nope", 4), std::invalid_argument);
    CHECK_THROWS_AS(lr_sets(f, 6), std::invalid_argument);
}

TEST_CASE("interior vertices of the fractional-clique-partition protocol are perfect") {
    for (int s = 2; s <= 12; ++s) {
        CAPTURE(s);
        const Protocol p = build_fcp(7, s);
        for (int i = 1; i + 1 < 7; ++i) { // 0-based interior vertices 2..6
            CAPTURE(i);
            CHECK(classify(LocalFunction(p.space, p.tables[static_cast<size_t>(i)]))
                      .is_perfect);
        }
    }
}

TEST_CASE("near-uniformity test is an exact box check") {
    CHECK(is_k_eps_uniform({0.5, 0.5}, 2, 0.0));
    CHECK(is_k_eps_uniform({0.6, 0.4}, 2, 0.11));
    CHECK_FALSE(is_k_eps_uniform({0.6, 0.4}, 2, 0.05));
    CHECK(is_k_eps_uniform({0.25, 0.25, 0.3, 0.2}, 4, 0.05));
    CHECK_FALSE(is_k_eps_uniform({1.0, 0.0}, 2, 0.4));
    CHECK_THROWS_AS(is_k_eps_uniform({0.5, 0.5}, 3, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(is_k_eps_uniform({0.5, 0.5}, 2, -0.1), std::invalid_argument);
}

TEST_CASE("distribution entropy in an integer base") {
    CHECK(distribution_entropy({0.5, 0.5}, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(distribution_entropy({1.0, 0.0}, 2) == doctest::Approx(0.0).epsilon(1e-12));
    const double third = 1.0 / 3.0;
    CHECK(distribution_entropy({third, third, third}, 3) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(distribution_entropy({0.5, 0.5}, 4) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("certified constants for two colours") {
    const ConstantsReport rep = compute_constants(2);
    CHECK(rep.flat_count == 6);
    CHECK(rep.flat_non_semi_perfect_count == 2);
    CHECK(rep.delta1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep.argmin_cond_mi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.eps_cap == doctest::Approx(1.0 / 20.0).epsilon(1e-12));
    CHECK(rep.eps_cont == doctest::Approx(std::ldexp(1.0, -9)).epsilon(1e-12));
    CHECK(rep.epsilon == doctest::Approx(std::ldexp(1.0, -9)).epsilon(1e-12));
    const double d2 = (2.0 * rep.epsilon * rep.epsilon / 3.0) / std::log(2.0);
    CHECK(rep.delta2 == doctest::Approx(d2).epsilon(1e-12));
    CHECK(rep.delta2 == doctest::Approx(3.668963218406584e-06).epsilon(1e-12));
    CHECK(rep.delta == doctest::Approx(std::min(rep.delta1, rep.delta2)).epsilon(1e-12));
    CHECK(rep.N == static_cast<std::int64_t>(std::ceil(7.0 * (1.0 / rep.delta + 2.0))));
    CHECK(rep.N == 1'907'910);
    // The continuity scan must have rejected at least one radius before
    // settling, and every accepted bound sits below delta1.
    REQUIRE(!rep.trace.empty());
    CHECK(std::any_of(rep.trace.begin(), rep.trace.end(),
                      [](const ConstantsReport::TraceEntry& t) { return !t.accepted; }));
    for (const auto& t : rep.trace)
        if (t.accepted) CHECK(t.bound <= rep.delta1);
}

TEST_CASE("certified constants for three colours") {
    const ConstantsReport rep = compute_constants(3);
    CHECK(rep.flat_count == 1680);
    CHECK(rep.flat_non_semi_perfect_count == 1668);
    CHECK(rep.delta1 == doctest::Approx(0.05292010952379678).epsilon(1e-12));
    CHECK(rep.delta1 == doctest::Approx(rep.argmin_cond_mi / 2.0).epsilon(1e-12));
    CHECK(rep.argmin_table == std::vector<int>{0, 0, 0, 1, 1, 2, 1, 2, 2});
    CHECK(rep.eps_cap == doctest::Approx(1.0 / 63.0).epsilon(1e-12));
    CHECK(rep.eps_cont == doctest::Approx(std::ldexp(1.0, -13)).epsilon(1e-12));
    CHECK(rep.epsilon == doctest::Approx(std::ldexp(1.0, -13)).epsilon(1e-12));
    CHECK(rep.delta2 == doctest::Approx(1.356362144092973e-08).epsilon(1e-12));
    CHECK(rep.delta == doctest::Approx(std::min(rep.delta1, rep.delta2)).epsilon(1e-12));
    CHECK(rep.N == static_cast<std::int64_t>(std::ceil(7.0 * (1.0 / rep.delta + 2.0))));
    CHECK(rep.N == 516'086'373);
}

TEST_CASE("constants computation refuses four colours") {
    CHECK_THROWS_AS(compute_constants(4), infeasible_error);
}

TEST_CASE("function files round-trip and reject junk") {
    const LocalFunction f = builtin_function("pi", 6);
    std::stringstream ss;
    write_function(ss, f);
    const LocalFunction g = read_function(ss);
    CHECK(g.s() == 6);
    CHECK(g.table == f.table);

    std::stringstream bad("cycleguess-function v9\ns=2\n0 0\n1 1\n");
    CHECK_THROWS_AS(read_function(bad), std::invalid_argument);
    std::stringstream shortrow("cycleguess-function v1\ns=2\n0\n1 1\n");
    CHECK_THROWS_AS(read_function(shortrow), std::invalid_argument);
    std::stringstream longrow("cycleguess-function v1\ns=2\n0 0 1\n1 1\n");
    CHECK_THROWS_AS(read_function(longrow), std::invalid_argument);
    CHECK_THROWS_AS(LocalFunction(factorize(2), std::vector<int>{0, 1, 2, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LocalFunction(factorize(2), std::vector<int>{0, 1, 0}),
                    std::invalid_argument);
}
