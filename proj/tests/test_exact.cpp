#include <lucaswalk/exact.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace lucaswalk;

TEST_CASE("phi powers compare exactly against integers") {
    const auto fib = fibonacci_params();
    CHECK(compare_root_power(fib, 0, 1) == 0);
    CHECK(compare_root_power(fib, 1, 1) == 1);
    CHECK(compare_root_power(fib, 1, 2) == -1);
    CHECK(compare_root_power(fib, 7, 20) == 1);
    CHECK(compare_root_power(fib, 6, 20) == -1);
    CHECK(compare_root_power(fib, 8, 55) == -1);
    CHECK(compare_root_power(fib, -1, 1) == -1);
    CHECK(compare_root_power(fib, -3, 0) == 1);
    CHECK_THROWS_AS(compare_root_power(fib, 1, -1), std::domain_error);
}

TEST_CASE("root powers straddle the integers the float expansion predicts") {
    // phi^j to 30 digits, frozen from an independent high-precision expansion.
    const auto fib = fibonacci_params();
    const struct {
        Index j;
        Int floor_value;
    } rows[] = {{2, 2}, {3, 4}, {4, 6}, {5, 11}, {10, 122}, {20, 15126}};
    for (const auto& row : rows) {
        CHECK(compare_root_power(fib, row.j, row.floor_value) == 1);
        CHECK(compare_root_power(fib, row.j, row.floor_value + 1) == -1);
    }
}

TEST_CASE("general dominant roots compare exactly") {
    const auto pell = pell_params();
    CHECK(compare_root_power(pell, 2, 5) == 1);
    CHECK(compare_root_power(pell, 2, 6) == -1);
    CHECK(compare_root_power(pell, 0, 1) == 0);
    CHECK(compare_root_power(pell, 1, 2) == 1);
    CHECK(compare_root_power(pell, 1, 3) == -1);
    const auto q1 = make_params(3, 1);
    CHECK(compare_root_power(q1, 3, 17) == 1);
    CHECK(compare_root_power(q1, 3, 18) == -1);
}

TEST_CASE("ceil_log_root finds the first power at or above x") {
    const auto fib = fibonacci_params();
    CHECK(ceil_log_root(fib, 1) == 0);
    CHECK(ceil_log_root(fib, 2) == 2);
    CHECK(ceil_log_root(fib, 4) == 3);
    CHECK(ceil_log_root(fib, 20) == 7);
    CHECK(ceil_log_root(fib, 2000) == 16);
    CHECK_THROWS_AS(ceil_log_root(fib, 0), std::domain_error);
    for (Int x = 1; x <= 500; ++x) {
        const Index j = ceil_log_root(fib, x);
        CHECK(compare_root_power(fib, j, x) >= 0);
        if (j > 0) CHECK(compare_root_power(fib, j - 1, x) < 0);
    }
}

TEST_CASE("growth bounds hold exactly up to 500") {
    CHECK(verify_growth_bounds(1));
    CHECK(verify_growth_bounds(2));
    CHECK(verify_growth_bounds(10));
    CHECK_THROWS_AS(verify_growth_bounds(0), std::domain_error);
    for (Index m = 1; m <= 500; ++m) REQUIRE(verify_growth_bounds(m));
}

TEST_CASE("growth bound comparison is the pinned integer inequality") {
    // phi^8 <= F_10 reduces to 5 F_8^2 <= (2 F_10 - L_8)^2: 2205 <= 3969.
    const auto fib = fibonacci_params();
    const Int f10 = term(fib, 10);
    const Int l8 = companion_term(fib, 8);
    const Int f8 = term(fib, 8);
    CHECK(f10 == 55);
    CHECK(l8 == 47);
    CHECK(5 * f8 * f8 == 2205);
    CHECK((2 * f10 - l8) * (2 * f10 - l8) == 3969);
    CHECK(compare_root_power(fib, 8, f10) == -1);
}
