#include <lucaswalk/rigidity.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace lucaswalk;

namespace {

WalkConfig fib_cfg(std::int64_t base, int digits) {
    return make_config(fibonacci_params(), base, digits);
}

}  // namespace

TEST_CASE("config validation") {
    CHECK_NOTHROW(make_config(fibonacci_params(), 2, 1));
    CHECK_THROWS_WITH(make_config(fibonacci_params(), 1, 1),
                      Catch::Matchers::ContainsSubstring("base >= 2"));
    CHECK_THROWS_WITH(make_config(fibonacci_params(), 10, 0),
                      Catch::Matchers::ContainsSubstring("digits >= 1"));
    CHECK_THROWS_AS(make_config({1, 2}, 10, 1), std::domain_error);
}

TEST_CASE("enumerate_steps_from matches pinned witness sets") {
    CHECK(enumerate_steps_from(fib_cfg(10, 1), 2) == std::vector<StepWitness>{{2, 5, 1, 3}});
    CHECK(enumerate_steps_from(fib_cfg(4, 1), 3) == std::vector<StepWitness>{{3, 3, 1, 0}});
    CHECK(enumerate_steps_from(fib_cfg(10, 1), 7).empty());
    CHECK(enumerate_steps_from(fib_cfg(2, 2), 7) == std::vector<StepWitness>{{7, 3, 2, 3}});
    CHECK(enumerate_steps_from(fib_cfg(3, 1), 2) ==
          std::vector<StepWitness>{{2, 2, 1, 0}, {2, 3, 1, 2}});
    CHECK(enumerate_steps_from(fib_cfg(4, 1), 7) == std::vector<StepWitness>{{7, 3, 1, 3}});
    CHECK(enumerate_steps_from(fib_cfg(4, 1), 8).empty());
}

TEST_CASE("steps out of the zero index reach both duplicate indices") {
    const auto ws = enumerate_steps_from(fib_cfg(10, 1), 0);
    const std::vector<StepWitness> expect{
        {0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 1, 2}, {0, 4, 1, 3}, {0, 5, 1, 5}, {0, 6, 1, 8}};
    CHECK(ws == expect);
}

TEST_CASE("validate_step accepts exactly the witness invariants") {
    const auto cfg = fib_cfg(4, 1);
    CHECK(validate_step(cfg, {4, 3, 1, 1}));
    CHECK_FALSE(validate_step(cfg, {4, 3, 1, 2}));
    CHECK_FALSE(validate_step(cfg, {4, 3, 1, 4}));
    CHECK_FALSE(validate_step(cfg, {4, 3, 2, 1}));
    CHECK_FALSE(validate_step(cfg, {4, 0, 1, 0}));
    CHECK_FALSE(validate_step(cfg, {-1, 3, 1, 1}));
    CHECK_FALSE(validate_step(cfg, {4, 3, 0, 1}));
    CHECK_FALSE(validate_step(cfg, {4, 3, 1, -1}));
}

TEST_CASE("every enumerated witness validates") {
    for (const auto& cfg : {fib_cfg(10, 1), fib_cfg(4, 1), fib_cfg(2, 2),
                            make_config(pell_params(), 14, 1), make_config(make_params(3, 1), 8, 1)}) {
        for (Index m = 0; m <= 40; ++m)
            for (const auto& w : enumerate_steps_from(cfg, m)) {
                CAPTURE(cfg.base, cfg.digits, m, w.k, w.t);
                REQUIRE(validate_step(cfg, w));
                REQUIRE(w.k >= 1);
                REQUIRE(w.m == m);
            }
    }
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
    for (const auto& cfg : {fib_cfg(10, 1), fib_cfg(4, 1), fib_cfg(2, 2), fib_cfg(7, 2),
                            make_config(pell_params(), 10, 1), make_config(make_params(3, 1), 8, 1)}) {
        for (Index m = 0; m <= 25; ++m) {
            auto got = enumerate_steps_from(cfg, m);
            // the oracle reports a duplicated target value once, at its smallest index
            for (auto& w : got) {
                const auto n = index_of_value(cfg.params, term(cfg.params, w.m + w.k));
                w.k = *n - w.m;
            }
            got.erase(std::unique(got.begin(), got.end()), got.end());
            const auto want = oracles::steps_from(cfg, m, 80);
            CAPTURE(cfg.params.P, cfg.params.Q, cfg.base, cfg.digits, m);
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("no witness carries k = 1 once values leave the block range") {
    const auto cfg = fib_cfg(2, 1);
    const auto small = enumerate_steps_from(cfg, 2);
    CHECK(std::find(small.begin(), small.end(), StepWitness{2, 1, 1, 0}) != small.end());
    for (const auto& base : {2, 3, 10}) {
        for (Index m = 3; m <= 60; ++m)
            for (const auto& w : enumerate_steps_from(fib_cfg(base, 1), m)) REQUIRE(w.k >= 2);
    }
}

TEST_CASE("digit-string reference path agrees with the oracle") {
    for (const auto& cfg : {fib_cfg(10, 1), fib_cfg(2, 2), make_config(pell_params(), 10, 1)}) {
        for (Index m = 0; m <= 25; ++m)
            REQUIRE(digit_string_steps_from(cfg, m) == oracles::steps_from(cfg, m, 80));
    }
}

TEST_CASE("rigidity solutions match pinned companion coincidences") {
    CHECK(rigidity_solutions(fib_cfg(4, 1)) == std::vector<RigiditySolution>{{3, 1}});
    CHECK(rigidity_solutions(fib_cfg(10, 4)).empty());
    CHECK(rigidity_solutions(fib_cfg(2, 2)) == std::vector<RigiditySolution>{{3, 2}});
    CHECK(rigidity_solutions(fib_cfg(11, 1)) == std::vector<RigiditySolution>{{5, 1}});
    CHECK(rigidity_solutions(make_config(pell_params(), 14, 1)) ==
          std::vector<RigiditySolution>{{3, 1}});
    CHECK(rigidity_solutions(make_config(make_params(3, 1), 18, 1)) ==
          std::vector<RigiditySolution>{{3, 1}});
}

TEST_CASE("predicted large-m steps match pinned values and respect m_star") {
    const auto cfg = fib_cfg(4, 1);
    CHECK(m_star(cfg) == 9);
    CHECK(predicted_large_m_steps(cfg, 9).empty());
    CHECK_THROWS_AS(predicted_large_m_steps(cfg, 8), std::domain_error);
    // at m_star the base-11 coincidence L_5 = 11 still admits r = F_6 = 8 < 11
    const auto eleven = fib_cfg(11, 1);
    CHECK(m_star(eleven) == 11);
    CHECK(predicted_large_m_steps(eleven, 11) == std::vector<StepWitness>{{11, 5, 1, 8}});
    CHECK(enumerate_steps_from(eleven, 11) == std::vector<StepWitness>{{11, 5, 1, 8}});
    const auto pell = make_config(pell_params(), 14, 1);
    CHECK(m_star(pell) == 7);
    CHECK(predicted_large_m_steps(pell, 7) == std::vector<StepWitness>{{7, 3, 1, 12}});
    const auto q1 = make_config(make_params(3, 1), 8, 1);
    CHECK(m_star(q1) == 6);
    CHECK(predicted_large_m_steps(q1, m_star(q1)).empty());
}

TEST_CASE("witness jumps never exceed the exact jump bound") {
    for (const auto& cfg : {fib_cfg(10, 1), fib_cfg(4, 2), fib_cfg(16, 1),
                            make_config(pell_params(), 10, 2)}) {
        const Index cap = jump_bound_exact(cfg);
        for (Index m = 0; m <= 50; ++m)
            for (const auto& w : enumerate_steps_from(cfg, m))
                if (w.m > w.k) REQUIRE(w.k <= cap);
    }
}
