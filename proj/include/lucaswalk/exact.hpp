#pragma once

#include <lucaswalk/sequence.hpp>

namespace lucaswalk {

namespace detail {

// rho = (P + sqrt(D))/2 is the dominant root of x^2 - Px + Q, D = P^2 - 4Q.
// Integer powers live in Z[(1+sqrt(D))/2]: rho^j = (V_j + U_j sqrt(D))/2, and
// rho^{-n} = Q^n (V_n - U_n sqrt(D))/2. Returns (a, b) with rho^j = (a + b sqrt(D))/2.
inline std::pair<Int, Int> root_power_parts(const SequenceParams& p, Index j) {
    if (j >= 0) return {companion_term(p, j), term(p, j)};
    const Index n = -j;
    check_index(n, "root_power_parts");
    Int a = companion_term(p, n);
    Int b = term(p, n);
    if (unit_power(p, n) == -1) return {-a, b};
    return {a, -b};
}

}  // namespace detail

/// Sign of rho^j - c for integer c >= 0, decided exactly: with
/// rho^j = (a + b sqrt(D))/2 and s = 2c - a, the comparison reduces to the
/// sign of D b^2 - s^2 once the signs of b and s agree. D is never a perfect
/// square for admissible parameters, so b != 0 implies rho^j != c.
inline int compare_root_power(const SequenceParams& p, Index j, const Int& c) {
    if (c < 0) throw std::domain_error("compare_root_power: c must be nonnegative");
    auto [a, b] = detail::root_power_parts(p, j);
    const Int s = 2 * c - a;
    const auto sign = [](const Int& x) { return x < 0 ? -1 : x > 0 ? 1 : 0; };
    if (b >= 0 && s <= 0) return (b == 0 && s == 0) ? 0 : 1;
    if (b < 0 && s >= 0) return (b == 0 && s == 0) ? 0 : -1;
    const int cmp = sign(p.discriminant() * b * b - s * s);
    return b >= 0 ? cmp : -cmp;
}

/// Smallest j >= 0 with rho^j >= x; requires x >= 1.
inline Index ceil_log_root(const SequenceParams& p, const Int& x) {
    if (x < 1) throw std::domain_error("ceil_log_root: x >= 1 is required");
    for (Index j = 0;; ++j) {
        detail::check_index(j, "ceil_log_root");
        if (compare_root_power(p, j, x) >= 0) return j;
    }
}

/// Exact check of phi^{n-2} <= F_n <= phi^{n-1}; requires n >= 1.
inline bool verify_growth_bounds(Index n) {
    if (n < 1) throw std::domain_error("verify_growth_bounds: n >= 1 is required");
    detail::check_index(n, "verify_growth_bounds");
    const auto fib = fibonacci_params();
    const Int fn = term(fib, n);
    return compare_root_power(fib, n - 2, fn) <= 0 && compare_root_power(fib, n - 1, fn) >= 0;
}

}  // namespace lucaswalk
