#pragma once

#include <lucaswalk/core.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lucaswalk {

/// Parameters (P, Q) of a Lucas sequence of the first kind:
///   U_0 = 0, U_1 = 1, U_{n+1} = P U_n - Q U_{n-1},
/// with companion V_0 = 2, V_1 = P, same recurrence. Admissible parameters are
/// restricted to the unit-|Q| positive-growth regime: |Q| = 1, P >= 1 when
/// Q = -1, P >= 3 when Q = +1, and P^2 - 4Q a positive non-square. Fibonacci
/// is (1, -1), Pell is (2, -1).
struct SequenceParams {
    std::int64_t P = 1;
    std::int64_t Q = -1;

    bool operator==(const SequenceParams&) const = default;

    bool is_fibonacci() const { return P == 1 && Q == -1; }
    Int discriminant() const { return Int(P) * P - 4 * Q; }
};

inline SequenceParams fibonacci_params() { return {1, -1}; }
inline SequenceParams pell_params() { return {2, -1}; }

namespace detail {

inline bool is_perfect_square(const Int& x) {
    if (x < 0) return false;
    const Int r = boost::multiprecision::sqrt(x);
    return r * r == x;
}

}  // namespace detail

/// Empty string when (P, Q) is admissible, otherwise the violated invariant.
inline std::string check_params(const SequenceParams& p) {
    if (p.Q != 1 && p.Q != -1) return "|Q| = 1 is required";
    if (p.Q == -1 && p.P < 1) return "P >= 1 is required when Q = -1";
    if (p.Q == 1 && p.P < 3) return "P >= 3 is required when Q = +1";
    const Int d = p.discriminant();
    if (d <= 0) return "P^2 - 4Q > 0 is required";
    if (detail::is_perfect_square(d)) return "P^2 - 4Q must not be a perfect square";
    return {};
}

inline SequenceParams make_params(std::int64_t P, std::int64_t Q) {
    const SequenceParams p{P, Q};
    if (auto why = check_params(p); !why.empty())
        throw std::domain_error("sequence parameters (" + std::to_string(P) + ", " +
                                std::to_string(Q) + "): " + why);
    return p;
}

namespace detail {

inline void check_index(Index n, const char* who) {
    if (n < 0) throw std::domain_error(std::string(who) + ": index must be nonnegative");
    if (n > max_index())
        throw resource_limit_error(std::string(who) + ": index " + std::to_string(n) +
                                   " exceeds ceiling " + std::to_string(max_index()));
}

// Q^n for |Q| = 1.
inline int unit_power(const SequenceParams& p, Index n) {
    return (p.Q == -1 && (n & 1)) ? -1 : 1;
}

// (U_n, U_{n+1}) by fast doubling:
//   V_h     = 2 U_{h+1} - P U_h
//   U_{2h}  = U_h V_h
//   U_{2h+1}= U_{h+1} V_h - Q^h
inline std::pair<Int, Int> term_pair(const SequenceParams& p, Index n) {
    if (n == 0) return {Int(0), Int(1)};
    const Index h = n / 2;
    auto [a, b] = term_pair(p, h);
    const Int v = 2 * b - p.P * a;
    const Int qh = unit_power(p, h);
    Int u_even = a * v;
    Int u_odd = b * v - qh;
    if (n & 1) {
        Int u_next = p.P * u_odd - p.Q * u_even;
        return {std::move(u_odd), std::move(u_next)};
    }
    return {std::move(u_even), std::move(u_odd)};
}

}  // namespace detail

/// U_n. O(log n) bigint multiplications.
inline Int term(const SequenceParams& p, Index n) {
    detail::check_index(n, "term");
    return detail::term_pair(p, n).first;
}

/// V_n, through the bridge V_n = 2 U_{n+1} - P U_n.
inline Int companion_term(const SequenceParams& p, Index n) {
    detail::check_index(n, "companion_term");
    auto [u, u1] = detail::term_pair(p, n);
    return 2 * u1 - p.P * u;
}

namespace detail {

// Smallest n >= 2 with U_n >= v, or nullopt when that would pass the index
// ceiling. The tail n >= 2 is strictly increasing for every admissible (P, Q).
inline std::optional<Index> first_tail_index_at_least(const SequenceParams& p, const Int& v) {
    const Index cap = max_index();
    Index hi = 2;
    while (hi < cap && term_pair(p, hi).first < v) hi = std::min(cap, hi * 2);
    if (term_pair(p, hi).first < v) return std::nullopt;
    Index lo = 2;
    while (lo < hi) {
        const Index mid = lo + (hi - lo) / 2;
        if (term_pair(p, mid).first < v)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace detail

/// Smallest n with U_n = v, or nullopt when v is not a sequence value.
/// The duplicated value 1 (U_1 = 1, and U_2 = 1 when P = 1) maps to index 1.
inline std::optional<Index> index_of_value(const SequenceParams& p, const Int& v) {
    if (v < 0) throw std::domain_error("index_of_value: value must be nonnegative");
    if (v == 0) return Index(0);
    if (v == 1) return Index(1);
    const auto n = detail::first_tail_index_at_least(p, v);
    if (!n) return std::nullopt;
    if (detail::term_pair(p, *n).first == v) return *n;
    return std::nullopt;
}

/// Every index n with lo <= U_n <= hi, ascending, duplicates included.
inline std::vector<Index> indices_in_range(const SequenceParams& p, const Int& lo, const Int& hi) {
    std::vector<Index> out;
    if (hi < lo) return out;
    if (lo <= 0 && 0 <= hi) out.push_back(0);
    if (lo <= 1 && 1 <= hi) out.push_back(1);
    const auto start = detail::first_tail_index_at_least(p, lo);
    if (!start) return out;
    auto [u, u1] = detail::term_pair(p, *start);
    for (Index n = *start; n <= max_index() && u <= hi; ++n) {
        out.push_back(n);
        Int u2 = p.P * u1 - p.Q * u;
        u = std::move(u1);
        u1 = std::move(u2);
    }
    return out;
}

/// U_{m+k} computed as U_m V_k - Q^k U_{m-k}; requires m >= k >= 0.
inline Int addition_formula(const SequenceParams& p, Index m, Index k) {
    if (k < 0 || m < k) throw std::domain_error("addition_formula: m >= k >= 0 is required");
    detail::check_index(m, "addition_formula");
    return term(p, m) * companion_term(p, k) - detail::unit_power(p, k) * term(p, m - k);
}

/// Exact check of F_{k+1} F_m <= F_{m+k} <= F_{k+2} F_m; requires m, k >= 1.
/// Fibonacci only: the two-sided product form needs P = 1, Q = -1.
inline bool product_comparability_check(Index m, Index k) {
    if (m < 1 || k < 1) throw std::domain_error("product_comparability_check: m, k >= 1 is required");
    detail::check_index(m + k, "product_comparability_check");
    const auto fib = fibonacci_params();
    const Int fm = term(fib, m);
    const Int fmk = term(fib, m + k);
    return term(fib, k + 1) * fm <= fmk && fmk <= term(fib, k + 2) * fm;
}

}  // namespace lucaswalk
