#pragma once

#include <lucaswalk/rigidity.hpp>

#include <algorithm>
#include <sstream>

namespace lucaswalk {

/// Outcome of one exhaustive check suite. `cases` counts the outermost loop;
/// `counterexample` pinpoints the first failure and is empty on a pass.
struct SuiteResult {
    std::string name;
    bool pass = true;
    std::int64_t cases = 0;
    std::string detail;
    std::string counterexample;

    bool operator==(const SuiteResult&) const = default;
};

namespace detail {

inline std::vector<Int> term_table(const SequenceParams& p, Index top) {
    std::vector<Int> u(static_cast<std::size_t>(top) + 1);
    for (Index n = 0; n <= top; ++n) u[n] = term(p, n);
    return u;
}

// Witnesses with target values mapped to their smallest index, deduplicated;
// the canonical form both step-search routes must agree on.
inline std::vector<StepWitness> canonical_steps(const SequenceParams& p,
                                                std::vector<StepWitness> ws) {
    for (auto& w : ws) {
        const auto n = index_of_value(p, term(p, w.m + w.k));
        w.k = *n - w.m;
    }
    std::sort(ws.begin(), ws.end(), [](const StepWitness& a, const StepWitness& b) {
        return std::tuple(a.t, a.k, a.r) < std::tuple(b.t, b.k, b.r);
    });
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
}

inline std::string describe(const StepWitness& w) {
    std::ostringstream os;
    os << "(m=" << w.m << ", k=" << w.k << ", t=" << w.t << ", r=" << w.r << ")";
    return os.str();
}

}  // namespace detail

/// Product comparability, the subtraction identity, and the addition formula,
/// exhaustively over the triangle k <= m <= max_m (k additionally capped by
/// max_k when nonnegative). Exact equality throughout.
inline SuiteResult run_identity_suite(Index max_m = 200, Index max_k = -1) {
    if (max_m < 2) throw std::domain_error("run_identity_suite: max_m >= 2 is required");
    SuiteResult res;
    res.name = "identities";
    const Index k_cap = max_k < 0 ? max_m : max_k;
    const auto fib = fibonacci_params();
    const auto fibs = detail::term_table(fib, 2 * max_m + 2);
    std::int64_t checks = 0;

    const auto fail = [&res](const std::string& what, Index m, Index k) {
        res.pass = false;
        std::ostringstream os;
        os << what << " fails at m=" << m << ", k=" << k;
        res.counterexample = os.str();
    };

    for (Index m = 1; m <= max_m && res.pass; ++m) {
        for (Index k = 1; k <= std::min(m, k_cap); ++k, ++checks) {
            if (!(fibs[k + 1] * fibs[m] <= fibs[m + k] && fibs[m + k] <= fibs[k + 2] * fibs[m])) {
                fail("product comparability", m, k);
                break;
            }
        }
    }
    for (Index m = 2; m <= max_m && res.pass; ++m) {
        for (Index k = 2; k <= std::min(m, k_cap); ++k, ++checks) {
            const Int bridge = fibs[k + 2] - fibs[k - 2];
            if (bridge != companion_term(fib, k)) {
                fail("companion bridge", m, k);
                break;
            }
            const Int rhs = bridge * fibs[m] + (k % 2 == 0 ? -fibs[m - k] : fibs[m - k]);
            if (fibs[m + k] != rhs) {
                fail("subtraction identity", m, k);
                break;
            }
        }
    }
    for (const auto params : {fibonacci_params(), pell_params(), make_params(3, 1)}) {
        if (!res.pass) break;
        const auto u = detail::term_table(params, 2 * max_m + 2);
        for (Index m = 0; m <= max_m && res.pass; ++m) {
            for (Index k = 0; k <= std::min(m, k_cap); ++k, ++checks) {
                if (addition_formula(params, m, k) != u[m + k]) {
                    fail("addition formula (P=" + std::to_string(params.P) +
                             ", Q=" + std::to_string(params.Q) + ")",
                         m, k);
                    break;
                }
            }
        }
    }
    res.cases = checks;
    res.detail = std::to_string(checks) + " exact identity checks";
    return res;
}

/// phi^{m-2} <= F_m <= phi^{m-1} for 1 <= m <= max_m, by exact
/// quadratic-integer comparison.
inline SuiteResult run_growth_suite(Index max_m = 500) {
    if (max_m < 1) throw std::domain_error("run_growth_suite: max_m >= 1 is required");
    SuiteResult res;
    res.name = "growth";
    for (Index m = 1; m <= max_m; ++m, ++res.cases) {
        if (!verify_growth_bounds(m)) {
            res.pass = false;
            res.counterexample = "phi-power bound fails at m=" + std::to_string(m);
            break;
        }
    }
    res.detail = "exact phi-power comparisons for m in [1, " + std::to_string(max_m) + "]";
    return res;
}

/// Interval-search enumeration against the digit-string reference, witness by
/// witness (after mapping target values to smallest indices), for every
/// source index up to n_star + K_exact + margin.
inline SuiteResult run_differential_suite(const WalkConfig& cfg, Index margin = 50) {
    detail::ensure_config(cfg, "run_differential_suite");
    if (margin < 0) throw std::domain_error("run_differential_suite: margin must be nonnegative");
    SuiteResult res;
    res.name = "differential";
    const Index top = n_star(cfg) + jump_bound_exact(cfg) + margin;
    std::int64_t witnesses = 0;
    for (Index m = 0; m <= top; ++m, ++res.cases) {
        const auto fast = detail::canonical_steps(cfg.params, enumerate_steps_from(cfg, m));
        const auto slow = detail::canonical_steps(cfg.params, digit_string_steps_from(cfg, m));
        witnesses += static_cast<std::int64_t>(slow.size());
        if (fast != slow) {
            res.pass = false;
            std::ostringstream os;
            os << "witness sets differ at m=" << m << ": interval search found " << fast.size()
               << ", digit-string oracle found " << slow.size();
            res.counterexample = os.str();
            break;
        }
    }
    res.detail = "m in [0, " + std::to_string(top) + "], " + std::to_string(witnesses) +
                 " witnesses compared (full set)";
    return res;
}

/// Above m_star the enumerated steps must coincide with the rigidity
/// prediction exactly; for Q = -1 each witness must carry odd k, V_k = b^t,
/// r = U_{m-k}.
inline SuiteResult run_rigidity_suite(const WalkConfig& cfg, Index span = 50) {
    detail::ensure_config(cfg, "run_rigidity_suite");
    if (span < 0) throw std::domain_error("run_rigidity_suite: span must be nonnegative");
    SuiteResult res;
    res.name = "rigidity";
    const Index lo = m_star(cfg);
    std::int64_t witnesses = 0;
    for (Index m = lo; m <= lo + span && res.pass; ++m, ++res.cases) {
        const auto found = enumerate_steps_from(cfg, m);
        const auto predicted = predicted_large_m_steps(cfg, m);
        if (found != predicted) {
            res.pass = false;
            res.counterexample = "prediction mismatch at m=" + std::to_string(m) + ": found " +
                                 std::to_string(found.size()) + ", predicted " +
                                 std::to_string(predicted.size());
            break;
        }
        witnesses += static_cast<std::int64_t>(found.size());
        if (cfg.params.Q != -1) continue;
        for (const auto& w : found) {
            const bool shape = w.k % 2 == 1 &&
                               companion_term(cfg.params, w.k) == pow_int(Int(cfg.base), w.t) &&
                               w.r == term(cfg.params, w.m - w.k);
            if (!shape) {
                res.pass = false;
                res.counterexample = "witness " + detail::describe(w) + " violates the rigid shape";
                break;
            }
        }
    }
    res.detail = "m in [" + std::to_string(lo) + ", " + std::to_string(lo + span) + "], " +
                 std::to_string(witnesses) + " rigid witnesses";
    return res;
}

}  // namespace lucaswalk
