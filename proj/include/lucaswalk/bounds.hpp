#pragma once

#include <lucaswalk/exact.hpp>
#include <lucaswalk/stepper.hpp>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <optional>

namespace lucaswalk {

/// Largest n with U_n <= b^N - 1: the last index whose value still fits in N digits.
inline Index n_star(const WalkConfig& cfg) {
    detail::ensure_config(cfg, "n_star");
    const Int cap = digit_budget(cfg) - 1;
    Int u = 0, u1 = 1;
    for (Index n = 0;; ++n) {
        if (u1 > cap) return n;
        detail::check_index(n + 1, "n_star");
        Int u2 = cfg.params.P * u1 - cfg.params.Q * u;
        u = std::move(u1);
        u1 = std::move(u2);
    }
}

/// The a-priori jump bound 1 + ceil(log_phi(2 b^N)), Fibonacci only.
inline Index K_paper(const WalkConfig& cfg) {
    detail::ensure_config(cfg, "K_paper");
    if (!cfg.params.is_fibonacci())
        throw std::domain_error("K_paper: defined for Fibonacci parameters (1, -1) only");
    return 1 + ceil_log_root(cfg.params, 2 * digit_budget(cfg));
}

/// Largest k >= 1 whose jump is not yet excluded by growth: F_{k+1} < 2 b^N
/// for Fibonacci, V_k <= 2 b^N in general; 0 when even k = 1 is excluded.
inline Index jump_bound_exact(const WalkConfig& cfg) {
    detail::ensure_config(cfg, "jump_bound_exact");
    const Int two_budget = 2 * digit_budget(cfg);
    Index best = 0;
    for (Index k = 1;; ++k) {
        detail::check_index(k + 1, "jump_bound_exact");
        const bool admitted = cfg.params.is_fibonacci()
                                  ? term(cfg.params, k + 1) < two_budget
                                  : companion_term(cfg.params, k) <= two_budget;
        if (!admitted) return best;
        best = k;
    }
}

/// Rigidity threshold: every step from m >= m_star has the forced shape
/// (V_k = b^t, r = U_{m-k}). Fibonacci uses the exact closed form
/// ceil(log_phi(2 b^N)) + 4; general parameters scan for the smallest m at
/// which each (monotone) precondition of the large-m lemma holds.
inline Index m_star(const WalkConfig& cfg) {
    detail::ensure_config(cfg, "m_star");
    if (cfg.params.is_fibonacci())
        return ceil_log_root(cfg.params, 2 * digit_budget(cfg)) + 4;
    const Int budget = digit_budget(cfg);
    for (Index m = 2;; ++m) {
        detail::check_index(m, "m_star");
        if (term(cfg.params, m - 2) <= budget) continue;
        if (cfg.params.Q == 1 &&
            term(cfg.params, m) - term(cfg.params, m - 1) <= budget)
            continue;
        if (companion_term(cfg.params, m) <= 2 * budget + 1) continue;
        return m;
    }
}

/// No step leaves any index >= this; certificates scan above it.
inline Index certificate_threshold(const WalkConfig& cfg) {
    return std::max(m_star(cfg), n_star(cfg) + jump_bound_exact(cfg) + 1);
}

namespace detail {

using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<64>>;

inline Dec dec_log_phi(const Dec& x) {
    static const Dec log_phi_value = log((1 + sqrt(Dec(5))) / 2);
    return log(x) / log_phi_value;
}

}  // namespace detail

/// log_phi(x) at 64-decimal-digit working precision, rounded to double.
inline double log_phi(const Int& x) {
    if (x < 1) throw std::domain_error("log_phi: x >= 1 is required");
    return static_cast<double>(detail::dec_log_phi(detail::Dec(x.str())));
}

/// The theorem's closed-form ceiling 2 N log_phi(b) + log_phi(2) + 4, Fibonacci regime.
inline double closed_form_bound(const WalkConfig& cfg) {
    detail::ensure_config(cfg, "closed_form_bound");
    const detail::Dec value = 2 * cfg.digits * detail::dec_log_phi(detail::Dec(cfg.base)) +
                              detail::dec_log_phi(detail::Dec(2)) + 4;
    return static_cast<double>(value);
}

/// Everything the termination theorem pins down for one config. The classical
/// fields (K_paper, theorem_bound, closed_form) exist only in the Fibonacci
/// regime and stay empty for general parameters.
struct BoundReport {
    WalkConfig cfg;
    Index n_star = 0;
    Index K_exact = 0;
    Index m_star = 0;
    Index threshold = 0;
    Index L_max = 0;
    std::optional<Index> K_paper;
    std::optional<Index> theorem_bound;
    std::optional<std::string> closed_form;
    bool satisfied = false;

    bool operator==(const BoundReport&) const = default;
};

}  // namespace lucaswalk
