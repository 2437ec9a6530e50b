#pragma once

#include <lucaswalk/bounds.hpp>

#include <algorithm>

namespace lucaswalk {

/// All (k, t) with 1 <= k <= jump_bound_exact(cfg), 1 <= t <= N and V_k = b^t,
/// ascending in k. For Q = -1 only odd k can carry a large-m step, so even k
/// are filtered out.
inline std::vector<RigiditySolution> rigidity_solutions(const WalkConfig& cfg) {
    detail::ensure_config(cfg, "rigidity_solutions");
    const Index k_max = jump_bound_exact(cfg);
    std::vector<RigiditySolution> out;
    for (Index k = 1; k <= k_max; ++k) {
        if (cfg.params.Q == -1 && k % 2 == 0) continue;
        const Int vk = companion_term(cfg.params, k);
        Int bt = cfg.base;
        for (int t = 1; t <= cfg.digits; ++t, bt *= cfg.base)
            if (vk == bt) out.push_back({k, t});
    }
    return out;
}

/// The complete step set out of m predicted by rigidity alone, valid for
/// m >= m_star(cfg): for Q = +1 it is empty, otherwise one witness
/// (m, k, t, U_{m-k}) per rigidity solution whose remainder still fits its
/// block. Sorted by (t, k) like enumerate_steps_from.
inline std::vector<StepWitness> predicted_large_m_steps(const WalkConfig& cfg, Index m) {
    detail::ensure_config(cfg, "predicted_large_m_steps");
    detail::check_index(m, "predicted_large_m_steps");
    if (m < m_star(cfg))
        throw std::domain_error("predicted_large_m_steps: m >= m_star is required");
    std::vector<StepWitness> out;
    if (cfg.params.Q == 1) return out;
    for (const auto& [k, t] : rigidity_solutions(cfg)) {
        if (k >= m) continue;
        Int r = term(cfg.params, m - k);
        if (r < pow_int(Int(cfg.base), t)) out.push_back({m, k, t, std::move(r)});
    }
    std::sort(out.begin(), out.end(), [](const StepWitness& a, const StepWitness& b) {
        return std::pair(a.t, a.k) < std::pair(b.t, b.k);
    });
    return out;
}

}  // namespace lucaswalk
