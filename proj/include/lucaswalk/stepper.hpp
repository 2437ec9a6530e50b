#pragma once

#include <lucaswalk/sequence.hpp>

#include <map>

namespace lucaswalk {

/// A walk instance: sequence parameters, digit base b >= 2, and the maximum
/// number of digits N >= 1 appended per step.
struct WalkConfig {
    SequenceParams params;
    std::int64_t base = 10;
    int digits = 1;

    bool operator==(const WalkConfig&) const = default;
};

inline std::string check_config(const WalkConfig& cfg) {
    if (auto why = check_params(cfg.params); !why.empty()) return why;
    if (cfg.base < 2) return "base >= 2 is required";
    if (cfg.digits < 1) return "digits >= 1 is required";
    return {};
}

inline WalkConfig make_config(SequenceParams params, std::int64_t base, int digits) {
    const WalkConfig cfg{params, base, digits};
    if (auto why = check_config(cfg); !why.empty())
        throw std::domain_error("walk config: " + why);
    return cfg;
}

namespace detail {

inline void ensure_config(const WalkConfig& cfg, const char* who) {
    if (auto why = check_config(cfg); !why.empty())
        throw std::domain_error(std::string(who) + ": " + why);
}

}  // namespace detail

/// b^N, the exclusive bound on appended blocks.
inline Int digit_budget(const WalkConfig& cfg) {
    return pow_int(Int(cfg.base), cfg.digits);
}

/// One admitted move: from U_m to U_{m+k} = b^t U_m + r with 1 <= t <= N,
/// 0 <= r < b^t, k >= 1, and U_{m+k} != U_m.
struct StepWitness {
    Index m = 0;
    Index k = 0;
    int t = 0;
    Int r = 0;

    bool operator==(const StepWitness&) const = default;
};

/// A companion-value coincidence V_k = b^t; the only shape a large-m step can take.
struct RigiditySolution {
    Index k = 0;
    int t = 0;

    bool operator==(const RigiditySolution&) const = default;
};

/// All step witnesses out of index m, sorted by (t, k). Search is by value
/// interval: for each t the admissible targets are exactly the sequence
/// values in [b^t U_m, b^t U_m + b^t - 1].
inline std::vector<StepWitness> enumerate_steps_from(const WalkConfig& cfg, Index m) {
    detail::ensure_config(cfg, "enumerate_steps_from");
    detail::check_index(m, "enumerate_steps_from");
    const Int um = term(cfg.params, m);
    std::vector<StepWitness> out;
    for (int t = 1; t <= cfg.digits; ++t) {
        const Int bt = pow_int(Int(cfg.base), t);
        const Int lo = bt * um;
        for (Index n : indices_in_range(cfg.params, lo, lo + bt - 1)) {
            if (n <= m) continue;
            const Int v = term(cfg.params, n);
            if (v == um) continue;
            out.push_back({m, n - m, t, v - lo});
        }
    }
    return out;
}

/// True iff w is a well-formed witness for cfg: index bounds, block bounds,
/// and the defining equation U_{m+k} = b^t U_m + r with a changed value.
inline bool validate_step(const WalkConfig& cfg, const StepWitness& w) {
    detail::ensure_config(cfg, "validate_step");
    if (w.m < 0 || w.k < 1 || w.t < 1 || w.t > cfg.digits) return false;
    if (w.m + w.k > max_index()) return false;
    const Int bt = pow_int(Int(cfg.base), w.t);
    if (w.r < 0 || w.r >= bt) return false;
    const Int um = term(cfg.params, w.m);
    const Int target = term(cfg.params, w.m + w.k);
    return target == bt * um + w.r && target != um;
}

/// Slow reference path: append every digit block of width 1..N to U_m and
/// test membership against a table built from the bare recurrence. Exists to
/// cross-check enumerate_steps_from; target values map to their smallest index.
inline std::vector<StepWitness> digit_string_steps_from(const WalkConfig& cfg, Index m) {
    detail::ensure_config(cfg, "digit_string_steps_from");
    detail::check_index(m, "digit_string_steps_from");
    std::vector<Int> table{0, 1};
    while (static_cast<Index>(table.size()) <= m)
        table.push_back(cfg.params.P * table[table.size() - 1] -
                        cfg.params.Q * table[table.size() - 2]);
    const Int um = table[m];
    const Int limit = digit_budget(cfg) * (um + 1);
    while (table.back() <= limit) {
        if (static_cast<Index>(table.size()) > max_index())
            throw resource_limit_error("digit_string_steps_from: table exceeds index ceiling");
        table.push_back(cfg.params.P * table[table.size() - 1] -
                        cfg.params.Q * table[table.size() - 2]);
    }
    std::map<Int, Index> first_index;
    for (Index n = 0; n < static_cast<Index>(table.size()); ++n)
        first_index.emplace(table[n], n);
    std::vector<StepWitness> out;
    for (int t = 1; t <= cfg.digits; ++t) {
        const Int bt = pow_int(Int(cfg.base), t);
        for (Int r = 0; r < bt; ++r) {
            const Int candidate = bt * um + r;
            const auto it = first_index.find(candidate);
            if (it == first_index.end()) continue;
            if (it->second <= m || candidate == um) continue;
            out.push_back({m, it->second - m, t, r});
        }
    }
    return out;
}

}  // namespace lucaswalk
