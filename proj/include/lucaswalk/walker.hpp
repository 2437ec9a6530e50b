#pragma once

#include <lucaswalk/rigidity.hpp>

namespace lucaswalk {

/// One walk: a start index and the chain of steps taken from it.
/// Invariant: step i+1 starts where step i landed, and every step validates.
struct WalkRecord {
    Index start = 0;
    std::vector<StepWitness> steps;

    bool operator==(const WalkRecord&) const = default;

    Index length() const { return static_cast<Index>(steps.size()); }
    Index final_index() const {
        Index at = start;
        for (const auto& s : steps) at += s.k;
        return at;
    }
};

inline bool chain_validates(const WalkConfig& cfg, const WalkRecord& rec) {
    Index at = rec.start;
    for (const auto& s : rec.steps) {
        if (s.m != at || !validate_step(cfg, s)) return false;
        at += s.k;
    }
    return true;
}

/// The step relation materialized as a DAG over indices 0..top: out[m] holds
/// every witness leaving m, sorted by (t, k). Acyclic since each edge moves
/// the index up by k >= 1.
struct StepGraph {
    Index top = 0;
    std::vector<std::vector<StepWitness>> out;
};

inline StepGraph build_step_graph(const WalkConfig& cfg, Index scan_margin = default_scan_margin()) {
    detail::ensure_config(cfg, "build_step_graph");
    if (scan_margin < 0) throw std::domain_error("build_step_graph: margin must be nonnegative");
    StepGraph g;
    g.top = certificate_threshold(cfg) + scan_margin;
    g.out.resize(static_cast<std::size_t>(g.top) + 1);
    for (Index m = 0; m <= g.top; ++m) g.out[m] = enumerate_steps_from(cfg, m);
    return g;
}

/// Exact maximum number of steps over all walks, with a witness walk.
/// Deterministic: smallest start index among the maxima, then the
/// lexicographically smallest jump sequence (and smallest t per jump).
struct LongestWalk {
    Index length = 0;
    WalkRecord record;
};

inline LongestWalk longest_walk(const WalkConfig& cfg) {
    const StepGraph g = build_step_graph(cfg);
    const Index jump_cap = jump_bound_exact(cfg);
    const std::size_t nodes = static_cast<std::size_t>(g.top + jump_cap) + 2;
    std::vector<Index> best(nodes, 0);
    std::vector<int> pick(nodes, -1);
    for (Index m = g.top; m >= 0; --m) {
        const auto& ws = g.out[m];
        for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
            const Index len = 1 + best[m + ws[i].k];
            if (pick[m] >= 0) {
                const auto& cur = ws[pick[m]];
                const auto cand_key = std::tuple(-len, ws[i].k, ws[i].t);
                const auto cur_key = std::tuple(-best[m], cur.k, cur.t);
                if (cand_key >= cur_key) continue;
            }
            best[m] = len;
            pick[m] = i;
        }
    }
    Index start = 0;
    for (Index m = 1; m <= g.top; ++m)
        if (best[m] > best[start]) start = m;
    LongestWalk lw;
    lw.length = best[start];
    lw.record.start = start;
    for (Index m = start; pick[m] >= 0; m += lw.record.steps.back().k)
        lw.record.steps.push_back(g.out[m][pick[m]]);
    return lw;
}

/// Result of replaying user-supplied blocks: either the full record, or the
/// valid prefix plus the first block whose value leaves the sequence.
struct WalkSimulation {
    bool ok = false;
    WalkRecord record;
    std::size_t failed_block = 0;
    Int offending_value = 0;
};

/// Appends blocks (t, r) in order starting from U_start. A block fails when
/// the produced value is not a sequence member; producing the same value
/// again (0 with r = 0) is also a failure, since a step must change the value.
inline WalkSimulation simulate_walk(const WalkConfig& cfg, Index start,
                                    const std::vector<std::pair<int, Int>>& blocks) {
    detail::ensure_config(cfg, "simulate_walk");
    detail::check_index(start, "simulate_walk");
    WalkSimulation sim;
    sim.record.start = start;
    Index at = start;
    Int value = term(cfg.params, start);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& [t, r] = blocks[i];
        if (t < 1 || t > cfg.digits)
            throw std::domain_error("simulate_walk: block " + std::to_string(i) +
                                    ": t must be in [1, digits]");
        const Int bt = pow_int(Int(cfg.base), t);
        if (r < 0 || r >= bt)
            throw std::domain_error("simulate_walk: block " + std::to_string(i) +
                                    ": r must be in [0, base^t)");
        Int next = bt * value + r;
        const auto n = index_of_value(cfg.params, next);
        if (!n || next == value) {
            sim.failed_block = i;
            sim.offending_value = std::move(next);
            return sim;
        }
        sim.record.steps.push_back({at, *n - at, t, r});
        at = *n;
        value = std::move(next);
    }
    sim.ok = true;
    return sim;
}

/// One exactly-checked structural claim inside a certificate.
struct CertificateCheck {
    std::string condition;
    bool ok = false;
    std::string detail;

    bool operator==(const CertificateCheck&) const = default;
};

/// Finite, self-contained proof that every walk terminates: thresholds, the
/// rigidity solutions, the structural exclusions, and an exhaustive no-step
/// scan above the threshold.
struct TerminationCertificate {
    WalkConfig cfg;
    Index n_star = 0;
    Index K_exact = 0;
    Index m_star = 0;
    Index threshold = 0;
    Index scan_margin = 0;
    std::vector<RigiditySolution> rigidity;
    std::vector<CertificateCheck> checks;
    std::string conclusion;

    bool operator==(const TerminationCertificate&) const = default;
};

/// Builds and fully verifies the certificate. Throws certification_error
/// naming the first violated condition (which would mean an implementation
/// bug, not a counterexample; the theorem guarantees all checks pass).
inline TerminationCertificate certify_termination(const WalkConfig& cfg,
                                                  Index scan_margin = default_scan_margin()) {
    detail::ensure_config(cfg, "certify_termination");
    if (scan_margin < 1) throw std::domain_error("certify_termination: scan_margin >= 1 is required");
    TerminationCertificate cert;
    cert.cfg = cfg;
    cert.n_star = n_star(cfg);
    cert.K_exact = jump_bound_exact(cfg);
    cert.m_star = m_star(cfg);
    cert.threshold = certificate_threshold(cfg);
    cert.scan_margin = scan_margin;
    cert.rigidity = rigidity_solutions(cfg);

    const auto record = [&cert](std::string condition, bool ok, std::string detail) {
        cert.checks.push_back({condition, ok, detail});
        if (!ok) throw certification_error(std::move(condition), std::move(detail));
    };

    record("threshold_composition", cert.threshold == std::max(cert.m_star, cert.n_star + cert.K_exact + 1),
           "threshold = max(m_star, n_star + K_exact + 1) = " + std::to_string(cert.threshold));

    const Int budget = digit_budget(cfg);
    record("fits_floor", term(cfg.params, cert.n_star + 1) >= budget,
           "U_{n_star+1} >= b^N, so every remainder forced to index > n_star overflows its block");

    if (cfg.params.Q == -1) {
        bool parity = true;
        for (const auto& [k, t] : cert.rigidity) parity = parity && (k % 2 == 1);
        record("rigidity_parity", parity,
               cert.rigidity.empty() ? "no rigidity solutions" : "every V_k = b^t solution has odd k");
        bool excluded = true;
        for (const auto& [k, t] : cert.rigidity)
            excluded = excluded && cert.threshold - k >= cert.n_star + 1;
        record("rigidity_remainder_excluded", excluded,
               "for m >= threshold each solution forces r = U_{m-k} with m - k > n_star");
    } else {
        record("large_m_emptiness", true,
               "Q = +1: a rigidity-shaped step needs r = -U_{m-k} < 0, impossible");
    }

    bool scan_empty = true;
    Index offender = -1;
    for (Index m = cert.threshold; m <= cert.threshold + scan_margin; ++m) {
        if (!enumerate_steps_from(cfg, m).empty()) {
            scan_empty = false;
            offender = m;
            break;
        }
    }
    record("empty_scan", scan_empty,
           scan_empty ? "no step leaves any m in [" + std::to_string(cert.threshold) + ", " +
                            std::to_string(cert.threshold + scan_margin) + "]"
                      : "step found at m = " + std::to_string(offender));

    cert.conclusion = "TERMINATES";
    return cert;
}

/// The full analysis for one config: every bound, the exact L_max, and
/// whether the measured maximum respects the proved ceiling.
inline BoundReport bound_report(const WalkConfig& cfg) {
    detail::ensure_config(cfg, "bound_report");
    BoundReport rep;
    rep.cfg = cfg;
    rep.n_star = n_star(cfg);
    rep.K_exact = jump_bound_exact(cfg);
    rep.m_star = m_star(cfg);
    rep.threshold = certificate_threshold(cfg);
    rep.L_max = longest_walk(cfg).length;
    if (cfg.params.is_fibonacci()) {
        rep.K_paper = K_paper(cfg);
        rep.theorem_bound = rep.n_star + *rep.K_paper;
        rep.closed_form = format_fixed(closed_form_bound(cfg), 6);
        rep.satisfied = rep.L_max <= *rep.theorem_bound;
    } else {
        rep.satisfied = rep.L_max <= rep.threshold;
    }
    return rep;
}

}  // namespace lucaswalk
