// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
//
//   1. identity suites exact through m = 200 (three parameter sets)
//   2. growth bounds exact through m = 500
//   3. main theorem at desk scale over the full (base, digits) grid, with
//      spot values confirmed by an independent digit-string oracle
//   4. rigidity differential above m_star, zero tolerance
//   5. termination certificates for the grid and the Lucas instances
//   6. closed-form constant matches 9.57 per digit for base 10
//   7. scale note (informational)

#include <lucaswalk/lucaswalk.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace lucaswalk;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what
              << std::endl;
    if (!ok) ++failures;
}

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string with_time(std::string text, const Stopwatch& sw) {
    std::ostringstream os;
    os << text << " (" << format_fixed(sw.seconds(), 2) << "s)";
    return os.str();
}

// ---- independent digit-string oracle ---------------------------------------
// Replays the walk definition literally: every value is a base-b digit string,
// a step appends a t-digit block, membership is string lookup. Shares nothing
// with the interval enumeration it cross-checks.

std::string digits_of(Int v, std::int64_t base) {
    static const char alphabet[] = "0123456789abcdef";
    if (v == 0) return "0";
    std::string s;
    for (; v > 0; v /= base) s += alphabet[static_cast<int>(v % base)];
    std::reverse(s.begin(), s.end());
    return s;
}

std::string normalized(const std::string& s) {
    const auto keep = s.find_first_not_of('0');
    return keep == std::string::npos ? "0" : s.substr(keep);
}

std::string padded_block(std::int64_t r, int t, std::int64_t base) {
    const std::string s = digits_of(Int(r), base);
    return std::string(static_cast<std::size_t>(t) - s.size(), '0') + s;
}

std::int64_t oracle_longest(std::int64_t base, int budget) {
    std::vector<std::string> order;
    std::map<std::string, std::size_t> node;
    {
        Int a = 0;
        Int b = 1;
        for (int n = 0; n <= 120; ++n) {
            std::string s = digits_of(a, base);
            if (node.emplace(s, order.size()).second) order.push_back(std::move(s));
            Int c = a + b;
            a = std::move(b);
            b = std::move(c);
        }
    }
    // Appending digits strictly lengthens the normalized string, so targets
    // sit strictly later in insertion order and one backward sweep suffices.
    std::vector<std::int64_t> best(order.size(), 0);
    for (std::size_t i = order.size(); i-- > 0;) {
        const std::string& from = order[i];
        std::int64_t width_count = 1;
        for (int t = 1; t <= budget; ++t) {
            width_count *= base;
            for (std::int64_t r = 0; r < width_count; ++r) {
                const std::string to = normalized(from + padded_block(r, t, base));
                if (to == from) continue;
                const auto hit = node.find(to);
                if (hit != node.end()) best[i] = std::max(best[i], 1 + best[hit->second]);
            }
        }
    }
    return *std::max_element(best.begin(), best.end());
}

std::vector<WalkConfig> fibonacci_grid() {
    std::vector<WalkConfig> grid;
    for (std::int64_t b = 2; b <= 16; ++b)
        for (int n = 1; n <= 4; ++n) grid.push_back(make_config(fibonacci_params(), b, n));
    return grid;
}

void criterion_identities() {
    Stopwatch sw;
    const auto res = run_identity_suite(200);
    bool ok = res.pass && sw.seconds() < 10.0;
    report(1, ok,
           with_time("identity suites exact through m=200, " + res.detail +
                         (res.pass ? "" : ", counterexample " + res.counterexample),
                     sw));
}

void criterion_growth() {
    Stopwatch sw;
    const auto res = run_growth_suite(500);
    report(2, res.pass && sw.seconds() < 5.0,
           with_time("growth bounds exact through m=500, " + std::to_string(res.cases) + " cases",
                     sw));
}

void criterion_main_theorem() {
    Stopwatch sw;
    std::string why;
    for (const auto& cfg : fibonacci_grid()) {
        const auto rep = bound_report(cfg);
        const double closed = closed_form_bound(cfg);
        const Index paper_bound = rep.n_star + *rep.K_paper;
        if (!(rep.L_max <= paper_bound && static_cast<double>(paper_bound) <= closed + 1e-6)) {
            why = "bound chain fails at base " + std::to_string(cfg.base) + ", digits " +
                  std::to_string(cfg.digits);
            break;
        }
    }
    const struct {
        std::int64_t base;
        std::int64_t expect;
    } spots[] = {{10, 2}, {4, 3}, {2, 3}};
    for (const auto& s : spots) {
        if (!why.empty()) break;
        const auto lib = longest_walk(make_config(fibonacci_params(), s.base, 1)).length;
        const auto oracle = oracle_longest(s.base, 1);
        if (lib != s.expect || oracle != s.expect)
            why = "L_max(" + std::to_string(s.base) + ",1): library " + std::to_string(lib) +
                  ", digit-string oracle " + std::to_string(oracle) + ", expected " +
                  std::to_string(s.expect);
    }
    const bool ok = why.empty() && sw.seconds() < 60.0;
    report(3, ok,
           with_time(ok ? "L_max <= n_star + K_paper <= closed form across the 15x4 grid; "
                          "spot values 2/3/3 confirmed by the digit-string oracle"
                        : why,
                     sw));
}

void criterion_rigidity() {
    Stopwatch sw;
    std::string why;
    std::int64_t compared = 0;
    std::int64_t sources = 0;
    for (const auto& cfg : fibonacci_grid()) {
        const Index lo = m_star(cfg);
        for (Index m = lo; m <= lo + 50 && why.empty(); ++m, ++sources) {
            const auto found = enumerate_steps_from(cfg, m);
            if (found != predicted_large_m_steps(cfg, m)) {
                why = "prediction mismatch at base " + std::to_string(cfg.base) + ", digits " +
                      std::to_string(cfg.digits) + ", m=" + std::to_string(m);
                break;
            }
            for (const auto& w : found) {
                ++compared;
                if (w.k % 2 == 0 || companion_term(cfg.params, w.k) != digit_budget(cfg) ||
                    pow_int(Int(cfg.base), w.t) != digit_budget(cfg) ||
                    w.r != term(cfg.params, m - w.k)) {
                    why = "witness shape violated at base " + std::to_string(cfg.base) +
                          ", m=" + std::to_string(m);
                    break;
                }
            }
        }
        if (!why.empty()) break;
    }
    report(4, why.empty(),
           with_time(why.empty() ? "predicted = enumerated over " + std::to_string(sources) +
                                       " source indices in [m_star, m_star+50]; " +
                                       std::to_string(compared) +
                                       " rigid witness(es) shape-checked"
                                 : why,
                     sw));
}

void criterion_certificates() {
    Stopwatch sw;
    auto cfgs = fibonacci_grid();
    for (const std::int64_t b : {2, 10, 14})
        for (int n = 1; n <= 2; ++n) cfgs.push_back(make_config(pell_params(), b, n));
    for (const std::int64_t b : {2, 8, 10})
        for (int n = 1; n <= 2; ++n) cfgs.push_back(make_config(make_params(3, 1), b, n));
    std::string why;
    for (const auto& cfg : cfgs) {
        try {
            const auto cert = certify_termination(cfg, 50);
            if (cert.conclusion != "TERMINATES") throw certification_error("conclusion", "not terminating");
        } catch (const certification_error& e) {
            why = "certification failed at (" + std::to_string(cfg.params.P) + "," +
                  std::to_string(cfg.params.Q) + "), base " + std::to_string(cfg.base) +
                  ", digits " + std::to_string(cfg.digits) + ": " + e.what();
            break;
        }
    }
    const bool ok = why.empty() && sw.seconds() < 60.0;
    report(5, ok,
           with_time(ok ? "termination certified for all " + std::to_string(cfgs.size()) +
                              " configs at margin 50"
                        : why,
                     sw));
}

void criterion_constant() {
    const double per_digit = 2 * log_phi(Int(10));
    const bool ok = std::fabs(per_digit - 9.57) < 1e-2;
    report(6, ok, "2 log_phi 10 = " + format_fixed(per_digit, 4) + ", within 0.01 of 9.57");
}

void criterion_scale_note() {
    report(7, true,
           "all quantities recomputed exactly at desk scale; no external tables required");
}

}  // namespace

int main() {
    criterion_identities();
    criterion_growth();
    criterion_main_theorem();
    criterion_rigidity();
    criterion_certificates();
    criterion_constant();
    criterion_scale_note();
    return failures == 0 ? 0 : 1;
}
