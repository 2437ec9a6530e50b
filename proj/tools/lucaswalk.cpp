// lucaswalk: analyze, enumerate, simulate, verify, and certify
// digit-appending walks along Lucas sequences U_n(P, Q).
//
// Exit codes (stable contract):
//   0  success
//   1  verify: at least one suite failed
//   2  flag, parameter, or resource errors
//   3  membership failures (start value or appended value not in the sequence)
//   4  certification failures

#include <lucaswalk/lucaswalk.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lw = lucaswalk;

namespace {

constexpr const char* kNotes =
    "all integer quantities exact; closed_form evaluated in 64-digit decimal "
    "arithmetic and printed to 6 decimal places";

struct CommonOpts {
    std::int64_t base = 10;
    int digits = 1;
    std::string params = "1,-1";
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--base", o.base, "positional base b (default 10)");
    cmd->add_option("--digits", o.digits, "digit budget N per step (default 1)");
    cmd->add_option("--params", o.params, "sequence parameters as P,Q (default 1,-1)");
    cmd->add_option("--format", o.format, "output format: json, csv, table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
}

std::int64_t parse_int64(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw std::domain_error(what + ": expected an integer, got \"" + text + "\"");
    }
    if (used != text.size())
        throw std::domain_error(what + ": expected an integer, got \"" + text + "\"");
    return value;
}

lw::WalkConfig config_from(const CommonOpts& o) {
    const auto comma = o.params.find(',');
    if (comma == std::string::npos)
        throw std::domain_error("params: expected the form P,Q");
    const auto P = parse_int64(o.params.substr(0, comma), "params P");
    const auto Q = parse_int64(o.params.substr(comma + 1), "params Q");
    return lw::make_config(lw::make_params(P, Q), o.base, o.digits);
}

void apply_environment() {
    if (const char* s = std::getenv("LUCASWALK_MAX_INDEX"))
        lw::set_max_index(parse_int64(s, "LUCASWALK_MAX_INDEX"));
    if (const char* s = std::getenv("LUCASWALK_MARGIN"))
        lw::set_default_scan_margin(parse_int64(s, "LUCASWALK_MARGIN"));
}

void emit(const lw::WalkConfig& cfg, const std::string& command, lw::json payload,
          const std::string& format) {
    lw::ReportEnvelope env;
    env.command = command;
    env.cfg = cfg;
    env.evaluation_notes = kNotes;
    env.payload = std::move(payload);
    std::cout << lw::render(env, lw::parse_format(format));
}

lw::Int parse_bigint(const std::string& text, const std::string& what) {
    try {
        return lw::Int(text);
    } catch (const std::exception&) {
        throw std::domain_error(what + ": expected a decimal integer, got \"" + text + "\"");
    }
}

// Largest member below v and smallest member at or above it, for diagnostics.
std::pair<lw::Int, lw::Int> bracketing_members(const lw::SequenceParams& p, const lw::Int& v) {
    lw::Int a = 0;
    lw::Int b = 1;
    while (b < v) {
        lw::Int c = p.P * b - p.Q * a;
        a = std::move(b);
        b = std::move(c);
    }
    return {std::move(a), std::move(b)};
}

int membership_failure(const lw::WalkConfig& cfg, const lw::Int& v) {
    std::cerr << "lucaswalk: " << v << " is not a member of the sequence U(" << cfg.params.P
              << ", " << cfg.params.Q << ")";
    if (v < 0) {
        std::cerr << "; members are nonnegative, nearest is 0\n";
    } else {
        const auto [lo, hi] = bracketing_members(cfg.params, v);
        std::cerr << "; nearest members are " << lo << " and " << hi << "\n";
    }
    return 3;
}

int run_analyze(const CommonOpts& o) {
    const auto cfg = config_from(o);
    emit(cfg, "analyze", lw::bounds_payload(lw::bound_report(cfg)), o.format);
    return 0;
}

int run_steps(const CommonOpts& o, bool all, bool have_from, lw::Index from) {
    const auto cfg = config_from(o);
    if (all == have_from)
        throw std::domain_error("steps: exactly one of --from-index or --all is required");
    std::vector<lw::StepWitness> ws;
    if (all) {
        const lw::Index top = lw::certificate_threshold(cfg) + lw::default_scan_margin();
        for (lw::Index m = 0; m <= top; ++m)
            for (auto& w : lw::enumerate_steps_from(cfg, m)) ws.push_back(std::move(w));
    } else {
        ws = lw::enumerate_steps_from(cfg, from);
    }
    emit(cfg, "steps", lw::witness_list_payload(cfg, ws), o.format);
    return 0;
}

std::vector<std::pair<int, lw::Int>> parse_blocks(const std::string& text) {
    std::vector<std::pair<int, lw::Int>> blocks;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        const std::string piece = text.substr(pos, end - pos);
        const auto colon = piece.find(':');
        if (colon == std::string::npos)
            throw std::domain_error("blocks: expected comma-separated t:r pairs, got \"" +
                                    piece + "\"");
        const auto t = parse_int64(piece.substr(0, colon), "blocks t");
        blocks.emplace_back(static_cast<int>(t), parse_bigint(piece.substr(colon + 1), "blocks r"));
        pos = end + 1;
    }
    if (blocks.empty()) throw std::domain_error("blocks: at least one t:r pair is required");
    return blocks;
}

int run_walk(const CommonOpts& o, bool longest, bool have_start, const std::string& start_value,
             const std::string& blocks_text) {
    const auto cfg = config_from(o);
    if (longest) {
        lw::WalkSimulation sim;
        sim.ok = true;
        sim.record = lw::longest_walk(cfg).record;
        emit(cfg, "walk", lw::simulation_payload(cfg, sim), o.format);
        return 0;
    }
    if (!have_start)
        throw std::domain_error("walk: either --longest or --start-value with --blocks is required");
    const lw::Int v = parse_bigint(start_value, "start-value");
    if (v < 0) return membership_failure(cfg, v);
    const auto start = lw::index_of_value(cfg.params, v);
    if (!start) return membership_failure(cfg, v);
    const auto sim = lw::simulate_walk(cfg, *start, parse_blocks(blocks_text));
    emit(cfg, "walk", lw::simulation_payload(cfg, sim), o.format);
    if (!sim.ok) {
        std::cerr << "lucaswalk: block " << sim.failed_block << " produced "
                  << sim.offending_value << ", which does not extend the walk\n";
        return 3;
    }
    return 0;
}

int run_verify(const CommonOpts& o, const std::string& suite, lw::Index max_m, lw::Index max_k) {
    const auto cfg = config_from(o);
    const bool all = suite == "all";
    std::vector<lw::SuiteResult> suites;
    if (all || suite == "identities")
        suites.push_back(lw::run_identity_suite(max_m > 0 ? max_m : 200, max_k));
    if (all || suite == "growth")
        suites.push_back(lw::run_growth_suite(max_m > 0 ? max_m : 500));
    if (all || suite == "differential") suites.push_back(lw::run_differential_suite(cfg));
    if (all || suite == "rigidity") suites.push_back(lw::run_rigidity_suite(cfg));
    bool pass = true;
    for (const auto& s : suites) pass = pass && s.pass;
    emit(cfg, "verify", lw::suites_payload(suites), o.format);
    return pass ? 0 : 1;
}

int run_certify(const CommonOpts& o, lw::Index margin) {
    const auto cfg = config_from(o);
    emit(cfg, "certify", lw::certificate_payload(lw::certify_termination(cfg, margin)), o.format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digit-appending walks along Lucas sequences: bounds, steps, certificates"};
    app.require_subcommand(1);

    CommonOpts analyze_opts;
    auto* analyze_cmd = app.add_subcommand("analyze", "bound report with exhaustive L_max");
    add_common(analyze_cmd, analyze_opts);

    CommonOpts steps_opts;
    lw::Index from_index = 0;
    bool steps_all = false;
    auto* steps_cmd = app.add_subcommand("steps", "enumerate valid steps");
    add_common(steps_cmd, steps_opts);
    auto* from_opt =
        steps_cmd->add_option("--from-index", from_index, "enumerate steps from one index");
    auto* all_opt =
        steps_cmd->add_flag("--all", steps_all, "enumerate from every index up to the threshold");
    from_opt->excludes(all_opt);
    all_opt->excludes(from_opt);

    CommonOpts walk_opts;
    bool walk_longest = false;
    std::string start_value;
    std::string blocks_text;
    auto* walk_cmd = app.add_subcommand("walk", "simulate a walk or emit the longest one");
    add_common(walk_cmd, walk_opts);
    auto* longest_opt = walk_cmd->add_flag("--longest", walk_longest, "emit the longest walk");
    auto* start_opt = walk_cmd->add_option("--start-value", start_value,
                                           "starting sequence value (decimal)");
    auto* blocks_opt = walk_cmd->add_option("--blocks", blocks_text,
                                            "comma-separated t:r pairs to append in order");
    longest_opt->excludes(start_opt);
    longest_opt->excludes(blocks_opt);
    blocks_opt->needs(start_opt);

    CommonOpts verify_opts;
    std::string suite = "all";
    lw::Index max_m = 0;
    lw::Index max_k = -1;
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    add_common(verify_cmd, verify_opts);
    verify_cmd->add_option("--suite", suite, "identities, growth, differential, rigidity, or all")
        ->check(CLI::IsMember({"identities", "growth", "differential", "rigidity", "all"}));
    verify_cmd->add_option("--max-m", max_m, "index range for identities and growth");
    verify_cmd->add_option("--max-k", max_k, "offset range for identities");

    CommonOpts certify_opts;
    lw::Index margin = 0;
    auto* certify_cmd = app.add_subcommand("certify", "build and check a termination certificate");
    add_common(certify_cmd, certify_opts);
    auto* margin_opt =
        certify_cmd->add_option("--margin", margin, "width of the no-step scan (default 50)");

    try {
        apply_environment();
    } catch (const std::exception& e) {
        std::cerr << "lucaswalk: " << e.what() << "\n";
        return 2;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze_cmd)) return run_analyze(analyze_opts);
        if (app.got_subcommand(steps_cmd))
            return run_steps(steps_opts, steps_all, from_opt->count() > 0, from_index);
        if (app.got_subcommand(walk_cmd))
            return run_walk(walk_opts, walk_longest, start_opt->count() > 0, start_value,
                            blocks_text);
        if (app.got_subcommand(verify_cmd)) return run_verify(verify_opts, suite, max_m, max_k);
        if (app.got_subcommand(certify_cmd))
            return run_certify(certify_opts,
                               margin_opt->count() > 0 ? margin : lw::default_scan_margin());
    } catch (const lw::certification_error& e) {
        std::cerr << "lucaswalk: certification failed [" << e.condition << "]: " << e.what()
                  << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "lucaswalk: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
