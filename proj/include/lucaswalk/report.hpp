#pragma once

#include <lucaswalk/verify.hpp>
#include <lucaswalk/walker.hpp>

#include <json.hpp>

namespace lucaswalk {

using json = nlohmann::json;

inline constexpr const char* kReportVersion = "1";

/// The one output shape every subcommand emits: a versioned envelope around a
/// command-specific payload. Big integers are decimal strings in JSON; keys
/// serialize in sorted order, so equal envelopes render to equal bytes.
struct ReportEnvelope {
    std::string version = kReportVersion;
    std::string command;
    WalkConfig cfg;
    std::string evaluation_notes;
    json payload;

    bool operator==(const ReportEnvelope&) const = default;
};

enum class ReportFormat { json, csv, table };

inline ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "table") return ReportFormat::table;
    throw std::domain_error("format: expected one of json, csv, table");
}

namespace detail {

inline json int_json(const Int& v) { return v.str(); }

inline Int int_from_json(const json& j) { return Int(j.get<std::string>()); }

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

inline json to_json(const WalkConfig& cfg) {
    return {{"P", cfg.params.P}, {"Q", cfg.params.Q}, {"base", cfg.base}, {"digits", cfg.digits}};
}

inline WalkConfig config_from_json(const json& j) {
    return {{j.at("P").get<std::int64_t>(), j.at("Q").get<std::int64_t>()},
            j.at("base").get<std::int64_t>(), j.at("digits").get<int>()};
}

inline json to_json(const WalkConfig& cfg, const StepWitness& w) {
    const Int from = term(cfg.params, w.m);
    return {{"m", w.m},         {"k", w.k},
            {"t", w.t},         {"r", detail::int_json(w.r)},
            {"from_value", detail::int_json(from)},
            {"to_value", detail::int_json(term(cfg.params, w.m + w.k))}};
}

inline StepWitness witness_from_json(const json& j) {
    return {j.at("m").get<Index>(), j.at("k").get<Index>(), j.at("t").get<int>(),
            detail::int_from_json(j.at("r"))};
}

inline json witness_list_payload(const WalkConfig& cfg, const std::vector<StepWitness>& ws) {
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(to_json(cfg, w));
    return {{"count", ws.size()}, {"witnesses", std::move(arr)}};
}

inline std::vector<StepWitness> witness_list_from_json(const json& payload) {
    std::vector<StepWitness> out;
    for (const auto& j : payload.at("witnesses")) out.push_back(witness_from_json(j));
    return out;
}

inline json walk_payload(const WalkConfig& cfg, const WalkRecord& rec) {
    json steps = json::array();
    json values = json::array();
    values.push_back(detail::int_json(term(cfg.params, rec.start)));
    for (const auto& w : rec.steps) {
        steps.push_back(to_json(cfg, w));
        values.push_back(detail::int_json(term(cfg.params, w.m + w.k)));
    }
    return {{"start", rec.start},
            {"length", rec.length()},
            {"node_count", rec.length() + 1},
            {"final_index", rec.final_index()},
            {"steps", std::move(steps)},
            {"values", std::move(values)}};
}

inline WalkRecord walk_from_json(const json& payload) {
    WalkRecord rec;
    rec.start = payload.at("start").get<Index>();
    for (const auto& j : payload.at("steps")) rec.steps.push_back(witness_from_json(j));
    return rec;
}

inline json simulation_payload(const WalkConfig& cfg, const WalkSimulation& sim) {
    json j = {{"ok", sim.ok}, {"walk", walk_payload(cfg, sim.record)}};
    if (!sim.ok) {
        j["failed_block"] = sim.failed_block;
        j["offending_value"] = detail::int_json(sim.offending_value);
    }
    return j;
}

inline json bounds_payload(const BoundReport& rep) {
    json j = {{"n_star", rep.n_star},       {"K_exact", rep.K_exact},
              {"m_star", rep.m_star},       {"threshold", rep.threshold},
              {"L_max", rep.L_max},         {"satisfied", rep.satisfied},
              {"K_paper", nullptr},         {"theorem_bound", nullptr},
              {"closed_form", nullptr}};
    if (rep.K_paper) j["K_paper"] = *rep.K_paper;
    if (rep.theorem_bound) j["theorem_bound"] = *rep.theorem_bound;
    if (rep.closed_form) j["closed_form"] = *rep.closed_form;
    return j;
}

inline BoundReport bounds_from_json(const json& payload, const WalkConfig& cfg) {
    BoundReport rep;
    rep.cfg = cfg;
    rep.n_star = payload.at("n_star").get<Index>();
    rep.K_exact = payload.at("K_exact").get<Index>();
    rep.m_star = payload.at("m_star").get<Index>();
    rep.threshold = payload.at("threshold").get<Index>();
    rep.L_max = payload.at("L_max").get<Index>();
    rep.satisfied = payload.at("satisfied").get<bool>();
    if (!payload.at("K_paper").is_null()) rep.K_paper = payload.at("K_paper").get<Index>();
    if (!payload.at("theorem_bound").is_null())
        rep.theorem_bound = payload.at("theorem_bound").get<Index>();
    if (!payload.at("closed_form").is_null())
        rep.closed_form = payload.at("closed_form").get<std::string>();
    return rep;
}

inline json certificate_payload(const TerminationCertificate& cert) {
    json solutions = json::array();
    for (const auto& [k, t] : cert.rigidity) solutions.push_back({{"k", k}, {"t", t}});
    json checks = json::array();
    for (const auto& c : cert.checks)
        checks.push_back({{"condition", c.condition}, {"ok", c.ok}, {"detail", c.detail}});
    return {{"n_star", cert.n_star},
            {"K_exact", cert.K_exact},
            {"m_star", cert.m_star},
            {"threshold", cert.threshold},
            {"scan_margin", cert.scan_margin},
            {"rigidity_solutions", std::move(solutions)},
            {"checks", std::move(checks)},
            {"conclusion", cert.conclusion}};
}

inline TerminationCertificate certificate_from_json(const json& payload, const WalkConfig& cfg) {
    TerminationCertificate cert;
    cert.cfg = cfg;
    cert.n_star = payload.at("n_star").get<Index>();
    cert.K_exact = payload.at("K_exact").get<Index>();
    cert.m_star = payload.at("m_star").get<Index>();
    cert.threshold = payload.at("threshold").get<Index>();
    cert.scan_margin = payload.at("scan_margin").get<Index>();
    for (const auto& j : payload.at("rigidity_solutions"))
        cert.rigidity.push_back({j.at("k").get<Index>(), j.at("t").get<int>()});
    for (const auto& j : payload.at("checks"))
        cert.checks.push_back({j.at("condition").get<std::string>(), j.at("ok").get<bool>(),
                               j.at("detail").get<std::string>()});
    cert.conclusion = payload.at("conclusion").get<std::string>();
    return cert;
}

inline json suites_payload(const std::vector<SuiteResult>& suites) {
    bool all = true;
    json arr = json::array();
    for (const auto& s : suites) {
        all = all && s.pass;
        json j = {{"name", s.name}, {"pass", s.pass}, {"cases", s.cases}, {"detail", s.detail}};
        j["counterexample"] = s.pass ? json(nullptr) : json(s.counterexample);
        arr.push_back(std::move(j));
    }
    return {{"pass", all}, {"suites", std::move(arr)}};
}

inline json to_json(const ReportEnvelope& env) {
    return {{"version", env.version},
            {"command", env.command},
            {"config", to_json(env.cfg)},
            {"evaluation_notes", env.evaluation_notes},
            {"payload", env.payload}};
}

inline ReportEnvelope envelope_from_json(const json& j) {
    ReportEnvelope env;
    env.version = j.at("version").get<std::string>();
    env.command = j.at("command").get<std::string>();
    env.cfg = config_from_json(j.at("config"));
    env.evaluation_notes = j.at("evaluation_notes").get<std::string>();
    env.payload = j.at("payload");
    return env;
}

inline std::string render_json(const ReportEnvelope& env) { return to_json(env).dump(2) + "\n"; }

namespace detail {

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) row += ',';
        row += csv_escape(fields[i]);
    }
    return row + "\n";
}

inline std::vector<std::string> csv_prefix(const ReportEnvelope& env) {
    return {env.version,
            env.command,
            std::to_string(env.cfg.params.P),
            std::to_string(env.cfg.params.Q),
            std::to_string(env.cfg.base),
            std::to_string(env.cfg.digits)};
}

inline std::string opt_str(const json& j) { return j.is_null() ? "" : j.dump(); }

}  // namespace detail

/// CSV rendering: header row then data rows, column order fixed per command
/// and versioned through the leading `version` column.
inline std::string render_csv(const ReportEnvelope& env) {
    using detail::csv_row;
    const auto prefix = detail::csv_prefix(env);
    const auto with_prefix = [&prefix](std::vector<std::string> rest) {
        std::vector<std::string> row = prefix;
        row.insert(row.end(), rest.begin(), rest.end());
        return row;
    };
    std::string out;
    const json& p = env.payload;
    if (env.command == "analyze") {
        out += csv_row({"version", "command", "P", "Q", "base", "digits", "n_star", "K_paper",
                        "K_exact", "m_star", "threshold", "theorem_bound", "closed_form", "L_max",
                        "satisfied"});
        out += csv_row(with_prefix({p.at("n_star").dump(), detail::opt_str(p.at("K_paper")),
                                    p.at("K_exact").dump(), p.at("m_star").dump(),
                                    p.at("threshold").dump(),
                                    detail::opt_str(p.at("theorem_bound")),
                                    p.at("closed_form").is_null()
                                        ? ""
                                        : p.at("closed_form").get<std::string>(),
                                    p.at("L_max").dump(),
                                    p.at("satisfied").get<bool>() ? "true" : "false"}));
        return out;
    }
    if (env.command == "steps" || env.command == "walk") {
        out += csv_row({"version", "command", "P", "Q", "base", "digits", "m", "k", "t", "r",
                        "from_value", "to_value"});
        const json& ws = env.command == "steps" ? p.at("witnesses") : p.at("walk").at("steps");
        for (const auto& w : ws)
            out += csv_row(with_prefix({w.at("m").dump(), w.at("k").dump(), w.at("t").dump(),
                                        w.at("r").get<std::string>(),
                                        w.at("from_value").get<std::string>(),
                                        w.at("to_value").get<std::string>()}));
        return out;
    }
    if (env.command == "certify") {
        out += csv_row({"version", "command", "P", "Q", "base", "digits", "n_star", "K_exact",
                        "m_star", "threshold", "scan_margin", "rigidity_solutions", "conclusion"});
        std::string solutions;
        for (const auto& s : p.at("rigidity_solutions")) {
            if (!solutions.empty()) solutions += ';';
            solutions += s.at("k").dump() + ":" + s.at("t").dump();
        }
        out += csv_row(with_prefix({p.at("n_star").dump(), p.at("K_exact").dump(),
                                    p.at("m_star").dump(), p.at("threshold").dump(),
                                    p.at("scan_margin").dump(), solutions,
                                    p.at("conclusion").get<std::string>()}));
        return out;
    }
    if (env.command == "verify") {
        out += csv_row({"version", "command", "P", "Q", "base", "digits", "suite", "pass", "cases",
                        "detail", "counterexample"});
        for (const auto& s : p.at("suites"))
            out += csv_row(with_prefix(
                {s.at("name").get<std::string>(), s.at("pass").get<bool>() ? "true" : "false",
                 s.at("cases").dump(), s.at("detail").get<std::string>(),
                 s.at("counterexample").is_null() ? "" : s.at("counterexample").get<std::string>()}));
        return out;
    }
    throw std::domain_error("render_csv: no layout for command " + env.command);
}

/// Human-oriented rendering; not a stability contract.
inline std::string render_table(const ReportEnvelope& env) {
    std::ostringstream os;
    os << env.command << " (P=" << env.cfg.params.P << ", Q=" << env.cfg.params.Q
       << ", base=" << env.cfg.base << ", digits=" << env.cfg.digits << ")\n";
    const auto line = [&os](const std::string& key, const std::string& value) {
        os << "  " << key;
        for (std::size_t i = key.size(); i < 18; ++i) os << ' ';
        os << value << "\n";
    };
    const auto witness_lines = [&](const json& ws) {
        for (const auto& w : ws)
            os << "  m=" << w.at("m") << " k=" << w.at("k") << " t=" << w.at("t")
               << " r=" << w.at("r").get<std::string>() << "  "
               << w.at("from_value").get<std::string>() << " -> "
               << w.at("to_value").get<std::string>() << "\n";
    };
    const json& p = env.payload;
    if (env.command == "analyze") {
        line("n_star", p.at("n_star").dump());
        line("K_paper", detail::opt_str(p.at("K_paper")));
        line("K_exact", p.at("K_exact").dump());
        line("m_star", p.at("m_star").dump());
        line("threshold", p.at("threshold").dump());
        line("theorem_bound", detail::opt_str(p.at("theorem_bound")));
        line("closed_form", p.at("closed_form").is_null() ? "" : p.at("closed_form").get<std::string>());
        line("L_max", p.at("L_max").dump());
        line("satisfied", p.at("satisfied").get<bool>() ? "true" : "false");
    } else if (env.command == "steps") {
        line("witnesses", p.at("count").dump());
        witness_lines(p.at("witnesses"));
    } else if (env.command == "walk") {
        const json& w = p.contains("walk") ? p.at("walk") : p;
        if (p.contains("ok") && !p.at("ok").get<bool>()) {
            line("ok", "false");
            line("failed_block", p.at("failed_block").dump());
            line("offending_value", p.at("offending_value").get<std::string>());
        }
        line("start", w.at("start").dump());
        line("length", w.at("length").dump());
        std::string values;
        for (const auto& v : w.at("values")) {
            if (!values.empty()) values += " -> ";
            values += v.get<std::string>();
        }
        line("values", values);
        witness_lines(w.at("steps"));
    } else if (env.command == "certify") {
        line("conclusion", p.at("conclusion").get<std::string>());
        line("threshold", p.at("threshold").dump());
        line("n_star", p.at("n_star").dump());
        line("K_exact", p.at("K_exact").dump());
        line("m_star", p.at("m_star").dump());
        line("scan_margin", p.at("scan_margin").dump());
        for (const auto& s : p.at("rigidity_solutions"))
            os << "  rigidity        V_" << s.at("k") << " = base^" << s.at("t") << "\n";
        for (const auto& c : p.at("checks"))
            os << "  check " << (c.at("ok").get<bool>() ? "[ok] " : "[FAIL] ")
               << c.at("condition").get<std::string>() << ": "
               << c.at("detail").get<std::string>() << "\n";
    } else if (env.command == "verify") {
        line("pass", p.at("pass").get<bool>() ? "true" : "false");
        for (const auto& s : p.at("suites")) {
            os << "  " << (s.at("pass").get<bool>() ? "[ok] " : "[FAIL] ")
               << s.at("name").get<std::string>() << ": " << s.at("cases") << " cases, "
               << s.at("detail").get<std::string>();
            if (!s.at("counterexample").is_null())
                os << " | " << s.at("counterexample").get<std::string>();
            os << "\n";
        }
    } else {
        throw std::domain_error("render_table: no layout for command " + env.command);
    }
    return os.str();
}

inline std::string render(const ReportEnvelope& env, ReportFormat format) {
    switch (format) {
        case ReportFormat::json: return render_json(env);
        case ReportFormat::csv: return render_csv(env);
        case ReportFormat::table: return render_table(env);
    }
    throw std::domain_error("render: unknown format");
}

}  // namespace lucaswalk
