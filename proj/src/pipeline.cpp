#include "stropsat/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace stropsat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

RunReport run_text(const std::string& text, const RunConfig& cfg) {
    auto start = Clock::now();
    RunReport report;

    try {
        auto t0 = Clock::now();
        ParsedScript script = parse_script(text);
        NormalizedProblem np = normalize(script);
        report.parse_ms = ms_since(t0);

        if (np.verdict_override == VerdictOverride::TriviallyUnsat) {
            report.verdict = Verdict::Unsat;
            report.total_ms = ms_since(start);
            return report;
        }
        if (np.verdict_override == VerdictOverride::TriviallySat) {
            report.verdict = Verdict::Sat;
            for (const std::string& v : np.problem.variables)
                report.model[v] = Rational(1);
            report.total_ms = ms_since(start);
            return report;
        }

        SubtropicalConfig scfg;
        scfg.max_squarings = cfg.max_squarings;
        if (cfg.timeout_ms)
            scfg.deadline = start + std::chrono::milliseconds(*cfg.timeout_ms);

        SubtropicalOutcome outcome = subtropical_solve(np.problem, scfg);
        report.encode_ms = outcome.timings.encode_ms;
        report.solve_ms = outcome.timings.solve_ms;
        report.base_ms = outcome.timings.base_ms;

        if (outcome.verdict == SubVerdict::Sat) {
            // Independent second evaluation pass before committing to "sat".
            Point x;
            for (const std::string& v : np.problem.variables)
                x.push_back(outcome.witness->assignment.at(v));
            for (const Polynomial& f : np.problem.constraints)
                if (evaluate(f, x) <= 0)
                    throw InternalError("witness re-verification failed");
            report.verdict = Verdict::Sat;
            report.model = outcome.witness->assignment;
        } else {
            report.verdict = Verdict::Unknown;
            report.reason = outcome.reason;
        }
    } catch (const UnsupportedError& e) {
        report.verdict = Verdict::Unknown;
        report.reason = std::string("unsupported: ") + e.what();
    }

    report.total_ms = ms_since(start);
    return report;
}

RunReport run_file(const std::string& path, const RunConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_text(buf.str(), cfg);
}

std::string verdict_word(Verdict v) {
    switch (v) {
    case Verdict::Sat:
        return "sat";
    case Verdict::Unsat:
        return "unsat";
    default:
        return "unknown";
    }
}

std::string format_rational(const Rational& q) {
    Rational a = abs(q);
    std::string body = a.get_den() == 1
                           ? a.get_num().get_str()
                           : "(/ " + a.get_num().get_str() + " " + a.get_den().get_str() + ")";
    return sgn(q) < 0 ? "(- " + body + ")" : body;
}

std::string render_text(const RunReport& report) {
    std::string out = verdict_word(report.verdict) + "\n";
    if (report.verdict == Verdict::Sat) {
        out += "(model\n";
        for (const auto& [name, value] : report.model)
            out += "  (define-fun " + name + " () Real " + format_rational(value) + ")\n";
        out += ")\n";
    } else if (report.verdict == Verdict::Unknown) {
        out += "; reason: " + report.reason + "\n";
    }
    return out;
}

std::string render_json(const RunReport& report) {
    nlohmann::ordered_json j;
    j["verdict"] = verdict_word(report.verdict);
    if (report.verdict == Verdict::Sat) {
        nlohmann::ordered_json model = nlohmann::ordered_json::object();
        for (const auto& [name, value] : report.model)
            model[name] = {{"num", value.get_num().get_str()}, {"den", value.get_den().get_str()}};
        j["model"] = model;
    }
    if (report.verdict == Verdict::Unknown)
        j["reason"] = report.reason;
    j["timing"] = {{"parse_ms", report.parse_ms},
                   {"encode_ms", report.encode_ms},
                   {"solve_ms", report.solve_ms},
                   {"base_ms", report.base_ms},
                   {"total_ms", report.total_ms}};
    return j.dump(2) + "\n";
}

} // namespace stropsat
