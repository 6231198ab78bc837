#pragma once

#include <map>
#include <optional>
#include <string>

#include "stropsat/smtlib.hpp"

namespace stropsat {

struct RunConfig {
    unsigned max_squarings = 32;
    std::optional<long> timeout_ms;
    bool json = false;
    long seed = 0;
};

enum class Verdict { Sat, Unsat, Unknown };

struct RunReport {
    Verdict verdict = Verdict::Unknown;
    std::map<std::string, Rational> model; // present iff verdict == Sat
    std::string reason;                    // present iff verdict == Unknown
    double parse_ms = 0;
    double encode_ms = 0;
    double solve_ms = 0;
    double base_ms = 0;
    double total_ms = 0;
};

// Full pipeline over SMT-LIB2 text. Throws ParseError for malformed input;
// unsupported fragments become Unknown verdicts, not exceptions.
RunReport run_text(const std::string& text, const RunConfig& cfg);

// Same, reading from a file. Throws std::runtime_error on I/O failure.
RunReport run_file(const std::string& path, const RunConfig& cfg);

std::string verdict_word(Verdict v);

// "p", "(- p)", "(/ p q)" or "(- (/ p q))" per the model block contract.
std::string format_rational(const Rational& q);

// Deterministic text rendering: verdict line, then a model block on sat or a
// "; reason: ..." line on unknown.
std::string render_text(const RunReport& report);

// JSON object with verdict, reason, model (rationals as num/den strings) and
// per-phase timings.
std::string render_json(const RunReport& report);

} // namespace stropsat
