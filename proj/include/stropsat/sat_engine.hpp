#pragma once

#include <chrono>
#include <map>
#include <optional>

#include "stropsat/encoder.hpp"

namespace stropsat {

struct EngineOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SolveResult {
    enum class Status { Sat, Unsat, Timeout };
    Status status = Status::Unsat;
    std::map<int, bool> bool_model;     // sign-variable handle -> value
    std::map<int, Rational> lra_model;  // unknown id -> value
};

// DPLL(T): unit propagation over the clause set, sign variables decided first
// with preferred phase false, incremental simplex assertions per theory
// literal, chronological backtracking. Sound and complete for the finite
// clause set; always terminates.
SolveResult solve(const ClauseSet& cs, const EngineOptions& opts = {});

} // namespace stropsat
