#pragma once

#include <string>
#include <vector>

#include "stropsat/subtropical.hpp"

namespace stropsat {

// One node of the command/term surface syntax.
struct SExpr {
    bool is_list = false;
    std::string atom;
    std::vector<SExpr> kids;
    int line = 0;
    int column = 0;
};

struct ParsedScript {
    std::string logic;
    std::vector<std::string> variables; // declaration order = variable order
    std::vector<SExpr> assertions;
    std::vector<std::string> commands_seen;
};

// Pragmatic QF_NRA subset: set-logic, set-info, declare-fun/declare-const of
// arity-0 Real symbols, assert, check-sat, get-model, exit. Throws ParseError
// on syntax problems and UnsupportedError on out-of-fragment features.
ParsedScript parse_script(const std::string& text);

enum class VerdictOverride { None, TriviallyUnsat, TriviallySat };

struct NormalizedProblem {
    Problem problem;
    std::vector<std::size_t> provenance; // constraint index -> assertion index
    VerdictOverride verdict_override = VerdictOverride::None;
};

// Normalizes assertions to the conjunction form f_i > 0. Constant conjuncts
// fold into the verdict override. Throws UnsupportedError for any non-strict
// or equality atom and for Boolean structure beyond top-level conjunction.
NormalizedProblem normalize(const ParsedScript& script);

} // namespace stropsat
