#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "stropsat/encoder.hpp"
#include "stropsat/sat_engine.hpp"

namespace stropsat {

// Conjunction f_i > 0 over shared variables; every f_i is nonconstant.
struct Problem {
    std::vector<std::string> variables;
    std::vector<Polynomial> constraints;

    std::size_t dimension() const { return variables.size(); }
};

// Certificate: integer direction n, sign variant tau, and per-constraint
// offsets c that make every psi atom hold exactly.
struct Direction {
    std::vector<Integer> n;
    SignVariant tau;
    std::vector<Rational> c;
};

struct Witness {
    std::map<std::string, Rational> assignment;
    Rational base;
    Direction direction;
};

struct SubtropicalConfig {
    unsigned max_squarings = 32;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct PhaseTimings {
    double encode_ms = 0;
    double solve_ms = 0;
    double base_ms = 0;
};

// Searches for a variant positive vertex cluster direction via the linear
// encoding. Empty result means the heuristic gives up (never "unsat").
std::optional<Direction> find_direction(const Problem& problem,
                                        const SubtropicalConfig& cfg = {},
                                        PhaseTimings* timings = nullptr);

// Positive-orthant variant (no sign flips); used by root bracketing.
std::optional<Direction> find_direction_positive(const Problem& problem,
                                                 const SubtropicalConfig& cfg = {});

// Scales a rational vector by the lcm of denominators to an integer vector.
std::vector<Integer> normalize_direction(const std::vector<Rational>& n_rat);

// First base a = 2^(2^j), j = 0..max_squarings, at which every constraint
// evaluates exactly positive at the direction's moment-curve point.
Rational find_base(const Problem& problem, const Direction& dir, unsigned max_squarings);

// The moment-curve point tau applied to (a^{n_1}, ..., a^{n_d}).
Point direction_point(const Direction& dir, const Rational& base);

enum class SubVerdict { Sat, Unknown };

struct SubtropicalOutcome {
    SubVerdict verdict = SubVerdict::Unknown;
    std::optional<Witness> witness;
    std::string reason; // on unknown
    PhaseTimings timings;
};

SubtropicalOutcome subtropical_solve(const Problem& problem, const SubtropicalConfig& cfg = {});

// Lexicographically extremal frame point under the permuted coordinate order;
// always a vertex of the Newton polytope.
ExponentVector lex_vertex(const SignedFrame& frame, const std::vector<std::size_t>& order,
                          bool maximize);

struct RootBracket {
    Point low;
    Point high;
    Rational width;
};

struct RootResult {
    enum class Kind { RootAtOne, Bracket, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<RootBracket> bracket;
};

// Sign-change bracketing on the segment from (1,...,1) to a found positive
// point, bisected until the coordinate width bound holds.
RootResult find_root(const Polynomial& f, const Rational& width,
                     const SubtropicalConfig& cfg = {});

// Exact per-constraint dominance check at a concrete base (diagnostic).
bool dominates_at(const Polynomial& f, const ExponentVector& p, const Direction& dir,
                  const Rational& base);

// True iff n^T p > n^T q for every other frame point q of tau(f)'s frame.
bool strictly_dominant(const Polynomial& f, const ExponentVector& p, const Direction& dir);

} // namespace stropsat
