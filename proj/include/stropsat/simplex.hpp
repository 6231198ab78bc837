#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stropsat/delta_rational.hpp"

namespace stropsat {

enum class Rel { Gt, Lt, Ge, Le };

// Sum(coeffs[i] * x_i) + constant  REL  0 over rational unknowns.
struct LinearAtom {
    std::map<int, Rational> coeffs;
    Rational constant;
    Rel rel = Rel::Gt;
};

// !(e > 0) == e <= 0, and so on.
LinearAtom complement(const LinearAtom& a);

bool atom_holds(const LinearAtom& a, const std::map<int, Rational>& assignment);

std::string atom_key(const LinearAtom& a); // canonical text form, used for dedup

// Incremental exact feasibility checker for conjunctions of LinearAtoms.
// General simplex over delta-rationals, Bland's pivot rule.
class SimplexContext {
public:
    // Registers one more unknown; ids are dense and start at 0.
    int add_variable();
    int variable_count() const { return num_structural_; }

    struct AssertResult {
        bool consistent = true;
        std::vector<int> explanation; // ids of asserted atoms, jointly infeasible
    };

    // Asserts the atom and returns its id through `atom_id`. Detects immediate
    // bound clashes; full consistency is established by check().
    AssertResult assert_atom(const LinearAtom& a, int* atom_id = nullptr);

    struct CheckResult {
        bool sat = false;
        std::vector<int> core; // on unsat: ids of asserted atoms
    };

    // Restores the bound invariant; on conflict, `core` is infeasible on its own.
    CheckResult check();

    struct ModelResult {
        bool sat = false;
        std::map<int, Rational> model; // unknown id -> value, all registered unknowns
        std::vector<int> core;
        Rational delta_value;
    };

    // check() plus a concrete rational instantiation of delta, self-checked
    // against every asserted atom before returning.
    ModelResult check_and_model();

    void push();
    void pop();

    int atom_count() const { return static_cast<int>(atoms_.size()); }
    const LinearAtom& atom(int id) const { return atoms_.at(static_cast<std::size_t>(id)); }

private:
    struct Bound {
        DeltaRational value;
        int atom_id = -1;
    };
    struct VarState {
        std::optional<Bound> lower, upper;
        DeltaRational beta;
        bool basic = false;
    };
    struct TrailEntry {
        int var;
        bool is_lower;
        std::optional<Bound> old_bound;
    };

    int num_structural_ = 0;
    std::vector<VarState> vars_;
    // row per basic variable: basic = sum coeff * nonbasic
    std::map<int, std::map<int, Rational>> rows_;
    std::vector<LinearAtom> atoms_;
    std::map<std::string, int> slack_cache_; // normalized expression -> slack var
    std::vector<TrailEntry> trail_;
    std::vector<std::pair<std::size_t, std::size_t>> levels_; // (trail size, atom count)

    int ensure_slack(const std::map<int, Rational>& unit_expr);
    AssertResult assert_bound(int var, bool is_lower, const DeltaRational& value, int atom_id);
    void update_nonbasic(int var, const DeltaRational& value);
    void pivot(int basic_var, int nonbasic_var);
    void pivot_and_update(int basic_var, int nonbasic_var, const DeltaRational& target);
    std::vector<int> conflict_core(int basic_var, bool lower_violation) const;
};

} // namespace stropsat
