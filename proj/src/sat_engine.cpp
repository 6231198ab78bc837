#include "stropsat/sat_engine.hpp"

#include <algorithm>

#include "stropsat/simplex.hpp"

namespace stropsat {

namespace {

class Dpll {
public:
    Dpll(const ClauseSet& cs, const EngineOptions& opts) : cs_(cs), opts_(opts) {
        int unknowns = 0;
        for (const auto& vi : cs_.vars)
            if (vi.kind == ClauseSet::VarKind::Atom)
                for (const auto& [u, c] : vi.atom.coeffs)
                    unknowns = std::max(unknowns, u + 1);
        for (int i = 0; i < unknowns; ++i)
            ctx_.add_variable();

        val_.assign(static_cast<std::size_t>(cs_.var_count()), 0);
        // sign variables first, then atoms and Tseitin selectors in creation order
        for (int v = 1; v <= cs_.var_count(); ++v)
            if (cs_.info(v).kind == ClauseSet::VarKind::SignVar)
                order_.push_back(v);
        for (int v = 1; v <= cs_.var_count(); ++v)
            if (cs_.info(v).kind != ClauseSet::VarKind::SignVar)
                order_.push_back(v);
    }

    SolveResult run() {
        for (;;) {
            if (!propagate() || !theory_consistent()) {
                if (!backtrack())
                    return {SolveResult::Status::Unsat, {}, {}};
                continue;
            }
            if (all_assigned()) {
                auto mr = ctx_.check_and_model();
                if (mr.sat)
                    return build_result(mr.model);
                if (!backtrack())
                    return {SolveResult::Status::Unsat, {}, {}};
                continue;
            }
            if (timed_out())
                return {SolveResult::Status::Timeout, {}, {}};
            if (!decide() && !backtrack())
                return {SolveResult::Status::Unsat, {}, {}};
        }
    }

private:
    const ClauseSet& cs_;
    EngineOptions opts_;
    SimplexContext ctx_;
    std::vector<signed char> val_; // index var-1: 0 unassigned, +1 true, -1 false
    std::vector<int> trail_;
    std::vector<std::size_t> trail_lim_;
    struct Decision {
        int var;
        bool flipped;
    };
    std::vector<Decision> decisions_;

    signed char lit_value(int lit) const {
        signed char v = val_[static_cast<std::size_t>(std::abs(lit)) - 1];
        return lit > 0 ? v : static_cast<signed char>(-v);
    }

    bool timed_out() const {
        return opts_.deadline && std::chrono::steady_clock::now() >= *opts_.deadline;
    }

    bool all_assigned() const {
        return trail_.size() == val_.size();
    }

    // false on immediate theory conflict
    bool enqueue(int lit) {
        int var = std::abs(lit);
        val_[static_cast<std::size_t>(var) - 1] = lit > 0 ? 1 : -1;
        trail_.push_back(lit);
        const auto& vi = cs_.info(var);
        if (vi.kind == ClauseSet::VarKind::Atom) {
            const LinearAtom a = lit > 0 ? vi.atom : complement(vi.atom);
            if (!ctx_.assert_atom(a).consistent)
                return false;
        }
        return true;
    }

    // false on conflict (boolean or theory)
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : cs_.clauses) {
                int unassigned_lit = 0;
                int unassigned_count = 0;
                bool satisfied = false;
                for (int lit : clause) {
                    signed char v = lit_value(lit);
                    if (v > 0) {
                        satisfied = true;
                        break;
                    }
                    if (v == 0) {
                        ++unassigned_count;
                        unassigned_lit = lit;
                    }
                }
                if (satisfied)
                    continue;
                if (unassigned_count == 0)
                    return false;
                if (unassigned_count == 1) {
                    if (!enqueue(unassigned_lit))
                        return false;
                    changed = true;
                }
            }
        }
        return true;
    }

    bool theory_consistent() {
        return ctx_.check().sat;
    }

    bool decide() {
        int var = 0;
        for (int v : order_) {
            if (val_[static_cast<std::size_t>(v) - 1] == 0) {
                var = v;
                break;
            }
        }
        ctx_.push();
        trail_lim_.push_back(trail_.size());
        decisions_.push_back({var, false});
        return enqueue(-var); // preferred phase false
    }

    void undo_level() {
        while (trail_.size() > trail_lim_.back()) {
            int lit = trail_.back();
            trail_.pop_back();
            val_[static_cast<std::size_t>(std::abs(lit)) - 1] = 0;
        }
        trail_lim_.pop_back();
        ctx_.pop();
    }

    // Chronological: flip the most recent decision that still has an untried
    // phase. Returns false when the search space is exhausted.
    bool backtrack() {
        while (!decisions_.empty()) {
            Decision d = decisions_.back();
            decisions_.pop_back();
            undo_level();
            if (!d.flipped) {
                ctx_.push();
                trail_lim_.push_back(trail_.size());
                decisions_.push_back({d.var, true});
                if (enqueue(d.var))
                    return true;
                // theory conflict on the flipped phase: unwind this level too
            }
        }
        return false;
    }

    SolveResult build_result(std::map<int, Rational>& lra_model) {
        SolveResult r;
        r.status = SolveResult::Status::Sat;
        for (int v = 1; v <= cs_.var_count(); ++v) {
            const auto& vi = cs_.info(v);
            if (vi.kind == ClauseSet::VarKind::SignVar)
                r.bool_model[vi.sign_var_handle] = val_[static_cast<std::size_t>(v) - 1] > 0;
        }
        r.lra_model = std::move(lra_model);
        return r;
    }

    std::vector<int> order_;
};

} // namespace

SolveResult solve(const ClauseSet& cs, const EngineOptions& opts) {
    if (cs.clauses.empty()) {
        SolveResult r;
        r.status = SolveResult::Status::Sat;
        return r;
    }
    return Dpll(cs, opts).run();
}

} // namespace stropsat
