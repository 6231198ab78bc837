#include "stropsat/simplex.hpp"

#include <algorithm>
#include <sstream>

namespace stropsat {

LinearAtom complement(const LinearAtom& a) {
    LinearAtom out = a;
    switch (a.rel) {
    case Rel::Gt: out.rel = Rel::Le; break;
    case Rel::Lt: out.rel = Rel::Ge; break;
    case Rel::Ge: out.rel = Rel::Lt; break;
    case Rel::Le: out.rel = Rel::Gt; break;
    }
    return out;
}

bool atom_holds(const LinearAtom& a, const std::map<int, Rational>& assignment) {
    Rational lhs = a.constant;
    for (const auto& [v, c] : a.coeffs)
        lhs += c * assignment.at(v);
    switch (a.rel) {
    case Rel::Gt: return lhs > 0;
    case Rel::Lt: return lhs < 0;
    case Rel::Ge: return lhs >= 0;
    case Rel::Le: return lhs <= 0;
    }
    return false;
}

static const char* rel_text(Rel r) {
    switch (r) {
    case Rel::Gt: return ">";
    case Rel::Lt: return "<";
    case Rel::Ge: return ">=";
    case Rel::Le: return "<=";
    }
    return "?";
}

static std::string expr_key(const std::map<int, Rational>& coeffs) {
    std::ostringstream os;
    for (const auto& [v, c] : coeffs)
        os << v << '*' << c.get_str() << ' ';
    return os.str();
}

std::string atom_key(const LinearAtom& a) {
    std::ostringstream os;
    os << expr_key(a.coeffs) << "+ " << a.constant.get_str() << ' ' << rel_text(a.rel);
    return os.str();
}

int SimplexContext::add_variable() {
    int id = static_cast<int>(vars_.size());
    if (id != num_structural_)
        throw UsageError("unknowns must be registered before any atom is asserted");
    vars_.emplace_back();
    ++num_structural_;
    return id;
}

int SimplexContext::ensure_slack(const std::map<int, Rational>& unit_expr) {
    std::string key = expr_key(unit_expr);
    if (auto it = slack_cache_.find(key); it != slack_cache_.end())
        return it->second;

    int s = static_cast<int>(vars_.size());
    vars_.emplace_back();
    std::map<int, Rational> row;
    DeltaRational beta;
    for (const auto& [v, c] : unit_expr) {
        if (vars_[static_cast<std::size_t>(v)].basic) {
            for (const auto& [w, cw] : rows_.at(v)) {
                Rational& slot = row[w];
                slot += c * cw;
                if (sgn(slot) == 0)
                    row.erase(w);
            }
        } else {
            Rational& slot = row[v];
            slot += c;
            if (sgn(slot) == 0)
                row.erase(v);
        }
        beta += vars_[static_cast<std::size_t>(v)].beta * c;
    }
    vars_[static_cast<std::size_t>(s)].basic = true;
    vars_[static_cast<std::size_t>(s)].beta = beta;
    rows_[s] = std::move(row);
    slack_cache_[key] = s;
    return s;
}

SimplexContext::AssertResult SimplexContext::assert_atom(const LinearAtom& a, int* atom_id) {
    std::map<int, Rational> coeffs;
    for (const auto& [v, c] : a.coeffs) {
        if (v < 0 || v >= num_structural_)
            throw UsageError("atom references an unregistered unknown");
        if (sgn(c) != 0)
            coeffs[v] = c;
    }

    int id = static_cast<int>(atoms_.size());
    atoms_.push_back(a);
    if (atom_id)
        *atom_id = id;

    if (coeffs.empty()) {
        bool holds = false;
        switch (a.rel) {
        case Rel::Gt: holds = a.constant > 0; break;
        case Rel::Lt: holds = a.constant < 0; break;
        case Rel::Ge: holds = a.constant >= 0; break;
        case Rel::Le: holds = a.constant <= 0; break;
        }
        if (holds)
            return {};
        return {false, {id}};
    }

    int var;
    Rational g;
    if (coeffs.size() == 1) {
        var = coeffs.begin()->first;
        g = coeffs.begin()->second;
    } else {
        g = coeffs.begin()->second;
        std::map<int, Rational> unit_expr;
        for (const auto& [v, c] : coeffs)
            unit_expr[v] = c / g;
        var = ensure_slack(unit_expr);
    }

    // g*var + constant REL 0  =>  var REL' -constant/g (REL flipped when g < 0)
    Rational bound_value = -a.constant / g;
    Rel rel = a.rel;
    if (sgn(g) < 0) {
        switch (rel) {
        case Rel::Gt: rel = Rel::Lt; break;
        case Rel::Lt: rel = Rel::Gt; break;
        case Rel::Ge: rel = Rel::Le; break;
        case Rel::Le: rel = Rel::Ge; break;
        }
    }

    switch (rel) {
    case Rel::Gt: return assert_bound(var, true, DeltaRational(bound_value, Rational(1)), id);
    case Rel::Ge: return assert_bound(var, true, DeltaRational(bound_value), id);
    case Rel::Lt: return assert_bound(var, false, DeltaRational(bound_value, Rational(-1)), id);
    case Rel::Le: return assert_bound(var, false, DeltaRational(bound_value), id);
    }
    return {};
}

SimplexContext::AssertResult SimplexContext::assert_bound(int var, bool is_lower,
                                                          const DeltaRational& value, int atom_id) {
    VarState& v = vars_[static_cast<std::size_t>(var)];
    if (is_lower) {
        if (v.lower && v.lower->value >= value)
            return {}; // implied by the current bound
        if (v.upper && value > v.upper->value)
            return {false, {atom_id, v.upper->atom_id}};
        trail_.push_back({var, true, v.lower});
        v.lower = Bound{value, atom_id};
        if (!v.basic && v.beta < value)
            update_nonbasic(var, value);
    } else {
        if (v.upper && v.upper->value <= value)
            return {};
        if (v.lower && value < v.lower->value)
            return {false, {atom_id, v.lower->atom_id}};
        trail_.push_back({var, false, v.upper});
        v.upper = Bound{value, atom_id};
        if (!v.basic && v.beta > value)
            update_nonbasic(var, value);
    }
    return {};
}

void SimplexContext::update_nonbasic(int var, const DeltaRational& value) {
    DeltaRational diff = value - vars_[static_cast<std::size_t>(var)].beta;
    vars_[static_cast<std::size_t>(var)].beta = value;
    for (auto& [b, row] : rows_) {
        auto it = row.find(var);
        if (it != row.end())
            vars_[static_cast<std::size_t>(b)].beta += diff * it->second;
    }
}

void SimplexContext::pivot(int basic_var, int nonbasic_var) {
    std::map<int, Rational> row = std::move(rows_.at(basic_var));
    rows_.erase(basic_var);
    Rational a = row.at(nonbasic_var);
    row.erase(nonbasic_var);

    // nonbasic_var = (basic_var - sum(c_w * w)) / a
    std::map<int, Rational> new_row;
    new_row[basic_var] = 1 / a;
    for (const auto& [w, c] : row)
        new_row[w] = -c / a;

    for (auto& [b, rb] : rows_) {
        auto it = rb.find(nonbasic_var);
        if (it == rb.end())
            continue;
        Rational c = it->second;
        rb.erase(it);
        for (const auto& [w, cw] : new_row) {
            Rational& slot = rb[w];
            slot += c * cw;
            if (sgn(slot) == 0)
                rb.erase(w);
        }
    }

    vars_[static_cast<std::size_t>(basic_var)].basic = false;
    vars_[static_cast<std::size_t>(nonbasic_var)].basic = true;
    rows_[nonbasic_var] = std::move(new_row);
}

void SimplexContext::pivot_and_update(int basic_var, int nonbasic_var, const DeltaRational& target) {
    Rational a = rows_.at(basic_var).at(nonbasic_var);
    DeltaRational theta = (target - vars_[static_cast<std::size_t>(basic_var)].beta) * (1 / a);
    vars_[static_cast<std::size_t>(basic_var)].beta = target;
    vars_[static_cast<std::size_t>(nonbasic_var)].beta += theta;
    for (auto& [b, row] : rows_) {
        if (b == basic_var)
            continue;
        auto it = row.find(nonbasic_var);
        if (it != row.end())
            vars_[static_cast<std::size_t>(b)].beta += theta * it->second;
    }
    pivot(basic_var, nonbasic_var);
}

std::vector<int> SimplexContext::conflict_core(int basic_var, bool lower_violation) const {
    std::vector<int> core;
    const VarState& v = vars_[static_cast<std::size_t>(basic_var)];
    core.push_back(lower_violation ? v.lower->atom_id : v.upper->atom_id);
    for (const auto& [w, c] : rows_.at(basic_var)) {
        const VarState& wv = vars_[static_cast<std::size_t>(w)];
        bool need_upper = lower_violation ? sgn(c) > 0 : sgn(c) < 0;
        core.push_back(need_upper ? wv.upper->atom_id : wv.lower->atom_id);
    }
    std::sort(core.begin(), core.end());
    core.erase(std::unique(core.begin(), core.end()), core.end());
    return core;
}

SimplexContext::CheckResult SimplexContext::check() {
    // After a pop the candidate assignment can drift off retracted bounds.
    for (int v = 0; v < static_cast<int>(vars_.size()); ++v) {
        VarState& vs = vars_[static_cast<std::size_t>(v)];
        if (vs.basic)
            continue;
        if (vs.lower && vs.beta < vs.lower->value)
            update_nonbasic(v, vs.lower->value);
        else if (vs.upper && vs.beta > vs.upper->value)
            update_nonbasic(v, vs.upper->value);
    }

    for (;;) {
        int violated = -1;
        bool lower_violation = false;
        for (const auto& [b, row] : rows_) {
            const VarState& vs = vars_[static_cast<std::size_t>(b)];
            if (vs.lower && vs.beta < vs.lower->value) {
                violated = b;
                lower_violation = true;
                break;
            }
            if (vs.upper && vs.beta > vs.upper->value) {
                violated = b;
                lower_violation = false;
                break;
            }
        }
        if (violated < 0)
            return {true, {}};

        const VarState& vi = vars_[static_cast<std::size_t>(violated)];
        DeltaRational target = lower_violation ? vi.lower->value : vi.upper->value;
        int pivot_var = -1;
        for (const auto& [w, c] : rows_.at(violated)) {
            const VarState& wv = vars_[static_cast<std::size_t>(w)];
            bool increase = lower_violation ? sgn(c) > 0 : sgn(c) < 0;
            bool can = increase ? (!wv.upper || wv.beta < wv.upper->value)
                                : (!wv.lower || wv.beta > wv.lower->value);
            if (can) {
                pivot_var = w;
                break; // Bland: rows are ordered maps, smallest index first
            }
        }
        if (pivot_var < 0)
            return {false, conflict_core(violated, lower_violation)};
        pivot_and_update(violated, pivot_var, target);
    }
}

SimplexContext::ModelResult SimplexContext::check_and_model() {
    CheckResult cr = check();
    if (!cr.sat)
        return {false, {}, std::move(cr.core), Rational(0)};

    // Largest safe delta over all (value, bound) pairs, then halved.
    Rational delta_min(1);
    auto tighten = [&delta_min](const Rational& num, const Rational& den) {
        Rational candidate = num / den;
        if (candidate < delta_min)
            delta_min = candidate;
    };
    for (const VarState& vs : vars_) {
        if (vs.lower) {
            const DeltaRational& b = vs.lower->value;
            if (vs.beta.standard > b.standard && vs.beta.delta < b.delta)
                tighten(vs.beta.standard - b.standard, b.delta - vs.beta.delta);
        }
        if (vs.upper) {
            const DeltaRational& b = vs.upper->value;
            if (vs.beta.standard < b.standard && vs.beta.delta > b.delta)
                tighten(b.standard - vs.beta.standard, vs.beta.delta - b.delta);
        }
    }
    Rational delta_value = delta_min / 2;

    std::map<int, Rational> model;
    for (int v = 0; v < num_structural_; ++v)
        model[v] = vars_[static_cast<std::size_t>(v)].beta.at(delta_value);

    for (const LinearAtom& a : atoms_)
        if (!atom_holds(a, model))
            throw InternalError("simplex model fails an asserted atom");

    return {true, std::move(model), {}, std::move(delta_value)};
}

void SimplexContext::push() {
    levels_.emplace_back(trail_.size(), atoms_.size());
}

void SimplexContext::pop() {
    if (levels_.empty())
        throw UsageError("pop without matching push");
    auto [trail_size, atom_count] = levels_.back();
    levels_.pop_back();
    while (trail_.size() > trail_size) {
        TrailEntry& e = trail_.back();
        VarState& v = vars_[static_cast<std::size_t>(e.var)];
        if (e.is_lower)
            v.lower = e.old_bound;
        else
            v.upper = e.old_bound;
        trail_.pop_back();
    }
    atoms_.resize(atom_count);
}

} // namespace stropsat
