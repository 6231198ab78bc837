#include "stropsat/encoder.hpp"

#include <map>
#include <string>

namespace stropsat {

PropFormula PropFormula::constant(bool value) {
    PropFormula f;
    f.kind = value ? FKind::True : FKind::False;
    return f;
}

PropFormula PropFormula::from_atom(LinearAtom a) {
    PropFormula f;
    f.kind = FKind::Atom;
    f.atom = std::move(a);
    return f;
}

PropFormula PropFormula::var(int handle) {
    PropFormula f;
    f.kind = FKind::BoolVar;
    f.bool_var = handle;
    return f;
}

PropFormula PropFormula::negation(PropFormula f) {
    if (f.kind == FKind::True)
        return constant(false);
    if (f.kind == FKind::False)
        return constant(true);
    if (f.kind == FKind::Not)
        return std::move(f.kids.front());
    PropFormula out;
    out.kind = FKind::Not;
    out.kids.push_back(std::move(f));
    return out;
}

PropFormula PropFormula::conjunction(std::vector<PropFormula> fs) {
    std::vector<PropFormula> kids;
    for (auto& f : fs) {
        if (f.kind == FKind::False)
            return constant(false);
        if (f.kind == FKind::True)
            continue;
        kids.push_back(std::move(f));
    }
    if (kids.empty())
        return constant(true);
    if (kids.size() == 1)
        return std::move(kids.front());
    PropFormula out;
    out.kind = FKind::And;
    out.kids = std::move(kids);
    return out;
}

PropFormula PropFormula::disjunction(std::vector<PropFormula> fs) {
    std::vector<PropFormula> kids;
    for (auto& f : fs) {
        if (f.kind == FKind::True)
            return constant(true);
        if (f.kind == FKind::False)
            continue;
        kids.push_back(std::move(f));
    }
    if (kids.empty())
        return constant(false);
    if (kids.size() == 1)
        return std::move(kids.front());
    PropFormula out;
    out.kind = FKind::Or;
    out.kids = std::move(kids);
    return out;
}

PropFormula PropFormula::exclusive_or(std::vector<PropFormula> fs) {
    bool parity = false;
    std::vector<PropFormula> kids;
    for (auto& f : fs) {
        if (f.kind == FKind::False)
            continue;
        if (f.kind == FKind::True) {
            parity = !parity;
            continue;
        }
        kids.push_back(std::move(f));
    }
    PropFormula out;
    if (kids.empty())
        return constant(parity);
    if (kids.size() == 1)
        out = std::move(kids.front());
    else {
        out.kind = FKind::Xor;
        out.kids = std::move(kids);
    }
    return parity ? negation(std::move(out)) : out;
}

static LinearAtom direction_atom(const ExponentVector& p, const Unknowns& u, std::size_t which_c,
                                 Rel rel) {
    LinearAtom a;
    a.rel = rel;
    a.constant = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0)
            a.coeffs[u.n[i]] = Rational(static_cast<unsigned long>(p[i]));
    a.coeffs[u.c[which_c]] = 1;
    return a;
}

PropFormula encode_phi(const ExponentVector& p, const std::set<ExponentVector>& S,
                       const Unknowns& u, std::size_t which_c) {
    std::vector<PropFormula> parts;
    parts.push_back(PropFormula::from_atom(direction_atom(p, u, which_c, Rel::Gt)));
    for (const auto& q : S)
        if (q != p)
            parts.push_back(PropFormula::from_atom(direction_atom(q, u, which_c, Rel::Lt)));
    return PropFormula::conjunction(std::move(parts));
}

PropFormula encode_psi(const SignedFrame& f, const Unknowns& u, std::size_t i) {
    std::vector<PropFormula> pos;
    for (const auto& p : f.positive)
        pos.push_back(PropFormula::from_atom(direction_atom(p, u, i, Rel::Gt)));
    std::vector<PropFormula> parts;
    parts.push_back(PropFormula::disjunction(std::move(pos)));
    for (const auto& q : f.negative)
        parts.push_back(PropFormula::from_atom(direction_atom(q, u, i, Rel::Lt)));
    return PropFormula::conjunction(std::move(parts));
}

PropFormula encode_theta(const ExponentVector& p, const SignVars& sv) {
    std::vector<PropFormula> operands;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] % 2 == 1)
            operands.push_back(PropFormula::var(sv.b[i]));
    return PropFormula::exclusive_or(std::move(operands));
}

PropFormula encode_Theta(const ExponentVector& p, const Polynomial& f, const SignVars& sv) {
    auto it = f.terms.find(p);
    if (it == f.terms.end())
        throw UsageError("Theta: exponent vector not in the frame");
    PropFormula theta = encode_theta(p, sv);
    return sgn(it->second) > 0 ? PropFormula::negation(std::move(theta)) : theta;
}

PropFormula encode_Psi(const std::vector<Polynomial>& fs, const Unknowns& u, const SignVars& sv) {
    std::vector<PropFormula> conjuncts;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const Polynomial& f = fs[i];
        std::vector<PropFormula> some_positive;
        std::vector<PropFormula> all_separated;
        for (const auto& [p, coeff] : f.terms) {
            PropFormula theta_p = encode_Theta(p, f, sv);
            some_positive.push_back(PropFormula::conjunction(
                {theta_p, PropFormula::from_atom(direction_atom(p, u, i, Rel::Gt))}));
            all_separated.push_back(PropFormula::disjunction(
                {std::move(theta_p), PropFormula::from_atom(direction_atom(p, u, i, Rel::Lt))}));
        }
        conjuncts.push_back(PropFormula::disjunction(std::move(some_positive)));
        for (auto& part : all_separated)
            conjuncts.push_back(std::move(part));
    }
    return PropFormula::conjunction(std::move(conjuncts));
}

namespace {

class Tseitin {
public:
    explicit Tseitin(ClauseSet& cs) : cs_(cs) {}

    int literal(const PropFormula& f) {
        switch (f.kind) {
        case FKind::Atom:
            return atom_var(f.atom);
        case FKind::BoolVar:
            return sign_var(f.bool_var);
        case FKind::Not:
            return -literal(f.kids.front());
        case FKind::And: {
            std::vector<int> lits;
            for (const auto& k : f.kids)
                lits.push_back(literal(k));
            int t = fresh();
            std::vector<int> big{t};
            for (int l : lits) {
                cs_.clauses.push_back({-t, l});
                big.push_back(-l);
            }
            cs_.clauses.push_back(std::move(big));
            return t;
        }
        case FKind::Or: {
            std::vector<int> lits;
            for (const auto& k : f.kids)
                lits.push_back(literal(k));
            int t = fresh();
            std::vector<int> big{-t};
            for (int l : lits) {
                cs_.clauses.push_back({t, -l});
                big.push_back(l);
            }
            cs_.clauses.push_back(std::move(big));
            return t;
        }
        case FKind::Xor: {
            int acc = literal(f.kids.front());
            for (std::size_t i = 1; i < f.kids.size(); ++i)
                acc = xor2(acc, literal(f.kids[i]));
            return acc;
        }
        case FKind::True:
        case FKind::False:
            // builders fold constants away below the root
            throw InternalError("constant node inside a folded formula");
        }
        throw InternalError("unreachable formula kind");
    }

private:
    ClauseSet& cs_;
    std::map<std::string, int> atom_ids_;
    std::map<int, int> sign_ids_;

    int fresh() {
        cs_.vars.push_back({});
        return cs_.var_count();
    }

    int atom_var(const LinearAtom& a) {
        std::string key = atom_key(a);
        auto it = atom_ids_.find(key);
        if (it != atom_ids_.end())
            return it->second;
        cs_.vars.push_back({ClauseSet::VarKind::Atom, -1, a});
        atom_ids_[key] = cs_.var_count();
        return cs_.var_count();
    }

    int sign_var(int handle) {
        auto it = sign_ids_.find(handle);
        if (it != sign_ids_.end())
            return it->second;
        cs_.vars.push_back({ClauseSet::VarKind::SignVar, handle, {}});
        sign_ids_[handle] = cs_.var_count();
        return cs_.var_count();
    }

    // t <-> a xor b, four clauses
    int xor2(int a, int b) {
        int t = fresh();
        cs_.clauses.push_back({-t, a, b});
        cs_.clauses.push_back({-t, -a, -b});
        cs_.clauses.push_back({t, -a, b});
        cs_.clauses.push_back({t, a, -b});
        return t;
    }
};

} // namespace

ClauseSet clausify(const PropFormula& f) {
    ClauseSet cs;
    if (f.kind == FKind::True) {
        cs.trivially_sat = true;
        return cs;
    }
    if (f.kind == FKind::False) {
        cs.clauses.push_back({});
        return cs;
    }
    Tseitin t(cs);
    if (f.kind == FKind::And) {
        // top-level conjunction: one unit per conjunct, no selector needed
        for (const auto& kid : f.kids)
            cs.clauses.push_back({t.literal(kid)});
    } else {
        cs.clauses.push_back({t.literal(f)});
    }
    return cs;
}

} // namespace stropsat
