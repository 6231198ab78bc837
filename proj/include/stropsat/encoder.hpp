#pragma once

#include <set>
#include <vector>

#include "stropsat/poly.hpp"
#include "stropsat/simplex.hpp"

namespace stropsat {

// LRA unknown ids for the shared direction n and the per-polynomial offsets c.
struct Unknowns {
    std::vector<int> n;
    std::vector<int> c;
};

// Boolean variable handles for the per-variable sign flips.
struct SignVars {
    std::vector<int> b;
};

enum class FKind { True, False, Atom, BoolVar, Not, And, Or, Xor };

// Formula tree over linear atoms and Boolean sign variables. Builders fold
// constants, so True/False appear only as a whole-formula result.
struct PropFormula {
    FKind kind = FKind::True;
    LinearAtom atom;       // FKind::Atom
    int bool_var = -1;     // FKind::BoolVar
    std::vector<PropFormula> kids;

    static PropFormula constant(bool value);
    static PropFormula from_atom(LinearAtom a);
    static PropFormula var(int handle);
    static PropFormula negation(PropFormula f);
    static PropFormula conjunction(std::vector<PropFormula> fs);
    static PropFormula disjunction(std::vector<PropFormula> fs);
    static PropFormula exclusive_or(std::vector<PropFormula> fs);
};

// Strict separation of p from S \ {p}: n^T p + c > 0, and < 0 for every q.
PropFormula encode_phi(const ExponentVector& p, const std::set<ExponentVector>& S,
                       const Unknowns& u, std::size_t which_c);

// One shared-direction disjunction over the positive frame, conjoined with
// all negative-frame separations. Empty positive frame yields constant false.
PropFormula encode_psi(const SignedFrame& f, const Unknowns& u, std::size_t i);

// XOR over the sign variables whose exponent in p is odd.
PropFormula encode_theta(const ExponentVector& p, const SignVars& sv);

// Membership of p in the positive frame of tau(f); the coefficient sign is
// known at encode time, so this is theta or its negation.
PropFormula encode_Theta(const ExponentVector& p, const Polynomial& f, const SignVars& sv);

// Conjunction over all polynomials of the sign-variant psi form.
PropFormula encode_Psi(const std::vector<Polynomial>& fs, const Unknowns& u, const SignVars& sv);

// Clause database produced by Tseitin transformation. Variable ids are
// 1-based; literals are +id / -id.
struct ClauseSet {
    enum class VarKind { SignVar, Atom, Aux };
    struct VarInfo {
        VarKind kind = VarKind::Aux;
        int sign_var_handle = -1; // VarKind::SignVar: the PropFormula handle
        LinearAtom atom;          // VarKind::Atom
    };
    std::vector<VarInfo> vars;
    std::vector<std::vector<int>> clauses;
    bool trivially_sat = false; // constant-true source formula

    int var_count() const { return static_cast<int>(vars.size()); }
    const VarInfo& info(int id) const { return vars.at(static_cast<std::size_t>(id) - 1); }
};

ClauseSet clausify(const PropFormula& f);

} // namespace stropsat
