#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "stropsat/encoder.hpp"
#include "support/fourier_motzkin.hpp"
#include "support/oracles.hpp"

using namespace stropsat;

namespace {

Unknowns unknowns_for(std::size_t d, std::size_t m) {
    Unknowns u;
    for (std::size_t i = 0; i < d; ++i)
        u.n.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < m; ++i)
        u.c.push_back(static_cast<int>(d + i));
    return u;
}

void collect_atoms(const PropFormula& f, std::map<std::string, LinearAtom>& atoms,
                   std::set<int>& bools) {
    switch (f.kind) {
    case FKind::Atom:
        atoms.emplace(atom_key(f.atom), f.atom);
        break;
    case FKind::BoolVar:
        bools.insert(f.bool_var);
        break;
    default:
        for (const auto& k : f.kids)
            collect_atoms(k, atoms, bools);
    }
}

bool eval_formula(const PropFormula& f, const std::map<std::string, bool>& atom_truth,
                  const std::map<int, bool>& bool_truth) {
    switch (f.kind) {
    case FKind::True:
        return true;
    case FKind::False:
        return false;
    case FKind::Atom:
        return atom_truth.at(atom_key(f.atom));
    case FKind::BoolVar:
        return bool_truth.at(f.bool_var);
    case FKind::Not:
        return !eval_formula(f.kids.front(), atom_truth, bool_truth);
    case FKind::And:
        for (const auto& k : f.kids)
            if (!eval_formula(k, atom_truth, bool_truth))
                return false;
        return true;
    case FKind::Or:
        for (const auto& k : f.kids)
            if (eval_formula(k, atom_truth, bool_truth))
                return true;
        return false;
    case FKind::Xor: {
        bool acc = false;
        for (const auto& k : f.kids)
            acc ^= eval_formula(k, atom_truth, bool_truth);
        return acc;
    }
    }
    return false;
}

int max_unknown(const std::map<std::string, LinearAtom>& atoms) {
    int n = 0;
    for (const auto& [key, a] : atoms)
        for (const auto& [v, c] : a.coeffs)
            n = std::max(n, v + 1);
    return n;
}

// Ground-truth satisfiability of a PropFormula: enumerate truth assignments
// for the distinct atoms and Boolean variables; an atom assignment counts only
// if the implied conjunction (atom or its complement) is feasible.
bool formula_sat_oracle(const PropFormula& f) {
    std::map<std::string, LinearAtom> atoms;
    std::set<int> bools;
    collect_atoms(f, atoms, bools);
    int nvars = max_unknown(atoms);
    std::vector<std::pair<std::string, LinearAtom>> alist(atoms.begin(), atoms.end());
    std::vector<int> blist(bools.begin(), bools.end());
    std::size_t bits = alist.size() + blist.size();
    REQUIRE(bits <= 20);
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
        std::map<std::string, bool> atruth;
        std::map<int, bool> btruth;
        std::vector<LinearAtom> constraints;
        for (std::size_t i = 0; i < alist.size(); ++i) {
            bool val = (mask >> i) & 1u;
            atruth[alist[i].first] = val;
            constraints.push_back(val ? alist[i].second : complement(alist[i].second));
        }
        for (std::size_t i = 0; i < blist.size(); ++i)
            btruth[blist[i]] = (mask >> (alist.size() + i)) & 1u;
        if (eval_formula(f, atruth, btruth) && oracle::fm_feasible(constraints, nvars))
            return true;
    }
    return false;
}

// Same ground truth for a clause set (used against clausify + the formula).
bool clauses_sat_oracle(const ClauseSet& cs) {
    if (cs.trivially_sat)
        return true;
    int n = cs.var_count();
    REQUIRE(n <= 20);
    int nvars = 0;
    for (const auto& vi : cs.vars)
        if (vi.kind == ClauseSet::VarKind::Atom)
            for (const auto& [v, c] : vi.atom.coeffs)
                nvars = std::max(nvars, v + 1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        auto value = [&](int lit) {
            bool v = (mask >> (std::abs(lit) - 1)) & 1u;
            return lit > 0 ? v : !v;
        };
        bool ok = true;
        for (const auto& clause : cs.clauses) {
            bool sat = false;
            for (int lit : clause)
                if (value(lit)) {
                    sat = true;
                    break;
                }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        std::vector<LinearAtom> constraints;
        for (int v = 1; v <= n; ++v) {
            const auto& vi = cs.info(v);
            if (vi.kind == ClauseSet::VarKind::Atom)
                constraints.push_back(value(v) ? vi.atom : complement(vi.atom));
        }
        if (oracle::fm_feasible(constraints, nvars))
            return true;
    }
    return false;
}

Polynomial example1_poly() {
    Polynomial f;
    f.dimension = 2;
    f.terms[{0, 1}] = 1;
    f.terms[{1, 3}] = 2;
    f.terms[{2, 2}] = -3;
    f.terms[{3, 0}] = -1;
    f.terms[{4, 4}] = -4;
    return f;
}

std::set<ExponentVector> frame_of(const Polynomial& f) {
    std::set<ExponentVector> out;
    for (const auto& [e, c] : f.terms)
        out.insert(e);
    return out;
}

} // namespace

TEST_CASE("encode_phi: (1,3) is a vertex of example 1's frame") {
    Unknowns u = unknowns_for(2, 1);
    PropFormula phi = encode_phi({1, 3}, frame_of(example1_poly()), u, 0);
    REQUIRE(phi.kind == FKind::And);
    CHECK(phi.kids.size() == 5); // one > atom, one < atom per other frame point
    CHECK(formula_sat_oracle(phi));

    // stays feasible with n pinned to (-2, 3)
    std::map<std::string, LinearAtom> atoms;
    std::set<int> bools;
    collect_atoms(phi, atoms, bools);
    std::vector<LinearAtom> constraints;
    for (const auto& [k, a] : atoms)
        constraints.push_back(a);
    for (int i = 0; i < 2; ++i) {
        LinearAtom pin;
        pin.rel = Rel::Ge;
        pin.coeffs[i] = 1;
        pin.constant = i == 0 ? 2 : -3;
        constraints.push_back(pin);
        pin.rel = Rel::Le;
        constraints.push_back(pin);
    }
    CHECK(oracle::fm_feasible(constraints, 3));
}

TEST_CASE("encode_phi: (2,2) is not a vertex (interior point)") {
    Unknowns u = unknowns_for(2, 1);
    PropFormula phi = encode_phi({2, 2}, frame_of(example1_poly()), u, 0);
    CHECK(!formula_sat_oracle(phi));
}

TEST_CASE("encode_phi: singleton separation set") {
    Unknowns u = unknowns_for(1, 1);
    PropFormula phi = encode_phi({0}, {{0}}, u, 0);
    REQUIRE(phi.kind == FKind::Atom);
    CHECK(phi.atom.rel == Rel::Gt);
    CHECK(phi.atom.coeffs.size() == 1); // just c > 0
    CHECK(phi.atom.coeffs.count(u.c[0]) == 1);
}

TEST_CASE("encode_phi agrees with vertex_oracle on random frames") {
    std::mt19937 rng(31);
    Unknowns u = unknowns_for(3, 1);
    for (int round = 0; round < 300; ++round) {
        Polynomial f = oracle::random_poly(rng, 3, 5, 5);
        auto frame = frame_of(f);
        for (const auto& p : frame) {
            PropFormula phi = encode_phi(p, frame, u, 0);
            CHECK(formula_sat_oracle(phi) == oracle::vertex_oracle(p, frame));
        }
    }
}

TEST_CASE("encode_psi: example 3 shapes") {
    Polynomial f1, f2;
    f1.dimension = 3;
    f1.terms[{0, 0, 0}] = -12;
    f1.terms[{12, 25, 49}] = 2;
    f1.terms[{13, 22, 110}] = -31;
    f1.terms[{1000, 500, 89}] = -11;
    f2.dimension = 3;
    f2.terms[{0, 0, 0}] = -23;
    f2.terms[{1, 22, 110}] = 5;
    f2.terms[{15, 20, 1000}] = -21;
    f2.terms[{100, 2, 49}] = 2;

    Unknowns u = unknowns_for(3, 2);
    PropFormula psi1 = encode_psi(signed_frame(f1), u, 0);
    // single positive point: conjunction of 4 atoms, no disjunction survives
    REQUIRE(psi1.kind == FKind::And);
    CHECK(psi1.kids.size() == 4);

    PropFormula psi2 = encode_psi(signed_frame(f2), u, 1);
    REQUIRE(psi2.kind == FKind::And);
    REQUIRE(psi2.kids.front().kind == FKind::Or);
    CHECK(psi2.kids.front().kids.size() == 2);
    CHECK(psi2.kids.size() == 3); // disjunction + two < atoms

    // the known-good rational model satisfies every psi atom exactly
    std::map<int, Rational> model{
        {0, Rational(-238834, 120461)}, {1, Rational(2672460, 1325071)},
        {2, Rational(-368561, 1325071)}, {3, Rational(-1)}, {4, Rational(-1)},
    };
    std::map<std::string, LinearAtom> atoms;
    std::set<int> bools;
    collect_atoms(psi1, atoms, bools);
    for (const auto& [k, a] : atoms)
        CHECK(atom_holds(a, model));
    // psi2: both negative-frame atoms must hold, and some positive disjunct
    CHECK(atom_holds(psi2.kids[1].atom, model));
    CHECK(atom_holds(psi2.kids[2].atom, model));
    bool some_positive = false;
    for (const auto& d : psi2.kids.front().kids)
        some_positive = some_positive || atom_holds(d.atom, model);
    CHECK(some_positive);
}

TEST_CASE("encode_psi: empty positive frame is constant false") {
    Polynomial f;
    f.dimension = 1;
    f.terms[{2}] = -1;
    Unknowns u = unknowns_for(1, 1);
    CHECK(encode_psi(signed_frame(f), u, 0).kind == FKind::False);
}

TEST_CASE("Lemma 4 property: psi feasible iff some positive frame point is a vertex") {
    std::mt19937 rng(20240607);
    Unknowns u = unknowns_for(3, 1);
    int positive_cases = 0;
    for (int round = 0; round < 500; ++round) {
        Polynomial f = oracle::random_poly(rng, 3, 5, 4);
        SignedFrame sf = signed_frame(f);
        PropFormula psi = encode_psi(sf, u, 0);
        bool psi_sat = psi.kind == FKind::False ? false : formula_sat_oracle(psi);

        std::set<ExponentVector> frame = frame_of(f);
        bool expected = false;
        for (const auto& p : sf.positive)
            expected = expected || oracle::vertex_oracle(p, frame);
        REQUIRE(psi_sat == expected);
        if (expected)
            ++positive_cases;
    }
    CHECK(positive_cases > 100);
    CHECK(positive_cases < 500);
}

TEST_CASE("encode_theta parity") {
    SignVars sv;
    sv.b = {0, 1, 2};
    CHECK(encode_theta({2, 4, 0}, sv).kind == FKind::False);

    PropFormula t = encode_theta({1, 0, 3}, sv);
    REQUIRE(t.kind == FKind::Xor);
    CHECK(t.kids.size() == 2); // b_0 xor b_2

    // two flips cancel on p=(1,1)
    SignVars sv2;
    sv2.b = {0, 1};
    PropFormula t2 = encode_theta({1, 1}, sv2);
    CHECK(!eval_formula(t2, {}, {{0, true}, {1, true}}));
    CHECK(eval_formula(t2, {}, {{0, true}, {1, false}}));
}

TEST_CASE("encode_Theta partial evaluation") {
    SignVars sv;
    sv.b = {0, 1};
    Polynomial f;
    f.dimension = 2;
    f.terms[{2, 2}] = 5;
    f.terms[{1, 0}] = -1;
    CHECK(encode_Theta({2, 2}, f, sv).kind == FKind::True); // positive, all even
    PropFormula th = encode_Theta({1, 0}, f, sv);
    REQUIRE(th.kind == FKind::BoolVar); // negative coefficient: theta itself
    CHECK(th.bool_var == 0);
    CHECK_THROWS_AS(encode_Theta({9, 9}, f, sv), UsageError);

    // Example 1's (2,2) term under tau flipping x: stays negative
    Polynomial e1 = example1_poly();
    PropFormula t22 = encode_Theta({2, 2}, e1, sv);
    CHECK(!eval_formula(t22, {}, {{0, true}, {1, false}}));
}

TEST_CASE("Theta-correctness against apply_sign_variant") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> coin(0, 1);
    SignVars sv;
    sv.b = {0, 1, 2};
    for (int round = 0; round < 300; ++round) {
        Polynomial f = oracle::random_poly(rng, 3, 5, 4);
        SignVariant tau;
        std::map<int, bool> btruth;
        for (int i = 0; i < 3; ++i) {
            tau.flips.push_back(coin(rng) == 1);
            btruth[i] = tau.flips.back();
        }
        SignedFrame tf = signed_frame(apply_sign_variant(f, tau));
        for (const auto& [p, c] : f.terms) {
            bool theta = eval_formula(encode_Theta(p, f, sv), {}, btruth);
            CHECK(theta == (tf.positive.count(p) == 1));
        }
    }
}

TEST_CASE("encode_Psi: single-variable examples") {
    Unknowns u = unknowns_for(1, 1);
    SignVars sv;
    sv.b = {0};

    Polynomial x;
    x.dimension = 1;
    x.terms[{1}] = 1;
    CHECK(formula_sat_oracle(encode_Psi({x}, u, sv)));

    Polynomial mx;
    mx.dimension = 1;
    mx.terms[{1}] = -1;
    // only tau flipping x makes the frame positive
    PropFormula Psi = encode_Psi({mx}, u, sv);
    CHECK(formula_sat_oracle(Psi));

    // under b=false the formula must be false: frame stays all-negative
    std::map<std::string, LinearAtom> atoms;
    std::set<int> bools;
    collect_atoms(Psi, atoms, bools);
    REQUIRE(bools == std::set<int>{0});
}

TEST_CASE("Psi collapse: sign variables forced false equals plain psi") {
    std::mt19937 rng(53);
    Unknowns u = unknowns_for(2, 2);
    SignVars sv;
    sv.b = {0, 1};
    for (int round = 0; round < 120; ++round) {
        std::vector<Polynomial> fs;
        for (int i = 0; i < 2; ++i)
            fs.push_back(oracle::random_poly(rng, 2, 3, 3));

        PropFormula Psi = encode_Psi(fs, u, sv);
        // force both sign vars false by conjoining their negations
        PropFormula pinned = PropFormula::conjunction(
            {Psi, PropFormula::negation(PropFormula::var(0)),
             PropFormula::negation(PropFormula::var(1))});

        std::vector<PropFormula> plain;
        for (std::size_t i = 0; i < fs.size(); ++i)
            plain.push_back(encode_psi(signed_frame(fs[i]), u, i));
        PropFormula conj = PropFormula::conjunction(std::move(plain));

        bool lhs = pinned.kind == FKind::False ? false : formula_sat_oracle(pinned);
        bool rhs = conj.kind == FKind::False ? false : formula_sat_oracle(conj);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exponent fidelity: atom coefficients are the exponents") {
    Polynomial f = example1_poly();
    Unknowns u = unknowns_for(2, 1);
    PropFormula phi = encode_phi({4, 4}, frame_of(f), u, 0);
    std::map<std::string, LinearAtom> atoms;
    std::set<int> bools;
    collect_atoms(phi, atoms, bools);
    bool found = false;
    for (const auto& [k, a] : atoms) {
        if (a.rel == Rel::Gt) {
            found = true;
            CHECK(a.coeffs.at(u.n[0]) == 4);
            CHECK(a.coeffs.at(u.n[1]) == 4);
            CHECK(a.coeffs.at(u.c[0]) == 1);
            CHECK(a.constant == 0);
        }
    }
    CHECK(found);
}

TEST_CASE("clausify: constants and flat conjunctions") {
    ClauseSet cs = clausify(PropFormula::constant(false));
    REQUIRE(cs.clauses.size() == 1);
    CHECK(cs.clauses.front().empty());

    CHECK(clausify(PropFormula::constant(true)).trivially_sat);

    // pure conjunction of atoms: unit clauses only
    LinearAtom a;
    a.coeffs[0] = 1;
    a.rel = Rel::Gt;
    LinearAtom b;
    b.coeffs[1] = 1;
    b.rel = Rel::Lt;
    ClauseSet units = clausify(
        PropFormula::conjunction({PropFormula::from_atom(a), PropFormula::from_atom(b)}));
    REQUIRE(units.clauses.size() == 2);
    for (const auto& clause : units.clauses)
        CHECK(clause.size() == 1);
    CHECK(units.var_count() == 2);
}

namespace {

PropFormula random_formula(std::mt19937& rng, int depth, const std::vector<LinearAtom>& pool) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
    switch (pick(rng)) {
    case 0:
        return PropFormula::from_atom(pool[std::uniform_int_distribution<std::size_t>(
            0, pool.size() - 1)(rng)]);
    case 1:
        return PropFormula::var(std::uniform_int_distribution<int>(0, 1)(rng));
    case 2:
        return PropFormula::negation(random_formula(rng, depth - 1, pool));
    default: {
        std::vector<PropFormula> kids;
        int n = std::uniform_int_distribution<int>(2, 3)(rng);
        for (int i = 0; i < n; ++i)
            kids.push_back(random_formula(rng, depth - 1, pool));
        int op = std::uniform_int_distribution<int>(0, 2)(rng);
        if (op == 0)
            return PropFormula::conjunction(std::move(kids));
        if (op == 1)
            return PropFormula::disjunction(std::move(kids));
        return PropFormula::exclusive_or(std::move(kids));
    }
    }
}

} // namespace

TEST_CASE("clausify equisatisfiability on random formulas") {
    std::mt19937 rng(20240611);
    std::vector<LinearAtom> pool;
    for (int i = 0; i < 3; ++i) {
        LinearAtom a;
        a.coeffs[0] = i + 1;
        a.coeffs[1] = -1;
        a.constant = Rational(i - 1);
        a.rel = i % 2 == 0 ? Rel::Gt : Rel::Lt;
        pool.push_back(a);
    }
    for (int round = 0; round < 200; ++round) {
        PropFormula f = random_formula(rng, 2, pool);
        ClauseSet cs = clausify(f);
        bool formula_sat =
            f.kind == FKind::True || (f.kind != FKind::False && formula_sat_oracle(f));
        CHECK(clauses_sat_oracle(cs) == formula_sat);
    }
}
