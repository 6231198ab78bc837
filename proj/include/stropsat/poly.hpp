#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "stropsat/rational.hpp"

namespace stropsat {

// Exponent vector of one monomial; entries are naturals, length = dimension.
using ExponentVector = std::vector<unsigned>;

// Evaluation point, one rational per variable.
using Point = std::vector<Rational>;

// Sparse distributive representation: exponent vector -> nonzero coefficient.
struct Polynomial {
    std::size_t dimension = 0;
    std::map<ExponentVector, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first == ExponentVector(dimension, 0));
    }
};

// frame(f) split by coefficient sign.
struct SignedFrame {
    std::set<ExponentVector> positive;
    std::set<ExponentVector> negative;
};

// Per-variable choice between x and -x; flips[i] means variable i is negated.
struct SignVariant {
    std::vector<bool> flips;
};

Rational evaluate(const Polynomial& f, const Point& x);

// Partition of frame(f) by coefficient sign; rejects the zero polynomial.
SignedFrame signed_frame(const Polynomial& f);

// Substitute tau into f. Exponent vectors are unchanged; the coefficient of p
// is negated iff an odd number of flipped variables have odd exponent in p.
Polynomial apply_sign_variant(const Polynomial& f, const SignVariant& tau);

Polynomial negate(const Polynomial& f);

// True iff the monomial at p changes sign under tau.
bool flips_sign(const ExponentVector& p, const SignVariant& tau);

// n^T p computed exactly.
Integer dot(const std::vector<Integer>& n, const ExponentVector& p);

} // namespace stropsat
