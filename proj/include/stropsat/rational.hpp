#pragma once

#include <gmpxx.h>

#include <string>

#include "stropsat/errors.hpp"

namespace stropsat {

// Exact arbitrary-precision arithmetic, backed by GMP. mpq_class keeps values
// canonical (lowest terms, positive denominator) across all operations.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

// base^exp for a natural-number exponent.
inline Rational pow_nat(const Rational& base, unsigned long exp) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
    // num/den stays coprime with positive den when base is canonical.
    return Rational(num, den);
}

// base^exp for a (possibly negative, possibly huge) integer exponent.
Rational pow_int(const Rational& base, const Integer& exp);

// Exact rational from an SMT-LIB decimal numeral like "3.14" -> 157/50.
Rational rational_from_decimal(const std::string& text);

} // namespace stropsat
