#include "stropsat/poly.hpp"

namespace stropsat {

Rational pow_int(const Rational& base, const Integer& exp) {
    if (sgn(exp) == 0)
        return Rational(1);
    Integer mag = abs(exp);
    if (!mag.fits_ulong_p())
        throw LimitError("exponent magnitude exceeds the representable range");
    Rational pos = pow_nat(base, mag.get_ui());
    if (sgn(exp) > 0)
        return pos;
    if (sgn(pos) == 0)
        throw UsageError("zero base with negative exponent");
    return 1 / pos;
}

Rational rational_from_decimal(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos)
        return Rational(text);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    Integer num(digits);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Rational evaluate(const Polynomial& f, const Point& x) {
    if (x.size() != f.dimension)
        throw UsageError("evaluation point dimension mismatch");
    Rational acc(0);
    for (const auto& [p, coeff] : f.terms) {
        Rational m = coeff;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0)
                m *= pow_nat(x[i], p[i]);
        acc += m;
    }
    return acc;
}

SignedFrame signed_frame(const Polynomial& f) {
    if (f.is_zero())
        throw UsageError("the zero polynomial has no frame");
    SignedFrame sf;
    for (const auto& [p, coeff] : f.terms) {
        if (sgn(coeff) > 0)
            sf.positive.insert(p);
        else
            sf.negative.insert(p);
    }
    return sf;
}

bool flips_sign(const ExponentVector& p, const SignVariant& tau) {
    bool flip = false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (tau.flips[i] && p[i] % 2 == 1)
            flip = !flip;
    return flip;
}

Polynomial apply_sign_variant(const Polynomial& f, const SignVariant& tau) {
    if (tau.flips.size() != f.dimension)
        throw UsageError("sign variant dimension mismatch");
    Polynomial out;
    out.dimension = f.dimension;
    for (const auto& [p, coeff] : f.terms)
        out.terms.emplace(p, flips_sign(p, tau) ? Rational(-coeff) : coeff);
    return out;
}

Polynomial negate(const Polynomial& f) {
    Polynomial out;
    out.dimension = f.dimension;
    for (const auto& [p, coeff] : f.terms)
        out.terms.emplace(p, Rational(-coeff));
    return out;
}

Integer dot(const std::vector<Integer>& n, const ExponentVector& p) {
    Integer acc(0);
    for (std::size_t i = 0; i < p.size(); ++i)
        acc += n[i] * static_cast<unsigned long>(p[i]);
    return acc;
}

} // namespace stropsat
