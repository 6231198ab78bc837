#pragma once

#include "stropsat/rational.hpp"

namespace stropsat {

// r + k*delta for a positive infinitesimal delta. Lets a non-strict simplex
// express strict bounds: x > c becomes x >= c + delta.
struct DeltaRational {
    Rational standard;
    Rational delta;

    DeltaRational() : standard(0), delta(0) {}
    explicit DeltaRational(Rational s) : standard(std::move(s)), delta(0) {}
    DeltaRational(Rational s, Rational d) : standard(std::move(s)), delta(std::move(d)) {}

    DeltaRational operator+(const DeltaRational& o) const {
        return {standard + o.standard, delta + o.delta};
    }
    DeltaRational operator-(const DeltaRational& o) const {
        return {standard - o.standard, delta - o.delta};
    }
    DeltaRational operator*(const Rational& k) const { return {standard * k, delta * k}; }

    DeltaRational& operator+=(const DeltaRational& o) {
        standard += o.standard;
        delta += o.delta;
        return *this;
    }

    bool operator==(const DeltaRational& o) const {
        return standard == o.standard && delta == o.delta;
    }
    bool operator<(const DeltaRational& o) const {
        int c = cmp(standard, o.standard);
        return c < 0 || (c == 0 && delta < o.delta);
    }
    bool operator<=(const DeltaRational& o) const { return *this < o || *this == o; }
    bool operator>(const DeltaRational& o) const { return o < *this; }
    bool operator>=(const DeltaRational& o) const { return o <= *this; }

    // Concrete value once delta is instantiated.
    Rational at(const Rational& delta_value) const { return standard + delta * delta_value; }
};

} // namespace stropsat
