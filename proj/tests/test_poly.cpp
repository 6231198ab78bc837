#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stropsat/poly.hpp"
#include "support/oracles.hpp"

using namespace stropsat;

namespace {

// f = y + 2xy^3 - 3x^2y^2 - x^3 - 4x^4y^4
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

} // namespace

TEST_CASE("evaluate: example 1 at (1/4, 8)") {
    // By hand: 8 + 256 - 12 - 1/64 - 64 = 188 - 1/64 = 12031/64.
    Polynomial f = example1_poly();
    Point x{Rational(1, 4), Rational(8)};
    CHECK(evaluate(f, x) == Rational(12031, 64));
}

TEST_CASE("evaluate: all-ones point sums the coefficients") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = oracle::random_poly(rng, 3, 5, 6);
        Rational sum(0);
        for (const auto& [e, c] : f.terms)
            sum += c;
        CHECK(evaluate(f, Point(3, Rational(1))) == sum);
    }
}

TEST_CASE("evaluate: hand-expanded 3-variable case") {
    Polynomial f;
    f.dimension = 3;
    f.terms[{0, 0, 0}] = 2;
    f.terms[{1, 2, 1}] = -1;
    f.terms[{2, 1, 3}] = 1;
    // 2 - (1/2)(1/4)(1/2) + (1/4)(1/2)(1/8) = 2 - 1/16 + 1/64 = 125/64
    Point half(3, Rational(1, 2));
    CHECK(evaluate(f, half) == Rational(125, 64));
}

TEST_CASE("evaluate: zeros and negatives are legal points") {
    Polynomial f = example1_poly();
    CHECK(evaluate(f, Point{Rational(0), Rational(0)}) == 0);
    CHECK(evaluate(f, Point{Rational(-1), Rational(-1)}) == Rational(-1 + 2 - 3 + 1 - 4));
}

TEST_CASE("evaluate: dimension mismatch throws") {
    Polynomial f = example1_poly();
    CHECK_THROWS_AS(evaluate(f, Point{Rational(1)}), UsageError);
}

TEST_CASE("signed_frame: example 1 partition") {
    SignedFrame sf = signed_frame(example1_poly());
    CHECK(sf.positive == std::set<ExponentVector>{{0, 1}, {1, 3}});
    CHECK(sf.negative == std::set<ExponentVector>{{2, 2}, {3, 0}, {4, 4}});
}

TEST_CASE("signed_frame: single monomial and constants") {
    Polynomial x1;
    x1.dimension = 1;
    x1.terms[{1}] = 1;
    SignedFrame sf = signed_frame(x1);
    CHECK(sf.positive == std::set<ExponentVector>{{1}});
    CHECK(sf.negative.empty());

    Polynomial c;
    c.dimension = 1;
    c.terms[{0}] = -5;
    sf = signed_frame(c);
    CHECK(sf.positive.empty());
    CHECK(sf.negative == std::set<ExponentVector>{{0}});

    Polynomial zero;
    zero.dimension = 1;
    CHECK_THROWS_AS(signed_frame(zero), UsageError);
}

TEST_CASE("signed_frame: partition is exhaustive and disjoint") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = oracle::random_poly(rng, 2, 5, 5);
        SignedFrame sf = signed_frame(f);
        CHECK(sf.positive.size() + sf.negative.size() == f.terms.size());
        for (const auto& p : sf.positive) {
            CHECK(sgn(f.terms.at(p)) > 0);
            CHECK(sf.negative.count(p) == 0);
        }
        for (const auto& q : sf.negative)
            CHECK(sgn(f.terms.at(q)) < 0);
    }
}

TEST_CASE("apply_sign_variant: simple flips") {
    Polynomial f;
    f.dimension = 2;
    f.terms[{1, 0}] = 1;
    f.terms[{0, 1}] = -1; // x - y
    SignVariant tau;
    tau.flips = {false, true};
    Polynomial g = apply_sign_variant(f, tau);
    CHECK(g.terms.at({1, 0}) == 1);
    CHECK(g.terms.at({0, 1}) == 1); // x + y

    Polynomial h;
    h.dimension = 2;
    h.terms[{2, 1}] = 1; // x^2 y, flip x: even exponent, unchanged
    tau.flips = {true, false};
    CHECK(apply_sign_variant(h, tau).terms.at({2, 1}) == 1);
}

TEST_CASE("apply_sign_variant: example 1 under x-flip") {
    SignVariant tau;
    tau.flips = {true, false};
    Polynomial g = apply_sign_variant(example1_poly(), tau);
    CHECK(g.terms.at({0, 1}) == 1);
    CHECK(g.terms.at({1, 3}) == -2);
    CHECK(g.terms.at({2, 2}) == -3);
    CHECK(g.terms.at({3, 0}) == 1);
    CHECK(g.terms.at({4, 4}) == -4);
}

TEST_CASE("apply_sign_variant: substitution identity") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int i = 0; i < 200; ++i) {
        Polynomial f = oracle::random_poly(rng, 3, 5, 4);
        SignVariant tau;
        Point x;
        for (int j = 0; j < 3; ++j) {
            tau.flips.push_back(coin(rng) == 1);
            x.push_back(Rational(num(rng), 1 + std::abs(num(rng)) % 3 + 1));
        }
        Point tx = x;
        for (int j = 0; j < 3; ++j)
            if (tau.flips[static_cast<std::size_t>(j)])
                tx[static_cast<std::size_t>(j)] = -tx[static_cast<std::size_t>(j)];
        CHECK(evaluate(apply_sign_variant(f, tau), x) == evaluate(f, tx));
    }
}

TEST_CASE("negate flips every coefficient, keeps the frame") {
    Polynomial f = example1_poly();
    Polynomial g = negate(f);
    CHECK(g.terms.size() == f.terms.size());
    for (const auto& [e, c] : f.terms)
        CHECK(g.terms.at(e) == -c);

    Polynomial zero;
    zero.dimension = 2;
    CHECK(negate(zero).terms.empty());
}

TEST_CASE("rationals stay in lowest terms with positive denominators") {
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = oracle::random_poly(rng, 2, 4, 4);
        Rational v = evaluate(f, Point{Rational(-3, 7), Rational(5, 6)});
        CHECK(v.get_den() > 0);
        if (v != 0)
            CHECK(gcd(Integer(v.get_num()), Integer(v.get_den())) == 1);
    }
}

TEST_CASE("pow_int: negative exponents and identities") {
    CHECK(pow_int(Rational(2), Integer(-2)) == Rational(1, 4));
    CHECK(pow_int(Rational(2, 3), Integer(3)) == Rational(8, 27));
    CHECK(pow_int(Rational(5), Integer(0)) == 1);
}

TEST_CASE("rational_from_decimal is exact") {
    CHECK(rational_from_decimal("0.1") == Rational(1, 10));
    CHECK(rational_from_decimal("12.25") == Rational(49, 4));
    CHECK(rational_from_decimal("3.0") == 3);
}
