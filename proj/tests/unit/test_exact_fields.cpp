#include <doctest.h>

#include "rsb/order.hpp"
#include "rsb/parse.hpp"
#include "testkit.hpp"

using namespace rsb;
using testkit::Rng;

namespace {

const OrderSpec kOrders[] = {OrderSpec::at_plus(0), OrderSpec::at_minus(0), OrderSpec::at_plus(Rational(3, 2)),
                             OrderSpec::at_minus(-2), OrderSpec::plus_infinity(), OrderSpec::minus_infinity()};

// Sign by evaluation at a rational point close enough to the end of the order.
int sign_by_evaluation(const RatFunc& f, const OrderSpec& ord) {
    Rational t;
    const Rational tiny(1, 1000000);
    switch (ord.kind) {
        case OrderSpec::Kind::AtPlus: t = ord.anchor + tiny; break;
        case OrderSpec::Kind::AtMinus: t = ord.anchor - tiny; break;
        case OrderSpec::Kind::PlusInfinity: t = 1000000; break;
        case OrderSpec::Kind::MinusInfinity: t = -1000000; break;
    }
    return sgn(f.eval(t));
}

}  // namespace

TEST_CASE("parse_ratfunc canonical forms") {
    RatFunc x = parse_ratfunc("X");
    CHECK(x.num() == Poly::monomial(1, 1));
    CHECK(x.den() == Poly::constant(1));

    RatFunc t = parse_ratfunc("-256*X^2+320-16/X^2");
    CHECK(t.num() == Poly({-16, 0, 320, 0, -256}));
    CHECK(t.den() == Poly::monomial(1, 2));
    CHECK(to_string(t) == "(-256*X^4+320*X^2-16)/(X^2)");

    RatFunc c = parse_ratfunc("(X^2-1)/(X-1)");
    CHECK(c.num() == Poly({1, 1}));
    CHECK(c.den() == Poly::constant(1));

    CHECK(parse_ratfunc("2/4*X") == RatFunc(Rational(1, 2)) * RatFunc::x());
    CHECK(parse_ratfunc("-(X+1)^3") == -(RatFunc::x() + RatFunc(1)).pow(3));
    CHECK(parse_ratfunc("X^-2") == RatFunc::x().pow(-2));
}

TEST_CASE("parse_ratfunc errors") {
    CHECK_THROWS_AS(parse_ratfunc("X+"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("(X"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("X $ 2"), ParseError);
    CHECK_THROWS(parse_ratfunc("1/(X-X)"));
    try {
        parse_ratfunc("3*X*)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("format and parse round trip") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        RatFunc f = testkit::random_ratfunc(rng);
        RatFunc g = parse_ratfunc(to_string(f));
        CHECK(g == f);
        CHECK(to_string(g) == to_string(f));
    }
}

TEST_CASE("polynomial gcd against plain Euclid") {
    Rng rng(12);
    for (int i = 0; i < 150; ++i) {
        Poly common = testkit::random_poly(rng, 4, 40);
        Poly a = common * testkit::random_poly(rng, 6, 1000), b = common * testkit::random_poly(rng, 6, 1000);
        if (i % 4 == 0) a = a * Poly::monomial(Rational(1, 3), 2);
        Poly g = poly_gcd(a, b);
        CHECK(g == euclid_gcd(a, b));
        if (!common.is_zero() && !a.is_zero() && !b.is_zero()) CHECK(divmod(g, common.monic()).second.is_zero());
    }
    // Large coefficients force several primes.
    Poly big({parse_rational("123456789012345678901234567891/7"), Rational(-5, 3), 1});
    Poly a = big * Poly({Rational(2), Rational(1)}), b = big * Poly({Rational(-9, 11), Rational(4)});
    CHECK(poly_gcd(a, b) == big);
    CHECK(poly_gcd(Poly(), b) == b.monic());
}

TEST_CASE("field axioms on random samples") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        RatFunc a = testkit::random_ratfunc(rng), b = testkit::random_ratfunc(rng), c = testkit::random_ratfunc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == RatFunc());
        if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
        // Evaluation is a ring homomorphism where defined.
        const Rational t(7, 3);
        if (sgn(a.den().eval(t)) != 0 && sgn(b.den().eval(t)) != 0) {
            CHECK((a * b).eval(t) == a.eval(t) * b.eval(t));
            CHECK((a + b).eval(t) == a.eval(t) + b.eval(t));
        }
    }
}

TEST_CASE("sign examples") {
    const RatFunc x = RatFunc::x();
    for (Rational a : {Rational(0), Rational(2), Rational(-1, 3)}) {
        RatFunc big = (x - RatFunc(a)).inverse();
        CHECK(sign(big, OrderSpec::at_plus(a)) == 1);
        CHECK(sign(big, OrderSpec::at_minus(a)) == -1);
        for (Rational r : {Rational(1), Rational(1000), Rational("1000000000000000000000")})
            CHECK(compare(big, RatFunc(r), OrderSpec::at_plus(a)) == Ordering::GT);
    }
    for (const auto& ord : kOrders) CHECK(sign(RatFunc(), ord) == 0);
    CHECK(sign(parse_ratfunc("-X^2+3"), OrderSpec::plus_infinity()) == -1);
    CHECK(sign(parse_ratfunc("-X^2+3"), OrderSpec::plus_infinity()) ==
          sign_by_evaluation(parse_ratfunc("-X^2+3"), OrderSpec::plus_infinity()));
    CHECK(sign(parse_ratfunc("X^3"), OrderSpec::minus_infinity()) == -1);
    CHECK(sign(parse_ratfunc("(X-1)^2*(X-2)"), OrderSpec::at_minus(1)) == -1);
    CHECK(sign(parse_ratfunc("(X-1)^3"), OrderSpec::at_minus(1)) == -1);
}

TEST_CASE("compare examples") {
    const RatFunc x = RatFunc::x();
    CHECK(compare(x, x, OrderSpec::at_plus(0)) == Ordering::EQ);
    CHECK(compare(x.inverse(), RatFunc(Rational(Integer("1" + std::string(100, '0')))), OrderSpec::at_plus(0)) ==
          Ordering::GT);
    CHECK(compare(x, x * x, OrderSpec::at_plus(0)) == Ordering::GT);
    CHECK(sign_by_evaluation(x - x * x, OrderSpec::at_plus(0)) == 1);
}

TEST_CASE("sign agrees with evaluation near the end of each order") {
    Rng rng(13);
    for (const auto& ord : kOrders) {
        for (int i = 0; i < 200; ++i) {
            // Small integer coefficients keep the first factor dominant at the sample point.
            RatFunc f = testkit::random_ratfunc(rng, 2);
            CHECK(sign(f, ord) == sign_by_evaluation(f, ord));
        }
    }
}

TEST_CASE("orders are compatible with the field operations") {
    Rng rng(14);
    for (const auto& ord : kOrders) {
        for (int i = 0; i < 150; ++i) {
            RatFunc f = testkit::random_ratfunc(rng), g = testkit::random_ratfunc(rng);
            int sf = sign(f, ord), sg = sign(g, ord);
            CHECK(sign(f * f, ord) >= 0);
            CHECK(sign(-f, ord) == -sf);
            CHECK(sign(f * g, ord) == sf * sg);
            if (sf > 0 && sg > 0) CHECK(sign(f + g, ord) == 1);
            // Trichotomy and transitivity through a third element.
            RatFunc h = testkit::random_ratfunc(rng);
            if (compare(f, g, ord) == Ordering::LT && compare(g, h, ord) == Ordering::LT)
                CHECK(compare(f, h, ord) == Ordering::LT);
        }
    }
}

TEST_CASE("order and valuation text forms") {
    CHECK(parse_order("aplus:0") == OrderSpec::at_plus(0));
    CHECK(parse_order("aminus:-3/2") == OrderSpec::at_minus(Rational(-3, 2)));
    CHECK(parse_order("plusinf") == OrderSpec::plus_infinity());
    CHECK(parse_order("minusinf") == OrderSpec::minus_infinity());
    CHECK(to_string(OrderSpec::at_plus(Rational(1, 2))) == "aplus:1/2");
    CHECK_THROWS(parse_order("aplus"));
    CHECK_THROWS(parse_order("sideways"));
}
