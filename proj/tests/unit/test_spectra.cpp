#include <doctest.h>

#include <cmath>

#include "rsb/pants.hpp"
#include "rsb/roots.hpp"
#include "testkit.hpp"

using namespace rsb;
using testkit::Rng;

namespace {

using PK = Polynomial<RatFunc>;

std::vector<Rational> q(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Coefficients of X^4 * char poly, copied from a sympy computation.
PK from_coeffs(std::initializer_list<const char*> low_to_high) {
    std::vector<RatFunc> c;
    for (const char* s : low_to_high) c.push_back(parse_ratfunc(s));
    return PK(c);
}

MatrixK pants_word(const char* w) {
    static const RepTable rep = pants_representation(OrderSpec::at_plus(0), ValuationSpec::adic(0));
    return evaluate(rep, rep.presentation().parse_word(w));
}

}  // namespace

TEST_CASE("char_poly") {
    for (std::size_t n = 1; n <= 4; ++n) {
        PK expected = PK::constant(RatFunc(1));
        for (std::size_t i = 0; i < n; ++i) expected = expected * PK::linear_factor(RatFunc(1));
        CHECK(char_poly(MatrixK::identity(n)) == expected);
    }
    const RatFunc x = RatFunc::x();
    CHECK(char_poly(testkit::diag({x, x.inverse()})) == PK({RatFunc(1), -(x + x.inverse()), RatFunc(1)}));

    // sympy: charpoly of rho(c1^-1 c3) and rho(c1^-1 c3)^2.
    CHECK(char_poly(pants_word("c1^-1 c3")) ==
          from_coeffs({"1", "-64*X^2-20", "128*X^2+102+8/X^2", "-64*X^2-20", "1"}));
    PK sq = char_poly(pants_word("(c1^-1 c3)^2"));
    CHECK(sq == from_coeffs({"1", "-4096*X^4-2304*X^2-196+16/X^2",
                             "8192*X^4+20992*X^2+11654+1632/X^2+64/X^4", "-4096*X^4-2304*X^2-196+16/X^2",
                             "1"}));
    CHECK(-sq.coeff(3) == pants_word("(c1^-1 c3)^2").trace());
}

TEST_CASE("char_poly against evaluation of det(tI - A)") {
    // Over Q, det(t I - A) at integer t by exact elimination.
    Rng rng(41);
    for (int i = 0; i < 40; ++i) {
        std::size_t n = static_cast<std::size_t>(testkit::uniform(rng, 1, 5));
        MatrixQ a(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) a(r, c) = testkit::random_rational(rng, 4);
        auto p = char_poly(a);
        CHECK(p.degree() == static_cast<int>(n));
        for (long t = -3; t <= 3; ++t) CHECK(p.eval(Rational(t)) == determinant(Rational(t) * MatrixQ::identity(n) - a));
    }
}

TEST_CASE("symplectic char poly agrees with the general one") {
    Rng rng(42);
    for (int i = 0; i < 30; ++i) {
        std::size_t n = static_cast<std::size_t>(testkit::uniform(rng, 1, 3));
        MatrixK g = testkit::random_symplectic_k(rng, n) * testkit::random_symplectic_k(rng, n);
        CHECK(symplectic_char_poly(g) == char_poly(g));
    }
    CHECK(symplectic_char_poly(pants_word("c1 c2^-1 c3")) == char_poly(pants_word("c1 c2^-1 c3")));
}

TEST_CASE("jordan_valuation examples") {
    const RatFunc x = RatFunc::x();
    CHECK(jordan_valuation(testkit::diag({x, x.inverse()}), ValuationSpec::adic(0)).entries == q({1}));
    for (const auto& val : {ValuationSpec::adic(0), ValuationSpec::adic(1), ValuationSpec::at_infinity()}) {
        CHECK(jordan_valuation(pants_word("c1"), val).entries == q({0, 0}));
        CHECK(jordan_valuation(pants_word("c2"), val).entries == q({0, 0}));
    }
    auto j = jordan_valuation(pants_word("c1^-1 c3"), ValuationSpec::adic(0)).entries;
    CHECK(j[0] >= 1);
    CHECK(j == q({1, 1}));
    CHECK(jordan_valuation(pants_word("c1^-1 c3"), ValuationSpec::at_infinity()).entries == q({2, 0}));
    CHECK(jordan_valuation(pants_word("(c1^-1 c3)^2"), ValuationSpec::adic(0)).entries == q({2, 2}));
    auto lin = jordan_valuation(testkit::diag({x * x, x, x.pow(-2), x.inverse()}), ValuationSpec::at_infinity(),
                                SpectralMode::Linear);
    CHECK(lin.entries == q({2, 1, -1, -2}));
    MatrixK bad = testkit::diag({x, x, RatFunc(1), RatFunc(1)});
    CHECK_THROWS_AS(jordan_valuation(bad, ValuationSpec::adic(0)), SpectrumError);
    MatrixK singular(2, 2);
    singular(0, 0) = RatFunc(1);
    CHECK_THROWS_AS(jordan_valuation(singular, ValuationSpec::adic(0)), SpectrumError);
}

TEST_CASE("translation_length examples") {
    const RatFunc x = RatFunc::x();
    CHECK(translation_length(testkit::diag({x, x.inverse()}), ValuationSpec::adic(0)) == 1);
    for (const char* w : {"c1", "c2", "c3", "c1^3"})
        for (const auto& val : {ValuationSpec::adic(0), ValuationSpec::at_infinity()})
            CHECK(translation_length(pants_word(w), val) == 0);
    MatrixK d = testkit::diag({x * x, x, x.pow(-2), x.inverse()});
    CHECK(translation_length(d, ValuationSpec::at_infinity()) == 3);
    CHECK(translation_length(d, ValuationSpec::at_infinity(), NormChoice::SpreadMax) == 4);
    CHECK(symplectic_translation_length(d, ValuationSpec::at_infinity()) == 3);
    CHECK(translation_length(d, ValuationSpec::at_infinity(), NormChoice::SpreadMax, SpectralMode::Linear) == 4);
    CHECK_THROWS_AS(translation_length(d, ValuationSpec::at_infinity(), NormChoice::SymplecticSum, SpectralMode::Linear),
                    SpectrumError);
    CHECK(parse_norm("sum") == NormChoice::SymplecticSum);
    CHECK(parse_norm("spread") == NormChoice::SpreadMax);
    CHECK_THROWS(parse_norm("max"));
}

TEST_CASE("translation length is a class function and homogeneous") {
    Rng rng(43);
    const RatFunc x = RatFunc::x();
    for (int i = 0; i < 25; ++i) {
        std::size_t n = static_cast<std::size_t>(testkit::uniform(rng, 1, 2));
        std::vector<RatFunc> t(2 * n);
        for (std::size_t k = 0; k < n; ++k) {
            t[k] = RatFunc(testkit::random_positive_rational(rng)) * x.pow(testkit::uniform(rng, -3, 3));
            t[n + k] = t[k].inverse();
        }
        MatrixK h = testkit::random_symplectic_k(rng, n);
        MatrixK g = h * testkit::diag(t) * inverse(h);
        for (const auto& val : {ValuationSpec::adic(0), ValuationSpec::at_infinity()}) {
            Rational base = translation_length(testkit::diag(t), val);
            CHECK(translation_length(g, val) == base);
            MatrixK c = testkit::random_symplectic_k(rng, n);
            CHECK(translation_length(c * g * inverse(c), val) == base);
            for (long k = 2; k <= 4; ++k) CHECK(translation_length(g.pow(k), val) == k * base);
        }
    }
}

TEST_CASE("jordan vectors against numeric eigenvalues") {
    // Random pants words at Adic(0); the numeric estimate extrapolates the
    // log-magnitudes at X = 1e-6 and 1e-12 to cancel constant factors.
    static const RepTable rep = pants_representation(OrderSpec::at_plus(0), ValuationSpec::adic(0));
    auto words = enumerate_words(3, 4);
    Rng rng(44);
    for (int i = 0; i < 40; ++i) {
        const Word& w = words[static_cast<std::size_t>(testkit::uniform(rng, 1, static_cast<long>(words.size()) - 1))];
        MatrixK m = evaluate(rep, w);
        auto exact = jordan_valuation(m, rep.valuation(), SpectralMode::Linear).entries;
        auto num = testkit::extrapolated_log_magnitudes(m);
        for (std::size_t k = 0; k < exact.size(); ++k)
            CHECK(std::fabs(num[k] - exact[k].get_d()) < 0.02L);
    }
}

TEST_CASE("building pseudodistance") {
    const RatFunc x = RatFunc::x();
    MatrixK id = MatrixK::identity(2);
    MatrixK d = testkit::diag({x, x.inverse()});
    CHECK(building_pseudodistance(d, d, ValuationSpec::adic(0)) == 0);
    // h^T h = diag(X^2, X^-2): slopes {-2, 2}, halved to {-1, 1}.
    CHECK(building_pseudodistance(id, d, ValuationSpec::adic(0)) == 1);
    CHECK(building_pseudodistance(id, d, ValuationSpec::adic(0), NormChoice::SpreadMax) == 2);
    Rng rng(45);
    for (int i = 0; i < 20; ++i) {
        std::size_t n = static_cast<std::size_t>(testkit::uniform(rng, 1, 2));
        MatrixK a = testkit::random_symplectic_k(rng, n), b = testkit::random_symplectic_k(rng, n),
                c = testkit::random_symplectic_k(rng, n), k = testkit::random_symplectic_k(rng, n);
        for (const auto& val : {ValuationSpec::adic(0), ValuationSpec::at_infinity()}) {
            Rational ab = building_pseudodistance(a, b, val);
            CHECK(ab >= 0);
            CHECK(ab == building_pseudodistance(b, a, val));
            CHECK(ab == building_pseudodistance(k * a, k * b, val));
            CHECK(building_pseudodistance(a, c, val) <= ab + building_pseudodistance(b, c, val));
        }
    }
    CHECK_THROWS_AS(building_pseudodistance(id, MatrixK::identity(4), ValuationSpec::adic(0)), DimensionError);
}

TEST_CASE("rational function roots") {
    const RatFunc x = RatFunc::x();
    PK p = PK::linear_factor(x) * PK::linear_factor(x.inverse()) *
           PK::linear_factor(parse_ratfunc("(X+1)/(X-3)")) * PK::linear_factor(RatFunc(Rational(-2, 5)));
    auto r = rational_function_roots(p);
    CHECK(r.complete);
    CHECK(r.roots.size() == 4);
    for (const auto& s : r.roots) CHECK(is_zero(p.eval(s.value)));

    PK irreducible({-x, RatFunc(0), RatFunc(1)});  // T^2 - X
    auto ir = rational_function_roots(irreducible);
    CHECK_FALSE(ir.complete);
    CHECK(ir.roots.empty());

    PK doubled = PK::linear_factor(x) * PK::linear_factor(x) * PK::linear_factor(RatFunc(3));
    auto dr = rational_function_roots(doubled);
    CHECK(dr.complete);
    REQUIRE(dr.roots.size() == 2);
}

TEST_CASE("attracting and repelling Lagrangians") {
    const RatFunc x = RatFunc::x();
    const OrderSpec ord = OrderSpec::at_plus(0);
    // Least valuation at Adic(0) is nu(1/X) = -1: the eigenline of 1/X.
    auto l = attracting_lagrangian(testkit::diag({x, x.inverse()}), ValuationSpec::adic(0));
    CHECK(l == LagrangianK::vertical(1));
    CHECK(repelling_lagrangian(testkit::diag({x, x.inverse()}), ValuationSpec::adic(0)) == LagrangianK::horizontal(1));
    MatrixK d = testkit::diag({x * x, x, x.pow(-2), x.inverse()});
    CHECK(attracting_lagrangian(d, ValuationSpec::at_infinity()) == LagrangianK::horizontal(2));

    // char poly (T - X)(T - 1/X)(T - 2X)(T - 1/(2X)), conjugated by a random symplectic k.
    Rng rng(46);
    for (int i = 0; i < 5; ++i) {
        MatrixK k = testkit::random_symplectic_k(rng, 2);
        MatrixK g = k * testkit::diag({x, RatFunc(2) * x, x.inverse(), (RatFunc(2) * x).inverse()}) * inverse(k);
        auto a = attracting_lagrangian(g, ValuationSpec::adic(0));
        auto r = repelling_lagrangian(g, ValuationSpec::adic(0));
        CHECK(a == LagrangianK::vertical(2).transformed(k));
        CHECK(r == LagrangianK::horizontal(2).transformed(k));
        CHECK(transverse(a, r));
        CHECK(a.transformed(g) == a);
        CHECK(maslov(r, LagrangianK::graph(MatrixK::identity(2)).transformed(k), a, ord) == 2);
    }

    try {
        attracting_lagrangian(testkit::diag({x, RatFunc(1), x.inverse(), RatFunc(1)}), ValuationSpec::adic(0));
        FAIL("expected a slope tie");
    } catch (const RootError& e) {
        CHECK(e.kind() == RootError::Kind::SlopeTie);
    }
    // Eigenvalues 1 +- sqrt(X): T^2 - 2T + 1 - X is irreducible over Q(X).
    MatrixK rot{{RatFunc(1), x}, {RatFunc(1), RatFunc(1)}};
    try {
        attracting_lagrangian(rot, ValuationSpec::at_infinity());
        FAIL("expected a non-split polynomial");
    } catch (const RootError& e) {
        CHECK(e.kind() == RootError::Kind::NotSplit);
    }
}
