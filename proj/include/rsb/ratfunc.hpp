#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "rsb/polynomial.hpp"
#include "rsb/rational.hpp"

namespace rsb {

/// Element of Q(X) kept in canonical form: gcd(num, den) = 1 and den monic.
/// Two RatFuncs are equal iff their representations are identical.
class RatFunc {
public:
    RatFunc() : den_(Poly::constant(1)) {}
    RatFunc(long v) : num_(Poly::constant(Rational(v))), den_(Poly::constant(1)) {}  // NOLINT
    RatFunc(int v) : RatFunc(static_cast<long>(v)) {}                                 // NOLINT
    RatFunc(const Rational& v) : num_(Poly::constant(v)), den_(Poly::constant(1)) {}  // NOLINT
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}
    /// Reduces num/den to canonical form. Throws std::domain_error if den == 0.
    RatFunc(Poly num, Poly den);

    static RatFunc x();

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    /// max(deg num, deg den); 0 for constants.
    int degree() const;

    Rational constant_value() const;

    RatFunc inverse() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;

    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(long e) const;

    /// Value at a rational point; throws std::domain_error at a pole.
    Rational eval(const Rational& t) const;

    /// f(X + shift), used to move an anchor point to the origin.
    RatFunc shifted(const Rational& shift) const;
    /// f(1/X).
    RatFunc reciprocal_argument() const;

private:
    struct Canonical {};
    RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

/// Monic gcd over Q with shortcuts for constants and monomials.
Poly poly_gcd(const Poly& a, const Poly& b);

/// p(X + shift).
Poly taylor_shift(const Poly& p, const Rational& shift);

/// Canonical display form: "p(X)" when den = 1, else "(p(X))/(q(X))".
std::string to_string(const RatFunc& f);
std::string to_string(const Poly& p);

std::size_t hash_value(const RatFunc& f);

}  // namespace rsb

template <>
struct std::hash<rsb::RatFunc> {
    std::size_t operator()(const rsb::RatFunc& f) const { return rsb::hash_value(f); }
};
