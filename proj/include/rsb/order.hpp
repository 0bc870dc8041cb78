#pragma once

#include <string>
#include <string_view>

#include "rsb/ratfunc.hpp"

namespace rsb {

/// One of the non-Archimedean orders on Q(X): infinitesimally to the left or
/// right of a rational anchor, or near plus/minus infinity.
struct OrderSpec {
    enum class Kind { AtMinus, AtPlus, MinusInfinity, PlusInfinity };

    Kind kind = Kind::AtPlus;
    Rational anchor = 0;  // meaningful for AtMinus/AtPlus only

    static OrderSpec at_minus(Rational a) { return {Kind::AtMinus, std::move(a)}; }
    static OrderSpec at_plus(Rational a) { return {Kind::AtPlus, std::move(a)}; }
    static OrderSpec minus_infinity() { return {Kind::MinusInfinity, 0}; }
    static OrderSpec plus_infinity() { return {Kind::PlusInfinity, 0}; }

    bool has_anchor() const { return kind == Kind::AtMinus || kind == Kind::AtPlus; }

    friend bool operator==(const OrderSpec& a, const OrderSpec& b) {
        return a.kind == b.kind && (!a.has_anchor() || a.anchor == b.anchor);
    }
};

/// "aplus:A", "aminus:A", "plusinf", "minusinf".
OrderSpec parse_order(std::string_view text);
std::string to_string(const OrderSpec& ord);

enum class Ordering { LT, EQ, GT };
std::string to_string(Ordering o);

/// Multiplicity of the root `a` in p (p nonzero) and the value of the cofactor at a.
std::pair<int, Rational> factor_at(const Poly& p, const Rational& a);

/// Sign of f in (Q(X), ord), decided exactly by factoring out (X - a).
int sign(const RatFunc& f, const OrderSpec& ord);

/// Sign of a constant; the order is irrelevant on Q.
inline int sign(const Rational& q, const OrderSpec&) { return sgn(q); }

template <class K>
Ordering compare(const K& f, const K& g, const OrderSpec& ord) {
    int s = sign(K(f - g), ord);
    return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

}  // namespace rsb
