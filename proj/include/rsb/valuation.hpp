#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsb/order.hpp"
#include "rsb/polynomial.hpp"
#include "rsb/ratfunc.hpp"

namespace rsb {

/// A discrete valuation on Q(X) with value group Z: the (X - a)-adic one, or
/// the degree valuation with nu(X) = -1.
struct ValuationSpec {
    enum class Kind { Adic, AtInfinity };

    Kind kind = Kind::Adic;
    Rational anchor = 0;

    static ValuationSpec adic(Rational a) { return {Kind::Adic, std::move(a)}; }
    static ValuationSpec at_infinity() { return {Kind::AtInfinity, 0}; }

    friend bool operator==(const ValuationSpec& a, const ValuationSpec& b) {
        return a.kind == b.kind && (a.kind != Kind::Adic || a.anchor == b.anchor);
    }
};

/// "adic:A" or "atinf".
ValuationSpec parse_valuation(std::string_view text);
std::string to_string(const ValuationSpec& val);

/// The valuation compatible with an order: a± pairs with (X - a)-adic,
/// ±infinity with the degree valuation.
ValuationSpec canonical_valuation(const OrderSpec& ord);

/// Element of Q ∪ {∞}. Infinity is the valuation of zero only.
class Value {
public:
    Value() = default;  // infinity
    Value(Rational v) : v_(std::move(v)) {}  // NOLINT
    static Value infinity() { return {}; }

    bool is_infinite() const { return !v_.has_value(); }
    const Rational& finite() const;

    friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
    friend bool operator<(const Value& a, const Value& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return *a.v_ < *b.v_;
    }
    friend bool operator<=(const Value& a, const Value& b) { return !(b < a); }
    friend bool operator>(const Value& a, const Value& b) { return b < a; }
    friend bool operator>=(const Value& a, const Value& b) { return !(a < b); }
    friend Value operator+(const Value& a, const Value& b) {
        if (a.is_infinite() || b.is_infinite()) return {};
        return Value(*a.v_ + *b.v_);
    }

private:
    std::optional<Rational> v_;
};

std::string to_string(const Value& v);

Value nu(const RatFunc& f, const ValuationSpec& val);
/// Constants are units for both valuations.
inline Value nu(const Rational& q, const ValuationSpec&) { return sgn(q) == 0 ? Value() : Value(Rational(0)); }

struct CompatibilityReport {
    bool compatible = true;
    std::size_t pairs_checked = 0;
    /// First violating pair (x, y) with 0 < x <= y but nu(x) < nu(y).
    std::optional<std::pair<RatFunc, RatFunc>> witness;
};

/// Checks 0 < x <= y (in ord) => nu(x) >= nu(y) on all ordered sample pairs.
CompatibilityReport check_order_compatibility(const OrderSpec& ord, const ValuationSpec& val,
                                              const std::vector<RatFunc>& samples);

/// Root valuations of a polynomial read off its Newton polygon.
struct NewtonPolygonResult {
    struct Segment {
        Value root_valuation;
        int multiplicity = 0;
    };
    /// Nondecreasing in root_valuation; zero roots (valuation ∞) come last.
    std::vector<Segment> segments;

    int total_multiplicity() const;
    /// Every root valuation, repeated by multiplicity, nondecreasing.
    std::vector<Value> expanded() const;
};

/// Lower convex hull of (i, nu(c_i)); a hull edge of width m and slope s
/// contributes m roots of valuation -s. Throws on the zero polynomial.
template <class K>
NewtonPolygonResult newton_polygon(const Polynomial<K>& p, const ValuationSpec& val);

/// Same, from precomputed points (index, value) of the nonzero coefficients.
NewtonPolygonResult newton_polygon_from_points(const std::vector<std::pair<int, Rational>>& points, int degree,
                                               int zero_root_count);

template <class K>
NewtonPolygonResult newton_polygon(const Polynomial<K>& p, const ValuationSpec& val) {
    if (p.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
    int low = p.low_degree();
    std::vector<std::pair<int, Rational>> pts;
    for (int i = low; i <= p.degree(); ++i) {
        Value v = nu(p.coeffs()[static_cast<std::size_t>(i)], val);
        if (!v.is_infinite()) pts.emplace_back(i - low, v.finite());
    }
    return newton_polygon_from_points(pts, p.degree() - low, low);
}

}  // namespace rsb
