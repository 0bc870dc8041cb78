#include "rsb/valuation.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsb {

ValuationSpec parse_valuation(std::string_view text) {
    std::string s(text);
    if (s == "atinf" || s == "inf") return ValuationSpec::at_infinity();
    if (s.rfind("adic:", 0) == 0) return ValuationSpec::adic(parse_rational(s.substr(5)));
    throw std::invalid_argument("unknown valuation '" + s + "' (expected adic:A or atinf)");
}

std::string to_string(const ValuationSpec& val) {
    return val.kind == ValuationSpec::Kind::AtInfinity ? "atinf" : "adic:" + to_string(val.anchor);
}

ValuationSpec canonical_valuation(const OrderSpec& ord) {
    return ord.has_anchor() ? ValuationSpec::adic(ord.anchor) : ValuationSpec::at_infinity();
}

const Rational& Value::finite() const {
    if (!v_) throw std::domain_error("infinite valuation has no finite value");
    return *v_;
}

std::string to_string(const Value& v) { return v.is_infinite() ? "inf" : to_string(v.finite()); }

Value nu(const RatFunc& f, const ValuationSpec& val) {
    if (f.is_zero()) return {};
    if (val.kind == ValuationSpec::Kind::AtInfinity) return Value(Rational(f.den().degree() - f.num().degree()));
    int kn = split_root_power(f.num(), val.anchor).first;
    int kd = split_root_power(f.den(), val.anchor).first;
    return Value(Rational(kn - kd));
}

CompatibilityReport check_order_compatibility(const OrderSpec& ord, const ValuationSpec& val,
                                              const std::vector<RatFunc>& samples) {
    CompatibilityReport report;
    std::vector<const RatFunc*> positive;
    for (const auto& s : samples)
        if (sign(s, ord) > 0) positive.push_back(&s);
    for (const RatFunc* x : positive) {
        for (const RatFunc* y : positive) {
            if (compare(*x, *y, ord) == Ordering::GT) continue;
            ++report.pairs_checked;
            if (nu(*x, val) < nu(*y, val)) {
                report.compatible = false;
                report.witness = std::make_pair(*x, *y);
                return report;
            }
        }
    }
    return report;
}

int NewtonPolygonResult::total_multiplicity() const {
    int t = 0;
    for (const auto& s : segments) t += s.multiplicity;
    return t;
}

std::vector<Value> NewtonPolygonResult::expanded() const {
    std::vector<Value> out;
    for (const auto& s : segments)
        for (int i = 0; i < s.multiplicity; ++i) out.push_back(s.root_valuation);
    return out;
}

NewtonPolygonResult newton_polygon_from_points(const std::vector<std::pair<int, Rational>>& points, int degree,
                                               int zero_root_count) {
    // Monotone chain lower hull; collinear interior points are dropped so each
    // slope yields one merged segment.
    std::vector<std::pair<int, Rational>> hull;
    auto cross = [](const std::pair<int, Rational>& o, const std::pair<int, Rational>& a,
                    const std::pair<int, Rational>& b) {
        return Rational((a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first));
    };
    for (const auto& p : points) {
        while (hull.size() >= 2 && sgn(cross(hull[hull.size() - 2], hull.back(), p)) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    NewtonPolygonResult result;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        int width = hull[i + 1].first - hull[i].first;
        Rational slope = (hull[i + 1].second - hull[i].second) / Rational(width);
        result.segments.push_back({Value(Rational(-slope)), width});
    }
    std::sort(result.segments.begin(), result.segments.end(),
              [](const auto& a, const auto& b) { return a.root_valuation < b.root_valuation; });
    if (zero_root_count > 0) result.segments.push_back({Value::infinity(), zero_root_count});
    if (result.total_multiplicity() != degree + zero_root_count)
        throw std::logic_error("Newton polygon multiplicity does not match the degree");
    return result;
}

}  // namespace rsb
