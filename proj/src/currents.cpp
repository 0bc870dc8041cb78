#include "rsb/currents.hpp"

#include <algorithm>

#include "rsb/parallel.hpp"

namespace rsb {

namespace {

std::size_t index_of(const std::vector<std::string>& order, const std::string& label) {
    auto it = std::find(order.begin(), order.end(), label);
    if (it == order.end()) throw std::invalid_argument("unknown boundary label '" + label + "'");
    return static_cast<std::size_t>(it - order.begin());
}

// Offsets of the labels from the first one along the cyclic order.
template <std::size_t N>
std::array<std::size_t, N> offsets(const std::vector<std::string>& order, const std::array<std::string, N>& t) {
    const std::size_t m = order.size();
    const std::size_t origin = index_of(order, t[0]);
    std::array<std::size_t, N> o{};
    for (std::size_t i = 0; i < N; ++i) o[i] = (index_of(order, t[i]) + m - origin) % m;
    return o;
}

}  // namespace

bool is_positive_quadruple(const std::vector<std::string>& order, const Quadruple& q) {
    auto o = offsets(order, q);
    return 0 < o[1] && o[1] <= o[2] && o[2] < o[3];
}

std::optional<Rational> TableCrossratio::value(const Quadruple& q) const {
    auto it = table_.find(q);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

RatFunc framing_crossratio_element(const FramingTable& framing, const Quadruple& q) {
    return crossratio(framing.image(q[1]), framing.image(q[0]), framing.image(q[2]), framing.image(q[3]));
}

Rational crossratio_value(const FramingTable& framing, const Quadruple& q, const ValuationSpec& val) {
    if (!is_positive_quadruple(framing.points, q))
        throw OrientationError("quadruple (" + q[0] + ", " + q[1] + ", " + q[2] + ", " + q[3] +
                               ") is not positively oriented");
    Value v = nu(framing_crossratio_element(framing, q), val);
    if (v.is_infinite()) throw TransversalityError("crossratio vanishes on a degenerate quadruple");
    return -v.finite() / 2;
}

std::optional<Rational> FramingCrossratio::value(const Quadruple& q) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(q); it != cache_.end()) return it->second;
    }
    std::optional<Rational> v;
    try {
        v = crossratio_value(framing_, q, val_);
    } catch (const OrientationError&) {
    } catch (const TransversalityError&) {
    }
    std::lock_guard lock(mutex_);
    cache_.emplace(q, v);
    return v;
}

std::string to_string(PeriodReport::Method m) {
    return m == PeriodReport::Method::Framing ? "framing" : "translation_length";
}

PeriodReport period(const FramingTable& framing, const Word& w, const RepTable& rep, const std::string& x) {
    PeriodReport r{w, 0, PeriodReport::Method::Framing};
    if (w.empty()) return r;
    const auto* s = framing.symmetry_for(w);
    if (!s) throw std::invalid_argument("framing lists no action for " + rep.presentation().format(w));
    if (s->repelling.empty() || s->attracting.empty())
        throw std::invalid_argument("framing lists no fixed points for " + rep.presentation().format(w));
    auto it = s->action.find(x);
    if (it == s->action.end()) throw std::invalid_argument("framing lists no image of '" + x + "'");
    if (framing.image(x).transformed(evaluate(rep, w)) != framing.image(it->second))
        throw std::invalid_argument("framing is not equivariant at '" + x + "'");
    r.period = crossratio_value(framing, {s->repelling, x, it->second, s->attracting}, rep.valuation());
    return r;
}

PeriodReport period_via_length(const RepTable& rep, const Word& w, NormChoice norm) {
    return {w, symplectic_translation_length(evaluate(rep, w), rep.valuation(), norm), PeriodReport::Method::TranslationLength};
}

RectangleBounds rectangle_bounds(const PositiveCrossratio& cr, const Quadruple& corners,
                                 const std::vector<Quadruple>& inner) {
    const auto& order = cr.labels();
    if (!is_positive_quadruple(order, corners)) throw OrientationError("rectangle corners are not positively oriented");
    auto upper = cr.value(corners);
    if (!upper) throw std::invalid_argument("crossratio is not defined at the rectangle corners");
    RectangleBounds b;
    b.corners = corners;
    b.upper = *upper;
    // Offsets measured from d: d <= d' < a' <= a < b <= b' <= c' <= c.
    const std::size_t m = order.size();
    const std::size_t origin = index_of(order, corners[3]);
    auto off = [&](const std::string& l) { return (index_of(order, l) + m - origin) % m; };
    const std::size_t oa = off(corners[0]), ob = off(corners[1]), oc = off(corners[2]);
    for (const auto& t : inner) {
        const std::size_t a = off(t[0]), bb = off(t[1]), c = off(t[2]), d = off(t[3]);
        bool nested = d < a && a <= oa && ob <= bb && bb <= c && c <= oc;
        if (!nested || !is_positive_quadruple(order, t))
            throw std::invalid_argument("inner tuple (" + t[0] + ", " + t[1] + ", " + t[2] + ", " + t[3] +
                                        ") is not nested in the rectangle");
        auto v = cr.value(t);
        if (!v) throw std::invalid_argument("crossratio is not defined on an inner tuple");
        if (!b.lower_witness || *v > b.lower) {
            b.lower = *v;
            b.lower_witness = t;
        }
    }
    if (!b.lower_witness) b.lower = 0;
    b.strict = b.lower < b.upper;
    return b;
}

CurrentClassification multicurve_certificate(const std::vector<Rational>& values, const Integer& k_max) {
    CurrentClassification c;
    Integer k = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
        mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), values[i].get_den_mpz_t());
        if (k > k_max && !c.first_failure) c.first_failure = i;
    }
    c.k = k;
    c.certified = !c.first_failure;
    return c;
}

CurrentClassification multicurve_certificate(const RepTable& rep, const std::vector<Word>& words,
                                             const Integer& k_max, const SweepOptions& opts) {
    std::vector<PeriodReport> periods(words.size());
    parallel_for(words.size(), opts.threads, [&](std::size_t i) { periods[i] = period_via_length(rep, words[i]); });
    std::vector<Rational> values;
    for (const auto& p : periods) values.push_back(p.period);
    auto c = multicurve_certificate(values, k_max);
    c.periods = std::move(periods);
    return c;
}

CurrentClassification multicurve_certificate(const RepTable& rep, std::size_t max_len, const Integer& k_max,
                                             const SweepOptions& opts) {
    std::vector<std::pair<Word, MatrixK>> items;
    sweep_words(rep, max_len, opts, [&](const Word& w, const MatrixK& m) {
        items.emplace_back(w, m);
        return true;
    });
    std::vector<PeriodReport> periods(items.size());
    parallel_for(items.size(), opts.threads, [&](std::size_t i) {
        periods[i] = {items[i].first, symplectic_translation_length(items[i].second, rep.valuation()),
                      PeriodReport::Method::TranslationLength};
    });
    std::vector<Rational> values;
    for (const auto& p : periods) values.push_back(p.period);
    auto c = multicurve_certificate(values, k_max);
    c.periods = std::move(periods);
    return c;
}

SystoleReport systole_lower_bound(const RepTable& rep, std::size_t radius, const SweepOptions& opts) {
    if (radius < 1) throw std::invalid_argument("systole sweep needs radius >= 1");
    const MatrixK id = MatrixK::identity(2 * rep.n());
    const MatrixK minus_id = RatFunc(-1) * id;
    std::vector<std::pair<Word, MatrixK>> candidates;
    sweep_words(rep, radius, opts, [&](const Word& w, const MatrixK& m) {
        if (w.is_cyclically_reduced() && !rep.presentation().is_peripheral(w) && m != id && m != minus_id)
            candidates.emplace_back(w, m);
        return true;
    });
    std::vector<Rational> lengths(candidates.size());
    parallel_for(candidates.size(), opts.threads,
                 [&](std::size_t i) { lengths[i] = symplectic_translation_length(candidates[i].second, rep.valuation()); });
    SystoleReport r;
    r.words_considered = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!r.value || lengths[i] < *r.value) {
            r.value = lengths[i];
            r.witness = candidates[i].first;
        }
    }
    return r;
}

DichotomyReport lamination_dichotomy_check(const std::vector<RatFunc>& xs, const OrderSpec& ord,
                                           const ValuationSpec& val) {
    DichotomyReport r;
    const Value zero(Rational(0));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ++r.checked;
        const RatFunc& x = xs[i];
        if (compare(x, RatFunc(1), ord) == Ordering::LT) {
            r.precondition_failures.push_back(i);
            continue;
        }
        if (x == RatFunc(1)) continue;
        if (nu(x, val) == zero) continue;
        if (nu(x / (x - RatFunc(1)), val) == zero) continue;
        r.violations.push_back(i);
    }
    return r;
}

AxiomReport crossratio_axiom_check(const PositiveCrossratio& cr, const std::vector<std::array<std::string, 5>>& tuples) {
    AxiomReport r;
    const auto& order = cr.labels();
    auto fail = [&](const std::array<std::string, 5>& t, std::string msg) {
        r.ok = false;
        r.witness = t;
        r.violation = std::move(msg);
    };
    for (const auto& t : tuples) {
        auto o = offsets(order, t);
        if (!(0 < o[1] && o[1] <= o[2] && o[2] <= o[3] && o[3] < o[4])) {
            ++r.skipped;
            continue;
        }
        Quadruple whole{t[0], t[1], t[3], t[4]};
        Quadruple left{t[0], t[1], t[2], t[4]};
        Quadruple right{t[0], t[2], t[3], t[4]};
        auto vw = cr.value(whole), vl = cr.value(left), vr = cr.value(right);
        if (!vw || !vl || !vr) {
            ++r.skipped;
            continue;
        }
        ++r.additivity_checked;
        if (*vw != *vl + *vr) {
            fail(t, "additivity: " + to_string(*vw) + " != " + to_string(*vl) + " + " + to_string(*vr));
            return r;
        }
        for (const auto& q : {whole, left, right}) {
            if (q[1] == q[2]) continue;
            auto a = cr.value(q);
            auto b = cr.value({q[2], q[3], q[0], q[1]});
            if (!b) continue;
            ++r.symmetry_checked;
            if (*a != *b) {
                fail(t, "symmetry: [" + q[0] + "," + q[1] + "," + q[2] + "," + q[3] + "] = " + to_string(*a) +
                            " but the flipped value is " + to_string(*b));
                return r;
            }
        }
    }
    return r;
}

}  // namespace rsb
