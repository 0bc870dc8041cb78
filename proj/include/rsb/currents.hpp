#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rsb/representation.hpp"

namespace rsb {

using Quadruple = std::array<std::string, 4>;

/// True iff (x1, x2, x3, x4) sit in the cyclic order with offsets
/// 0 = o1 < o2 <= o3 < o4 from x1, i.e. x2 = x3 is the only coincidence allowed.
bool is_positive_quadruple(const std::vector<std::string>& order, const Quadruple& q);

/// A function on positively oriented quadruples of boundary labels.
class PositiveCrossratio {
public:
    virtual ~PositiveCrossratio() = default;
    /// Labels in positive cyclic order.
    virtual const std::vector<std::string>& labels() const = 0;
    /// std::nullopt when the quadruple cannot be evaluated.
    virtual std::optional<Rational> value(const Quadruple& q) const = 0;
};

/// Finitely many tabulated values.
class TableCrossratio : public PositiveCrossratio {
public:
    explicit TableCrossratio(std::vector<std::string> labels) : labels_(std::move(labels)) {}
    void set(const Quadruple& q, Rational v) { table_[q] = std::move(v); }

    const std::vector<std::string>& labels() const override { return labels_; }
    std::optional<Rational> value(const Quadruple& q) const override;

private:
    std::vector<std::string> labels_;
    std::map<Quadruple, Rational> table_;
};

/// [x1,x2,x3,x4] = -1/2 nu(CR(phi(x2), phi(x1), phi(x3), phi(x4))).
class FramingCrossratio : public PositiveCrossratio {
public:
    FramingCrossratio(const FramingTable& framing, ValuationSpec val) : framing_(framing), val_(std::move(val)) {}

    const std::vector<std::string>& labels() const override { return framing_.points; }
    std::optional<Rational> value(const Quadruple& q) const override;

private:
    const FramingTable& framing_;
    ValuationSpec val_;
    mutable std::mutex mutex_;
    mutable std::map<Quadruple, std::optional<Rational>> cache_;
};

class OrientationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The crossratio element CR(phi(x2), phi(x1), phi(x3), phi(x4)) in Q(X).
RatFunc framing_crossratio_element(const FramingTable& framing, const Quadruple& q);

/// Throws OrientationError for a quadruple that is not positively oriented
/// and TransversalityError when the needed pairs are not transverse.
Rational crossratio_value(const FramingTable& framing, const Quadruple& q, const ValuationSpec& val);

struct PeriodReport {
    enum class Method { Framing, TranslationLength };
    Word word;
    Rational period = 0;
    Method method = Method::TranslationLength;
};

std::string to_string(PeriodReport::Method m);

/// [w-, x, w x, w+] read from the framing's symmetry entry for w.
PeriodReport period(const FramingTable& framing, const Word& w, const RepTable& rep, const std::string& x);

PeriodReport period_via_length(const RepTable& rep, const Word& w, NormChoice norm = NormChoice::SymplecticSum);

struct RectangleBounds {
    Rational lower = 0;
    Rational upper = 0;
    std::optional<Quadruple> lower_witness;
    Quadruple corners;
    bool strict = false;  // lower < upper
};

/// Bounds on the measure of the rectangle ]d,a[ x ]b,c[ with corners
/// q = (a, b, c, d): lower is the largest value on the inner tuples
/// (a', b', c', d') with [d', a'] x [b', c'] inside [d, a] x [b, c], upper the
/// value at the corners. Throws std::invalid_argument for non-nested samples.
RectangleBounds rectangle_bounds(const PositiveCrossratio& cr, const Quadruple& corners,
                                 const std::vector<Quadruple>& inner);

struct CurrentClassification {
    bool certified = false;
    Integer k = 1;                  // least K with all values in (1/K)Z
    std::vector<PeriodReport> periods;
    std::optional<std::size_t> first_failure;  // index of a value outside (1/K_max)Z
};

CurrentClassification multicurve_certificate(const std::vector<Rational>& values, const Integer& k_max);
CurrentClassification multicurve_certificate(const RepTable& rep, const std::vector<Word>& words,
                                             const Integer& k_max, const SweepOptions& opts = {});
/// All nontrivial reduced words of length <= max_len, in shortlex order.
CurrentClassification multicurve_certificate(const RepTable& rep, std::size_t max_len, const Integer& k_max,
                                             const SweepOptions& opts = {});

struct SystoleReport {
    std::optional<Rational> value;  // none if no word qualified
    std::optional<Word> witness;
    std::size_t words_considered = 0;
};

/// Minimum translation length over cyclically reduced, non-peripheral words
/// of length <= radius whose image is not +-Id. Only a bound over the sweep.
SystoleReport systole_lower_bound(const RepTable& rep, std::size_t radius, const SweepOptions& opts = {});

struct DichotomyReport {
    std::size_t checked = 0;
    std::vector<std::size_t> violations;            // indices with nu(x) != 0 and nu(x/(x-1)) != 0
    std::vector<std::size_t> precondition_failures;  // indices with x < 1
    bool ok() const { return violations.empty() && precondition_failures.empty(); }
};

DichotomyReport lamination_dichotomy_check(const std::vector<RatFunc>& xs, const OrderSpec& ord,
                                           const ValuationSpec& val);

struct AxiomReport {
    bool ok = true;
    std::size_t symmetry_checked = 0;
    std::size_t additivity_checked = 0;
    std::size_t skipped = 0;
    std::optional<std::array<std::string, 5>> witness;
    std::string violation;
};

/// For each 5-tuple x1 < x2 <= x3 <= x4 < x5 (cyclically): additivity
/// [x1,x2,x4,x5] = [x1,x2,x3,x5] + [x1,x3,x4,x5], and symmetry
/// [a,b,c,d] = [c,d,a,b] on every quadruple involved with distinct labels.
AxiomReport crossratio_axiom_check(const PositiveCrossratio& cr, const std::vector<std::array<std::string, 5>>& tuples);

}  // namespace rsb
