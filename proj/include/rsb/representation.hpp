#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsb/spectra.hpp"
#include "rsb/symplectic.hpp"
#include "rsb/word.hpp"

namespace rsb {

class RepresentationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an intermediate entry exceeds the configured degree bound.
class DegreeBoundExceeded : public std::runtime_error {
public:
    DegreeBoundExceeded(int bound, std::size_t level, std::size_t words_done)
        : std::runtime_error("entry degree exceeded bound " + std::to_string(bound) + " at word length " +
                             std::to_string(level) + " after " + std::to_string(words_done) + " words"),
          bound_(bound), level_(level), words_done_(words_done) {}
    int bound() const { return bound_; }
    std::size_t level() const { return level_; }
    std::size_t words_done() const { return words_done_; }

private:
    int bound_;
    std::size_t level_;
    std::size_t words_done_;
};

struct SweepOptions {
    int degree_bound = 512;
    unsigned threads = 1;
};

/// A representation of a finitely presented group into Sp(2n, Q(X)) together
/// with the order and valuation used to read it. Construction checks that
/// every image is symplectic and every relator maps to +-Id.
class RepTable {
public:
    RepTable(GroupPresentation presentation, std::vector<MatrixK> images, std::size_t n, OrderSpec ord,
             ValuationSpec val);

    const GroupPresentation& presentation() const { return pres_; }
    const std::vector<MatrixK>& images() const { return images_; }
    const MatrixK& image(int gen) const { return images_.at(static_cast<std::size_t>(gen)); }
    const MatrixK& inverse_image(int gen) const { return inverses_.at(static_cast<std::size_t>(gen)); }
    std::size_t n() const { return n_; }
    const OrderSpec& order() const { return ord_; }
    const ValuationSpec& valuation() const { return val_; }

    /// Same images read in another ordered valued field.
    RepTable with_order(const OrderSpec& ord, const ValuationSpec& val) const;

    MatrixK letter(const Letter& l) const { return l.exp > 0 ? image(l.gen) : inverse_image(l.gen); }

private:
    GroupPresentation pres_;
    std::vector<MatrixK> images_;
    std::vector<MatrixK> inverses_;
    std::size_t n_;
    OrderSpec ord_;
    ValuationSpec val_;
};

MatrixK evaluate(const RepTable& rep, const Word& w);
RatFunc trace(const RepTable& rep, const Word& w);

/// Visits every freely reduced word of length 1..max_len with its image, in
/// shortlex order. Children are computed from stored prefix products; the
/// visitor returns false to stop early. Levels are expanded on `threads`
/// workers and visited in order, so results do not depend on the schedule.
/// Throws DegreeBoundExceeded if any image entry exceeds the bound.
void sweep_words(const RepTable& rep, std::size_t max_len, const SweepOptions& opts,
                 const std::function<bool(const Word&, const MatrixK&)>& visit);

struct TraceSample {
    Word word;
    RatFunc trace;
    Value valuation;
};

std::vector<TraceSample> trace_valuation_sample(const RepTable& rep, std::size_t max_len,
                                                const SweepOptions& opts = {});

struct ClosedPointVerdict {
    enum class Kind { Closed, NotClosedIntegral, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<Word> witness;              // Closed
    Rational length = 0;                      // Closed
    std::vector<Value> generator_valuations;  // NotClosedIntegral: min nu over each generator's entries
    std::size_t radius = 0;                   // radius searched
    std::size_t words_checked = 0;
    /// Unknown after a sweep of radius >= 2^{2n} - 1.
    bool exhaustive = false;
};

std::string to_string(ClosedPointVerdict::Kind k);

/// Minimum of nu over the entries of m.
Value min_entry_valuation(const MatrixK& m, const ValuationSpec& val);

ClosedPointVerdict closed_point_verdict(const RepTable& rep, std::size_t radius, const SweepOptions& opts = {});

/// Abstract boundary points in cyclic order, their Lagrangian images, and the
/// action of some group elements on the labels.
struct FramingTable {
    struct Symmetry {
        Word word;
        std::map<std::string, std::string> action;  // label -> label
        std::string repelling;                      // fixed point labels, if known
        std::string attracting;
    };

    std::vector<std::string> points;  // positive cyclic order
    std::map<std::string, LagrangianK> images;
    std::vector<Symmetry> symmetries;

    /// Position of a label in the cyclic order; throws if absent.
    std::size_t position(const std::string& label) const;
    const LagrangianK& image(const std::string& label) const;
    const Symmetry* symmetry_for(const Word& w) const;
};

/// True iff the labels occur in this cyclic order with offsets
/// 0 = o_1 < o_2 < ... < o_k (strict) from the first label.
bool is_cyclically_ordered(const FramingTable& f, const std::vector<std::string>& labels);

struct FramingReport {
    bool ok = true;
    std::size_t triples_checked = 0;
    std::size_t equivariance_checked = 0;
    std::string violation;  // empty when ok
};

/// Every positively oriented triple of labels must map to a maximal triple,
/// and each listed symmetry must preserve the cyclic order and satisfy
/// rho(w) phi(x) = phi(w x).
FramingReport verify_maximal_framing(const RepTable& rep, const FramingTable& framing);

}  // namespace rsb
