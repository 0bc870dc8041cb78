#include "rsb/representation.hpp"

#include <algorithm>

#include "rsb/parallel.hpp"

namespace rsb {

RepTable::RepTable(GroupPresentation presentation, std::vector<MatrixK> images, std::size_t n, OrderSpec ord,
                   ValuationSpec val)
    : pres_(std::move(presentation)), images_(std::move(images)), n_(n), ord_(std::move(ord)), val_(std::move(val)) {
    if (n_ == 0) throw RepresentationError("half-dimension n must be positive");
    if (images_.size() != pres_.rank()) throw RepresentationError("one image per generator is required");
    SymplecticForm form{n_};
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const auto& g = images_[i];
        if (g.rows() != 2 * n_ || g.cols() != 2 * n_)
            throw RepresentationError("image of " + pres_.generators()[i] + " is not 2n x 2n");
        if (!is_symplectic(g, form)) throw RepresentationError("image of " + pres_.generators()[i] + " is not symplectic");
        // g^{-1} = -J g^T J for symplectic g.
        MatrixK j = form.gram<RatFunc>();
        inverses_.push_back(RatFunc(-1) * (j * g.transpose() * j));
    }
    const MatrixK id = MatrixK::identity(2 * n_);
    const MatrixK minus_id = RatFunc(-1) * id;
    for (const auto& r : pres_.relators()) {
        MatrixK m = evaluate(*this, r);
        if (m != id && m != minus_id)
            throw RepresentationError("relator " + pres_.format(r) + " does not evaluate to +-Id");
    }
}

RepTable RepTable::with_order(const OrderSpec& ord, const ValuationSpec& val) const {
    RepTable copy = *this;
    copy.ord_ = ord;
    copy.val_ = val;
    return copy;
}

MatrixK evaluate(const RepTable& rep, const Word& w) {
    MatrixK m = MatrixK::identity(2 * rep.n());
    for (const auto& l : w.letters()) m = m * rep.letter(l);
    return m;
}

RatFunc trace(const RepTable& rep, const Word& w) { return evaluate(rep, w).trace(); }

void sweep_words(const RepTable& rep, std::size_t max_len, const SweepOptions& opts,
                 const std::function<bool(const Word&, const MatrixK&)>& visit) {
    struct Node {
        Word word;
        MatrixK image;
    };
    const std::size_t letters = 2 * rep.presentation().rank();
    std::vector<Node> level{{Word(), MatrixK::identity(2 * rep.n())}};
    std::size_t done = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<Node>> children(level.size());
        std::vector<char> overflow(level.size(), 0);
        parallel_for(level.size(), opts.threads, [&](std::size_t i) {
            const Node& parent = level[i];
            for (std::size_t r = 0; r < letters; ++r) {
                Letter l{static_cast<int>(r / 2), r % 2 == 0 ? 1 : -1};
                const auto& base = parent.word.letters();
                if (!base.empty() && base.back() == l.inverse()) continue;
                std::vector<Letter> next = base;
                next.push_back(l);
                MatrixK m = parent.image * rep.letter(l);
                if (m.max_entry_degree() > opts.degree_bound) overflow[i] = 1;
                children[i].push_back({Word(next), std::move(m)});
            }
        });
        std::vector<Node> next_level;
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (overflow[i]) throw DegreeBoundExceeded(opts.degree_bound, len, done);
            for (auto& c : children[i]) next_level.push_back(std::move(c));
        }
        for (const auto& node : next_level) {
            ++done;
            if (!visit(node.word, node.image)) return;
        }
        level = std::move(next_level);
    }
}

std::vector<TraceSample> trace_valuation_sample(const RepTable& rep, std::size_t max_len, const SweepOptions& opts) {
    std::vector<TraceSample> out;
    RatFunc t0 = RatFunc(static_cast<long>(2 * rep.n()));
    out.push_back({Word(), t0, nu(t0, rep.valuation())});
    sweep_words(rep, max_len, opts, [&](const Word& w, const MatrixK& m) {
        RatFunc t = m.trace();
        out.push_back({w, t, nu(t, rep.valuation())});
        return true;
    });
    return out;
}

std::string to_string(ClosedPointVerdict::Kind k) {
    switch (k) {
        case ClosedPointVerdict::Kind::Closed:
            return "Closed";
        case ClosedPointVerdict::Kind::NotClosedIntegral:
            return "NotClosedIntegral";
        case ClosedPointVerdict::Kind::Unknown:
            return "Unknown";
    }
    return "Unknown";
}

Value min_entry_valuation(const MatrixK& m, const ValuationSpec& val) {
    Value best;
    for (const auto& x : m.entries()) best = std::min(best, nu(x, val));
    return best;
}

ClosedPointVerdict closed_point_verdict(const RepTable& rep, std::size_t radius, const SweepOptions& opts) {
    if (radius < 1) throw std::invalid_argument("search radius must be at least 1");
    ClosedPointVerdict v;
    bool integral = true;
    for (std::size_t i = 0; i < rep.images().size(); ++i) {
        Value a = min_entry_valuation(rep.images()[i], rep.valuation());
        Value b = min_entry_valuation(rep.inverse_image(static_cast<int>(i)), rep.valuation());
        Value m = std::min(a, b);
        v.generator_valuations.push_back(m);
        if (m < Value(Rational(0))) integral = false;
    }
    if (integral) {
        v.kind = ClosedPointVerdict::Kind::NotClosedIntegral;
        return v;
    }
    v.generator_valuations.clear();
    v.radius = radius;
    // Lengths are computed a level-chunk at a time so the first witness in
    // shortlex order is found regardless of thread count.
    std::vector<std::pair<Word, MatrixK>> batch;
    auto flush = [&]() -> bool {
        std::vector<Rational> lengths(batch.size());
        parallel_for(batch.size(), opts.threads, [&](std::size_t i) {
            lengths[i] = translation_length(batch[i].second, rep.valuation());
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            ++v.words_checked;
            if (sgn(lengths[i]) > 0) {
                v.kind = ClosedPointVerdict::Kind::Closed;
                v.witness = batch[i].first;
                v.length = lengths[i];
                return false;
            }
        }
        batch.clear();
        return true;
    };
    const std::size_t chunk = std::max<std::size_t>(64, 16 * opts.threads);
    bool found = false;
    sweep_words(rep, radius, opts, [&](const Word& w, const MatrixK& m) {
        batch.emplace_back(w, m);
        if (batch.size() >= chunk && !flush()) {
            found = true;
            return false;
        }
        return true;
    });
    if (!found && !batch.empty()) found = !flush();
    if (found) return v;
    v.kind = ClosedPointVerdict::Kind::Unknown;
    v.exhaustive = radius + 1 >= (std::size_t{1} << (2 * rep.n()));
    return v;
}

std::size_t FramingTable::position(const std::string& label) const {
    auto it = std::find(points.begin(), points.end(), label);
    if (it == points.end()) throw std::invalid_argument("unknown boundary label '" + label + "'");
    return static_cast<std::size_t>(it - points.begin());
}

const LagrangianK& FramingTable::image(const std::string& label) const {
    auto it = images.find(label);
    if (it == images.end()) throw std::invalid_argument("no image for boundary label '" + label + "'");
    return it->second;
}

const FramingTable::Symmetry* FramingTable::symmetry_for(const Word& w) const {
    for (const auto& s : symmetries)
        if (s.word == w) return &s;
    return nullptr;
}

bool is_cyclically_ordered(const FramingTable& f, const std::vector<std::string>& labels) {
    if (labels.empty()) return true;
    const std::size_t m = f.points.size();
    const std::size_t origin = f.position(labels.front());
    std::size_t prev = 0;
    for (std::size_t i = 1; i < labels.size(); ++i) {
        std::size_t off = (f.position(labels[i]) + m - origin) % m;
        if (off <= prev) return false;
        prev = off;
    }
    return true;
}

FramingReport verify_maximal_framing(const RepTable& rep, const FramingTable& framing) {
    FramingReport report;
    const auto& pts = framing.points;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw std::invalid_argument("duplicate boundary label '" + pts[i] + "'");
    for (const auto& p : pts)
        if (framing.image(p).n() != rep.n()) throw LagrangianError("framing image of '" + p + "' has the wrong dimension");
    const int n = static_cast<int>(rep.n());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                ++report.triples_checked;
                int t = maslov(framing.image(pts[i]), framing.image(pts[j]), framing.image(pts[k]), rep.order());
                if (t != n) {
                    report.ok = false;
                    report.violation = "triple (" + pts[i] + ", " + pts[j] + ", " + pts[k] +
                                       ") has Maslov index " + std::to_string(t) + " < " + std::to_string(n);
                    return report;
                }
            }
    for (const auto& s : framing.symmetries) {
        MatrixK g = evaluate(rep, s.word);
        std::vector<std::string> domain;
        for (const auto& [from, to] : s.action) domain.push_back(from);
        std::sort(domain.begin(), domain.end(),
                  [&](const std::string& a, const std::string& b) { return framing.position(a) < framing.position(b); });
        std::vector<std::string> mapped;
        for (const auto& d : domain) mapped.push_back(s.action.at(d));
        if (!is_cyclically_ordered(framing, mapped)) {
            report.ok = false;
            report.violation = "action of " + rep.presentation().format(s.word) + " does not preserve the cyclic order";
            return report;
        }
        for (const auto& [from, to] : s.action) {
            ++report.equivariance_checked;
            if (framing.image(from).transformed(g) != framing.image(to)) {
                report.ok = false;
                report.violation = "rho(" + rep.presentation().format(s.word) + ") maps phi(" + from + ") off phi(" +
                                   to + ")";
                return report;
            }
        }
        for (const std::string* fixed : {&s.repelling, &s.attracting}) {
            if (fixed->empty()) continue;
            ++report.equivariance_checked;
            if (framing.image(*fixed).transformed(g) != framing.image(*fixed)) {
                report.ok = false;
                report.violation = "phi(" + *fixed + ") is not fixed by rho(" + rep.presentation().format(s.word) + ")";
                return report;
            }
        }
    }
    return report;
}

}  // namespace rsb
