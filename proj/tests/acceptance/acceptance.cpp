// Acceptance run: one [PRIMARY] line per criterion.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "rsb/currents.hpp"
#include "rsb/pants.hpp"
#include "rsb/parse.hpp"
#include "testkit.hpp"

using namespace rsb;
using testkit::Rng;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v, int digits = 3) {
    std::ostringstream o;
    o << std::setprecision(digits) << std::fixed << v;
    return o.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

Outcome criterion_pants_demo() {
    cli::Flags flags;
    flags.order = "aplus:0";
    auto t0 = Clock::now();
    json r = cli::run_command("pants-demo", json::object(), flags);
    double secs = seconds_since(t0);

    std::vector<std::string> failed;
    bool symplectic = true;
    for (const auto& [g, ok] : r["symplectic"].items()) symplectic = symplectic && ok.get<bool>();
    if (!symplectic || r["symplectic"].size() != 3) failed.push_back("symplectic");
    bool relator = !r["relators"].empty();
    for (const auto& rel : r["relators"]) relator = relator && rel["identity"].get<bool>();
    if (!relator) failed.push_back("relator");
    const std::string expected = to_string(parse_ratfunc("-256*X^2+320-16/X^2"));
    const std::string got = r["trace"]["value"];
    if (got != expected) failed.push_back("trace");
    if (secs >= 1.0) failed.push_back("runtime");

    std::string detail = "symplectic " + std::string(symplectic ? "ok" : "NO") + "; relator " +
                         (relator ? "ok" : "NO") + "; trace(" + r["trace"]["word"].get<std::string>() + ") = " + got +
                         ", expected " + expected + "; " + fmt(secs) + " s";
    if (!failed.empty()) detail = "failed: " + join(failed, ", ") + "; " + detail;
    return {failed.empty(), detail};
}

Outcome criterion_closed_points() {
    struct Case {
        const char* order;
        ClosedPointVerdict::Kind expected;
    };
    const Case cases[] = {{"aplus:0", ClosedPointVerdict::Kind::Closed},
                          {"plusinf", ClosedPointVerdict::Kind::Closed},
                          {"aminus:1", ClosedPointVerdict::Kind::NotClosedIntegral},
                          {"aplus:1", ClosedPointVerdict::Kind::NotClosedIntegral}};
    auto t0 = Clock::now();
    bool pass = true;
    std::vector<std::string> parts;
    for (const auto& c : cases) {
        OrderSpec ord = parse_order(c.order);
        RepTable rep = pants_representation(ord, canonical_valuation(ord));
        auto v = closed_point_verdict(rep, 6);
        bool ok = v.kind == c.expected;
        std::string part = std::string(c.order) + " " + to_string(v.kind);
        if (v.kind == ClosedPointVerdict::Kind::Closed) {
            ok = ok && v.witness && v.length > 0;
            part += " [" + rep.presentation().format(*v.witness) + ", length " + to_string(v.length) + "]";
        }
        pass = pass && ok;
        parts.push_back(part);
    }
    double secs = seconds_since(t0);
    pass = pass && secs < 60;
    return {pass, join(parts, "; ") + "; radius 6; " + fmt(secs) + " s"};
}

Outcome criterion_multicurve() {
    auto t0 = Clock::now();
    bool pass = true;
    std::vector<std::string> parts;
    for (const char* o : {"aplus:0", "plusinf"}) {
        OrderSpec ord = parse_order(o);
        RepTable rep = pants_representation(ord, canonical_valuation(ord));
        SweepOptions opts;
        opts.threads = 4;
        auto c = multicurve_certificate(rep, 4, Integer(64), opts);
        // Independent check that K * period is an integer for every word.
        std::size_t bad = 0;
        for (const auto& p : c.periods) {
            Rational scaled = p.period * Rational(c.k);
            if (scaled.get_den() != 1) ++bad;
        }
        bool ok = c.certified && bad == 0 && c.periods.size() == 6 + 30 + 150 + 750;
        pass = pass && ok;
        parts.push_back(std::string(o) + " K=" + c.k.get_str() + " over " + std::to_string(c.periods.size()) +
                        " words" + (bad ? ", " + std::to_string(bad) + " outside (1/K)Z" : ""));
    }
    double secs = seconds_since(t0);
    pass = pass && secs < 120;
    return {pass, join(parts, "; ") + "; " + fmt(secs) + " s"};
}

Outcome criterion_numeric_oracle() {
    const RepTable rep = pants_representation(OrderSpec::at_plus(0), ValuationSpec::adic(0));
    auto words = enumerate_words(3, 5);
    Rng rng(404);
    const std::size_t samples = 60;
    std::size_t outside = 0, extrapolated_ok = 0;
    double worst_rel = 0, worst_zero = 0;
    std::string worst_word;
    for (std::size_t i = 0; i < samples; ++i) {
        const Word& w = words[static_cast<std::size_t>(testkit::uniform(rng, 1, static_cast<long>(words.size()) - 1))];
        MatrixK m = evaluate(rep, w);
        auto exact = jordan_valuation(m, rep.valuation(), SpectralMode::Linear).entries;
        auto num = testkit::numeric_log_magnitudes(m, 1e-6L);
        auto fine = testkit::numeric_log_magnitudes(m, 1e-12L);
        bool ok = true, ext = true;
        for (std::size_t k = 0; k < exact.size(); ++k) {
            double e = exact[k].get_d(), v = static_cast<double>(num[k]);
            double est = static_cast<double>(2 * fine[k] - num[k]);
            if (e == 0) {
                // |log|lambda|| < 0.05 |log 1e-6|, i.e. |v| < 0.05 after normalisation.
                if (std::fabs(v) >= 0.05) ok = false;
                worst_zero = std::max(worst_zero, std::fabs(v));
                if (std::fabs(est) >= 0.05) ext = false;
            } else {
                double rel = std::fabs(v - e) / std::fabs(e);
                if (rel > 0.05) ok = false;
                if (rel > worst_rel) {
                    worst_rel = rel;
                    worst_word = rep.presentation().format(w);
                }
                if (std::fabs(est - e) / std::fabs(e) > 0.05) ext = false;
            }
        }
        if (!ok) ++outside;
        if (ext) ++extrapolated_ok;
    }
    std::string detail = std::to_string(samples - outside) + "/" + std::to_string(samples) +
                         " words within 5% at X=1e-6; worst relative error " + fmt(worst_rel) + " (" + worst_word +
                         "); worst zero entry " + fmt(worst_zero) + " x |log 1e-6|; two-point extrapolation from 1e-6 and 1e-12: " +
                         (extrapolated_ok == samples ? "all " + std::to_string(samples)
                                                     : std::to_string(extrapolated_ok) + "/" + std::to_string(samples)) +
                         " words within 5%";
    return {outside == 0, detail};
}

Outcome criterion_maslov() {
    Rng rng(505);
    const OrderSpec ord = OrderSpec::at_plus(0);
    std::size_t violations = 0, triples = 0;
    std::string first;
    auto note = [&](const std::string& what) {
        if (violations++ == 0) first = what;
    };
    for (int i = 0; i < 1000; ++i) {
        std::size_t n = static_cast<std::size_t>(1 + i % 3);
        LagrangianQ a = testkit::random_lagrangian_q(rng, n), b = testkit::random_lagrangian_q(rng, n),
                    c = testkit::random_lagrangian_q(rng, n), d = testkit::random_lagrangian_q(rng, n);
        if (i % 10 == 0) c = a;
        ++triples;
        const int t = maslov(a, b, c, ord);
        if (std::abs(t) > static_cast<int>(n)) note("bound");
        if (maslov(b, a, c, ord) != -t || maslov(a, c, b, ord) != -t || maslov(c, b, a, ord) != -t) note("alternation");
        MatrixQ g = testkit::random_symplectic_q(rng, n);
        if (maslov(a.transformed(g), b.transformed(g), c.transformed(g), ord) != t) note("invariance");
        if (maslov(b, c, d, ord) - maslov(a, c, d, ord) + maslov(a, b, d, ord) - t != 0) note("cocycle");
    }
    return {violations == 0, std::to_string(triples) + " triples, n in {1,2,3}; " + std::to_string(violations) +
                                 " violations" + (first.empty() ? "" : " (first: " + first + ")")};
}

Outcome criterion_crossratio_axioms() {
    Rng rng(606);
    std::size_t configurations = 0, models = 0, period_checks = 0, failures = 0;
    std::string first;
    for (int i = 0; i < 12; ++i) {
        const std::size_t n = i % 4 == 3 ? 3 : static_cast<std::size_t>(1 + i % 2);
        const OrderSpec ord = i % 2 ? OrderSpec::at_plus(0) : OrderSpec::plus_infinity();
        const ValuationSpec val = canonical_valuation(ord);
        auto data = testkit::random_model(rng, n, ord, val, n == 3 ? 1 : 3);
        const auto& m = data.model;
        ++models;
        FramingCrossratio cr(m.framing, val);
        auto tuples = testkit::nested_tuples(m.framing.points);
        auto ax = crossratio_axiom_check(cr, tuples);
        configurations += ax.additivity_checked;
        if (!ax.ok || ax.skipped) {
            ++failures;
            if (first.empty()) first = ax.ok ? "skipped tuples" : ax.violation;
        }
        const Word g = m.rep.presentation().parse_word("g");
        const Rational expected = period_via_length(m.rep, g).period;
        for (const auto& [x, gx] : m.framing.symmetry_for(g)->action) {
            ++period_checks;
            if (period(m.framing, g, m.rep, x).period != expected) {
                ++failures;
                if (first.empty()) first = "period at " + x;
            }
        }
    }
    bool pass = failures == 0 && configurations >= 1000;
    return {pass, std::to_string(configurations) + " nested configurations over " + std::to_string(models) +
                      " eigen-framings; " + std::to_string(period_checks) + " framing periods equal the translation length; " +
                      std::to_string(failures) + " violations" + (first.empty() ? "" : " (first: " + first + ")")};
}

Outcome criterion_ordered_field() {
    Rng rng(707);
    const RatFunc x = RatFunc::x();
    const RatFunc big(Rational(Integer(1) << 64));
    std::size_t samples = 0, violations = 0;
    std::string first;
    auto note = [&](const std::string& what) {
        if (violations++ == 0) first = what;
    };
    for (int kind = 0; kind < 4; ++kind) {
        for (int i = 0; i < 250; ++i) {
            const Rational a = testkit::random_rational(rng);
            OrderSpec ord;
            RatFunc huge;
            switch (kind) {
                case 0: ord = OrderSpec::at_plus(a); huge = (x - RatFunc(a)).inverse(); break;
                case 1: ord = OrderSpec::at_minus(a); huge = (RatFunc(a) - x).inverse(); break;
                case 2: ord = OrderSpec::plus_infinity(); huge = x; break;
                default: ord = OrderSpec::minus_infinity(); huge = -x; break;
            }
            RatFunc f = testkit::random_ratfunc(rng), g = testkit::random_ratfunc(rng), h = testkit::random_ratfunc(rng);
            ++samples;
            const int sf = sign(f, ord);
            if ((sf > 0) + (sf == 0) + (sign(-f, ord) > 0) != 1 || (sf == 0) != f.is_zero()) note("trichotomy");
            if (sf > 0 && sign(g, ord) > 0 && (sign(f + g, ord) <= 0 || sign(f * g, ord) <= 0)) note("closure");
            if (compare(f, g, ord) == Ordering::LT && compare(g, h, ord) == Ordering::LT &&
                compare(f, h, ord) != Ordering::LT)
                note("transitivity");
            if (compare(f, g, ord) == Ordering::LT && compare(f + h, g + h, ord) != Ordering::LT) note("translation");
            if (sign(f * f, ord) < 0 || (!f.is_zero() && sign(f * f, ord) <= 0)) note("square");
            if (compare(huge, big, ord) != Ordering::GT) note("infinitely large witness");
        }
    }
    return {violations == 0, std::to_string(samples) + " samples over AtPlus, AtMinus, PlusInfinity, MinusInfinity; " +
                                 std::to_string(violations) + " violations" + (first.empty() ? "" : " (first: " + first + ")")};
}

Outcome criterion_pseudodistance() {
    Rng rng(808);
    std::size_t triples = 0, violations = 0;
    std::string first;
    auto note = [&](const std::string& what) {
        if (violations++ == 0) first = what;
    };
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = static_cast<std::size_t>(1 + i % 2);
        const ValuationSpec val = i % 3 == 2 ? ValuationSpec::at_infinity() : ValuationSpec::adic(0);
        MatrixK a = testkit::random_symplectic_k(rng, n), b = testkit::random_symplectic_k(rng, n),
                c = testkit::random_symplectic_k(rng, n), h = testkit::random_symplectic_k(rng, n);
        ++triples;
        const Rational ab = building_pseudodistance(a, b, val), bc = building_pseudodistance(b, c, val),
                       ac = building_pseudodistance(a, c, val);
        if (ab != building_pseudodistance(b, a, val)) note("symmetry");
        if (ac > ab + bc) note("triangle");
        if (building_pseudodistance(h * a, h * b, val) != ab) note("left-invariance");
    }
    return {violations == 0, std::to_string(triples) + " triples in Sp(2n, Q(X)), n in {1,2}, entry degree <= 3; " +
                                 std::to_string(violations) + " violations" + (first.empty() ? "" : " (first: " + first + ")")};
}

Outcome criterion_dichotomy() {
    Rng rng(909);
    const OrderSpec ord = OrderSpec::at_plus(0);
    const ValuationSpec val = ValuationSpec::adic(0);
    std::vector<RatFunc> xs;
    std::size_t models = 0;
    while (xs.size() < 100) {
        auto data = testkit::random_model(rng, 1, ord, val);
        ++models;
        const auto& f = data.model.framing;
        // Positive quadruples of distinct labels, ten per framing.
        std::vector<Quadruple> quads;
        for (const auto& t : testkit::nested_tuples(f.points))
            if (t[1] != t[2] && t[2] == t[3]) quads.push_back({t[0], t[1], t[2], t[4]});
        std::shuffle(quads.begin(), quads.end(), rng);
        for (std::size_t k = 0; k < 10 && xs.size() < 100; ++k) xs.push_back(framing_crossratio_element(f, quads[k]));
    }
    auto r = lamination_dichotomy_check(xs, ord, val);
    std::size_t zero = 0;
    for (const auto& v : xs)
        if (nu(v, val) == Value(Rational(0))) ++zero;
    return {r.ok() && r.checked == xs.size(),
            std::to_string(r.checked) + " values from " + std::to_string(models) + " n = 1 eigen-framings at Adic(0); " +
                std::to_string(zero) + " with nu(x) = 0; " + std::to_string(r.precondition_failures.size()) +
                " below 1; " + std::to_string(r.violations.size()) + " violations"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "run only these criteria (1-9)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);
    if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8, 9};

    const std::function<Outcome()> criteria[] = {criterion_pants_demo,     criterion_closed_points,
                                                 criterion_multicurve,     criterion_numeric_oracle,
                                                 criterion_maslov,         criterion_crossratio_axioms,
                                                 criterion_ordered_field,  criterion_pseudodistance,
                                                 criterion_dichotomy};
    bool all = true;
    for (int c : selected) {
        Outcome o;
        try {
            o = criteria[c - 1]();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << "[PRIMARY] criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ")"
                  << std::endl;
    }
    return all ? 0 : 1;
}
