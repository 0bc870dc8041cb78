#include "commands.hpp"

#include <cstdio>
#include <functional>
#include <map>

#include "rsb/pants.hpp"
#include "rsb/roots.hpp"

namespace rsb::cli {

namespace {

OrderSpec flag_order(const Flags& f, const OrderSpec& fallback) {
    if (!f.order) return fallback;
    try {
        return parse_order(*f.order);
    } catch (const std::invalid_argument& e) {
        throw SchemaError("--order", e.what());
    }
}

ValuationSpec flag_valuation(const Flags& f, const OrderSpec& ord, const std::optional<ValuationSpec>& fallback) {
    if (f.valuation) {
        try {
            return parse_valuation(*f.valuation);
        } catch (const std::invalid_argument& e) {
            throw SchemaError("--valuation", e.what());
        }
    }
    if (f.order || !fallback) return canonical_valuation(ord);
    return *fallback;
}

NormChoice flag_norm(const Flags& f) {
    try {
        return parse_norm(f.norm);
    } catch (const std::invalid_argument& e) {
        throw SchemaError("--norm", e.what());
    }
}

SweepOptions sweep_options(const Flags& f) { return {f.degree_bound, std::max(1u, f.threads)}; }

RepTable load_rep(const json& input, const Flags& f) {
    RepTable rep = representation_from_json(input);
    OrderSpec ord = flag_order(f, rep.order());
    ValuationSpec val = flag_valuation(f, ord, rep.valuation());
    return rep.with_order(ord, val);
}

std::vector<Word> flag_words(const RepTable& rep, const Flags& f) {
    std::vector<Word> out;
    for (const auto& w : f.words) {
        try {
            out.push_back(rep.presentation().parse_word(w));
        } catch (const std::invalid_argument& e) {
            throw SchemaError("--word", e.what());
        }
    }
    return out;
}

const json& field(const json& input, const char* key) {
    if (!input.is_object() || !input.contains(key))
        throw SchemaError("$", std::string("missing field \"") + key + "\"");
    return input[key];
}

std::vector<LagrangianK> lagrangians(const json& input, std::size_t count) {
    const json& arr = field(input, "lagrangians");
    if (!arr.is_array() || arr.size() != count)
        throw SchemaError("$.lagrangians", "expected " + std::to_string(count) + " bases");
    std::vector<LagrangianK> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::string path = "$.lagrangians[" + std::to_string(i) + "]";
        MatrixK b = matrix_from_json(arr[i], path);
        try {
            out.push_back(LagrangianK::span(b));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(path, e.what());
        }
    }
    for (const auto& l : out)
        if (l.n() != out.front().n()) throw SchemaError("$.lagrangians", "bases of different sizes");
    return out;
}

json rationals(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

json verdict_json(const RepTable& rep, const ClosedPointVerdict& v) {
    json out = {{"verdict", to_string(v.kind)}};
    switch (v.kind) {
        case ClosedPointVerdict::Kind::Closed:
            out["witness"] = rep.presentation().format(*v.witness);
            out["length"] = to_string(v.length);
            out["words_checked"] = v.words_checked;
            break;
        case ClosedPointVerdict::Kind::NotClosedIntegral: {
            json cert = json::object();
            for (std::size_t i = 0; i < v.generator_valuations.size(); ++i)
                cert[rep.presentation().generators()[i]] = to_string(v.generator_valuations[i]);
            out["certificate"] = {{"min_entry_valuation", cert}};
            break;
        }
        case ClosedPointVerdict::Kind::Unknown:
            out["radius"] = v.radius;
            out["words_checked"] = v.words_checked;
            out["exhaustive"] = v.exhaustive;
            break;
    }
    return out;
}

json multicurve_json(const RepTable& rep, const CurrentClassification& c, long kmax) {
    json periods = json::array();
    for (const auto& p : c.periods)
        periods.push_back({{"word", rep.presentation().format(p.word)},
                           {"period", to_string(p.period)},
                           {"method", to_string(p.method)}});
    json out = {{"classification", c.certified ? "MulticurveCertified" : "DiscretenessUnknown"},
                {"K", c.k.get_str()},
                {"kmax", kmax},
                {"words", c.periods.size()},
                {"periods", periods}};
    if (c.first_failure) out["first_failure"] = rep.presentation().format(c.periods[*c.first_failure].word);
    return out;
}

std::vector<Word> words_up_to(const RepTable& rep, std::size_t len) {
    auto all = enumerate_words(rep.presentation().rank(), len);
    all.erase(all.begin());  // identity
    return all;
}

json cmd_pants_demo(const json&, const Flags& f) {
    OrderSpec ord = flag_order(f, OrderSpec::at_plus(0));
    ValuationSpec val = flag_valuation(f, ord, std::nullopt);
    RepTable rep = pants_representation(ord, val);
    const auto& pres = rep.presentation();
    SymplecticForm form{rep.n()};
    json symp = json::object();
    for (std::size_t i = 0; i < pres.rank(); ++i) symp[pres.generators()[i]] = is_symplectic(rep.images()[i], form);
    json relators = json::array();
    for (const auto& r : pres.relators())
        relators.push_back({{"relator", pres.format(r)}, {"identity", evaluate(rep, r) == MatrixK::identity(4)}});
    const Word sq = pres.parse_word("(c1^-1 c3)^2");
    RatFunc tr = trace(rep, sq);
    json jordan = json::array();
    for (const char* w : {"c1", "c2", "c3", "c1^-1 c3", "c1 c2^-1", "(c1^-1 c3)^2"}) {
        MatrixK m = evaluate(rep, pres.parse_word(w));
        jordan.push_back({{"word", w}, {"jordan", rationals(jordan_valuation(m, val).entries)}});
    }
    auto verdict = closed_point_verdict(rep, f.radius, sweep_options(f));
    auto mc = multicurve_certificate(rep, f.max_length, Integer(f.kmax), sweep_options(f));
    return {{"order", to_string(ord)},
            {"valuation", to_string(val)},
            {"symplectic", symp},
            {"relators", relators},
            {"trace", {{"word", pres.format(sq)}, {"value", to_string(tr)}, {"valuation", to_string(nu(tr, val))}}},
            {"jordan", jordan},
            {"closed_point", verdict_json(rep, verdict)},
            {"multicurve", multicurve_json(rep, mc, f.kmax)}};
}

json cmd_symplectic_check(const json& input, const Flags&) {
    if (input.contains("presentation")) {
        RepTable rep = representation_from_json(input);  // throws on failure
        return {{"symplectic", true}, {"relators_ok", true}, {"generators", rep.presentation().rank()}};
    }
    MatrixK m = matrix_from_json(field(input, "matrix"), "$.matrix");
    if (m.rows() != m.cols() || m.rows() % 2 != 0) throw SchemaError("$.matrix", "expected a 2n x 2n matrix");
    return {{"symplectic", is_symplectic(m, SymplecticForm{m.rows() / 2})}, {"n", m.rows() / 2}};
}

json cmd_trace(const json& input, const Flags& f) {
    RepTable rep = load_rep(input, f);
    auto words = flag_words(rep, f);
    json rows = json::array();
    if (words.empty()) {
        for (const auto& s : trace_valuation_sample(rep, f.max_length, sweep_options(f)))
            rows.push_back({{"word", rep.presentation().format(s.word)},
                            {"trace", to_string(s.trace)},
                            {"valuation", to_string(s.valuation)}});
    } else {
        for (const auto& w : words) {
            RatFunc t = trace(rep, w);
            rows.push_back({{"word", rep.presentation().format(w)},
                            {"trace", to_string(t)},
                            {"valuation", to_string(nu(t, rep.valuation()))}});
        }
    }
    return {{"valuation", to_string(rep.valuation())}, {"traces", rows}};
}

// Matrices to analyse: {"matrix": M} or a representation with --word.
std::vector<std::pair<std::string, MatrixK>> spectral_inputs(const json& input, const Flags& f, ValuationSpec& val) {
    std::vector<std::pair<std::string, MatrixK>> out;
    if (input.contains("presentation")) {
        RepTable rep = load_rep(input, f);
        val = rep.valuation();
        auto words = flag_words(rep, f);
        if (words.empty()) throw SchemaError("--word", "give at least one word for a representation input");
        for (const auto& w : words) out.emplace_back(rep.presentation().format(w), evaluate(rep, w));
        return out;
    }
    OrderSpec ord = flag_order(f, OrderSpec::at_plus(0));
    val = flag_valuation(f, ord, std::nullopt);
    out.emplace_back("matrix", matrix_from_json(field(input, "matrix"), "$.matrix"));
    return out;
}

json cmd_translength(const json& input, const Flags& f) {
    ValuationSpec val;
    auto items = spectral_inputs(input, f, val);
    NormChoice norm = flag_norm(f);
    SpectralMode mode = f.linear ? SpectralMode::Linear : SpectralMode::Symplectic;
    json rows = json::array();
    for (const auto& [name, m] : items)
        rows.push_back({{"input", name}, {"length", to_string(translation_length(m, val, norm, mode))}});
    json out = {{"valuation", to_string(val)}, {"norm", to_string(norm)}, {"lengths", rows}};
    if (rows.size() == 1) out["length"] = rows[0]["length"];
    return out;
}

json cmd_jordan(const json& input, const Flags& f) {
    ValuationSpec val;
    auto items = spectral_inputs(input, f, val);
    SpectralMode mode = f.linear ? SpectralMode::Linear : SpectralMode::Symplectic;
    json rows = json::array();
    for (const auto& [name, m] : items) {
        auto cp = char_poly(m);
        rows.push_back({{"input", name},
                        {"jordan", rationals(jordan_valuation(m, val, mode).entries)},
                        {"newton_polygon", to_json(newton_polygon(cp, val))}});
    }
    return {{"valuation", to_string(val)}, {"mode", f.linear ? "linear" : "symplectic"}, {"results", rows}};
}

json cmd_closed_point(const json& input, const Flags& f) {
    RepTable rep = load_rep(input, f);
    json out = verdict_json(rep, closed_point_verdict(rep, f.radius, sweep_options(f)));
    out["order"] = to_string(rep.order());
    out["valuation"] = to_string(rep.valuation());
    return out;
}

json cmd_maslov(const json& input, const Flags& f) {
    auto ls = lagrangians(input, 3);
    OrderSpec ord = flag_order(f, OrderSpec::at_plus(0));
    auto r = maslov_full(ls[0], ls[1], ls[2], ord);
    return {{"order", to_string(ord)},
            {"maslov", r.index},
            {"radical_dimension", r.radical_dimension},
            {"maximal", r.index == static_cast<int>(ls[0].n())}};
}

json cmd_crossratio(const json& input, const Flags& f) {
    auto ls = lagrangians(input, 4);
    OrderSpec ord = flag_order(f, OrderSpec::at_plus(0));
    ValuationSpec val = flag_valuation(f, ord, std::nullopt);
    RatFunc cr;
    try {
        cr = crossratio(ls[0], ls[1], ls[2], ls[3]);
    } catch (const TransversalityError& e) {
        throw SchemaError("$.lagrangians", e.what());
    }
    return {{"crossratio", to_string(cr)}, {"valuation", to_string(val)}, {"nu", to_string(nu(cr, val))}};
}

json cmd_maximality(const json& input, const Flags& f) {
    RepTable rep = load_rep(input, f);
    FramingTable framing = framing_from_json(field(input, "framing"), rep.presentation());
    auto r = verify_maximal_framing(rep, framing);
    json out = {{"maximal", r.ok},
                {"triples_checked", r.triples_checked},
                {"equivariance_checked", r.equivariance_checked}};
    if (!r.ok) out["violation"] = r.violation;
    return out;
}

json cmd_periods(const json& input, const Flags& f) {
    RepTable rep = load_rep(input, f);
    NormChoice norm = flag_norm(f);
    auto words = flag_words(rep, f);
    if (words.empty()) words = words_up_to(rep, f.max_length);
    std::optional<FramingTable> framing;
    if (input.contains("framing")) framing = framing_from_json(input["framing"], rep.presentation());
    json rows = json::array();
    for (const auto& w : words) {
        auto p = period_via_length(rep, w, norm);
        rows.push_back({{"word", rep.presentation().format(w)}, {"period", to_string(p.period)}, {"method", to_string(p.method)}});
        if (!framing) continue;
        const auto* s = framing->symmetry_for(w);
        if (!s || s->action.empty() || s->repelling.empty()) continue;
        auto q = period(*framing, w, rep, s->action.begin()->first);
        rows.push_back({{"word", rep.presentation().format(w)}, {"period", to_string(q.period)}, {"method", to_string(q.method)}});
    }
    return {{"valuation", to_string(rep.valuation())}, {"periods", rows}};
}

json cmd_multicurve(const json& input, const Flags& f) {
    RepTable rep = load_rep(input, f);
    auto words = flag_words(rep, f);
    if (words.empty())
        return multicurve_json(rep, multicurve_certificate(rep, f.max_length, Integer(f.kmax), sweep_options(f)), f.kmax);
    return multicurve_json(rep, multicurve_certificate(rep, words, Integer(f.kmax), sweep_options(f)), f.kmax);
}

json cmd_distance(const json& input, const Flags& f) {
    MatrixK g1 = matrix_from_json(field(input, "g1"), "$.g1");
    MatrixK g2 = matrix_from_json(field(input, "g2"), "$.g2");
    if (g1.rows() != g1.cols() || g1.rows() != g2.rows() || g2.rows() != g2.cols())
        throw SchemaError("$", "g1 and g2 must be square of the same size");
    OrderSpec ord = flag_order(f, OrderSpec::at_plus(0));
    ValuationSpec val = flag_valuation(f, ord, std::nullopt);
    NormChoice norm = flag_norm(f);
    return {{"valuation", to_string(val)},
            {"norm", to_string(norm)},
            {"distance", to_string(building_pseudodistance(g1, g2, val, norm))}};
}

using Handler = std::function<json(const json&, const Flags&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h = {
        {"pants-demo", cmd_pants_demo},   {"symplectic-check", cmd_symplectic_check},
        {"trace", cmd_trace},             {"translength", cmd_translength},
        {"jordan", cmd_jordan},           {"closed-point", cmd_closed_point},
        {"maslov", cmd_maslov},           {"crossratio", cmd_crossratio},
        {"maximality", cmd_maximality},   {"periods", cmd_periods},
        {"multicurve", cmd_multicurve},   {"distance", cmd_distance},
    };
    return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"pants-demo", "symplectic-check", "trace",      "translength",
                                                   "jordan",     "closed-point",     "maslov",     "crossratio",
                                                   "maximality", "periods",          "multicurve", "distance"};
    return names;
}

json flags_to_json(const Flags& f) {
    json out = json::object();
    if (f.order) out["order"] = *f.order;
    if (f.valuation) out["valuation"] = *f.valuation;
    out["radius"] = f.radius;
    out["kmax"] = f.kmax;
    out["degree_bound"] = f.degree_bound;
    out["norm"] = f.norm;
    out["threads"] = f.threads;
    out["max_length"] = f.max_length;
    if (f.linear) out["linear"] = true;
    if (!f.words.empty()) out["words"] = f.words;
    return out;
}

json run_command(const std::string& command, const json& input, const Flags& flags) {
    auto it = handlers().find(command);
    if (it == handlers().end()) throw SchemaError("command", "unknown command '" + command + "'");
    if (flags.radius < 1) throw SchemaError("--radius", "must be at least 1");
    if (flags.kmax < 1) throw SchemaError("--kmax", "must be at least 1");
    if (flags.degree_bound < 1) throw SchemaError("--degree-bound", "must be at least 1");
    flag_norm(flags);
    const OrderSpec ord = flag_order(flags, OrderSpec::at_plus(0));
    flag_valuation(flags, ord, std::nullopt);
    return it->second(input, flags);
}

std::string format_millis(double millis) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", millis);
    return buf;
}

json make_report(const std::string& command, const Flags& flags, json result, double millis) {
    return {{"schema", "rsb-report/1"},
            {"command", command},
            {"flags", flags_to_json(flags)},
            {"result", std::move(result)},
            {"timing_ms", format_millis(millis)}};
}

}  // namespace rsb::cli
