#include "rsb/json_io.hpp"

#include "rsb/parse.hpp"

namespace rsb {

namespace {

RatFunc entry_from_json(const json& e, const std::string& path) {
    if (e.is_number_integer()) return RatFunc(Rational(e.get<long>()));
    if (!e.is_string()) throw SchemaError(path, "matrix entry must be an expression string or an integer");
    try {
        return parse_ratfunc(e.get<std::string>());
    } catch (const ParseError& err) {
        throw SchemaError(path, err.what());
    } catch (const std::domain_error& err) {
        throw SchemaError(path, err.what());
    }
}

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path, std::string("missing field \"") + key + "\"");
    return *it;
}

Rational anchor_from_json(const json& j, const std::string& path) {
    const json& a = require(j, "a", path);
    try {
        if (a.is_number_integer()) return Rational(a.get<long>());
        if (a.is_string()) return parse_rational(a.get<std::string>());
    } catch (const std::invalid_argument& err) {
        throw SchemaError(path + ".a", err.what());
    }
    throw SchemaError(path + ".a", "anchor must be a rational string or an integer");
}

std::string word_text(const json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path, "word must be a string");
    return j.get<std::string>();
}

Word word_from_json(const GroupPresentation& pres, const json& j, const std::string& path) {
    try {
        return pres.parse_word(word_text(j, path));
    } catch (const std::invalid_argument& err) {
        throw SchemaError(path, err.what());
    }
}

}  // namespace

MatrixK matrix_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw SchemaError(path, "matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<RatFunc> entries;
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        const std::string rp = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.empty()) throw SchemaError(rp, "row must be a nonempty array");
        if (i == 0) cols = row.size();
        if (row.size() != cols) throw SchemaError(rp, "ragged matrix");
        for (std::size_t k = 0; k < cols; ++k) entries.push_back(entry_from_json(row[k], rp + "[" + std::to_string(k) + "]"));
    }
    return MatrixK(rows, cols, std::move(entries));
}

json to_json(const MatrixK& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

OrderSpec order_from_json(const json& j, const std::string& path) {
    try {
        if (j.is_string()) return parse_order(j.get<std::string>());
    } catch (const std::invalid_argument& err) {
        throw SchemaError(path, err.what());
    }
    const json& kind = require(j, "kind", path);
    if (!kind.is_string()) throw SchemaError(path + ".kind", "expected a string");
    const auto k = kind.get<std::string>();
    if (k == "aplus") return OrderSpec::at_plus(anchor_from_json(j, path));
    if (k == "aminus") return OrderSpec::at_minus(anchor_from_json(j, path));
    if (k == "plusinf") return OrderSpec::plus_infinity();
    if (k == "minusinf") return OrderSpec::minus_infinity();
    throw SchemaError(path + ".kind", "unknown order kind '" + k + "'");
}

json to_json(const OrderSpec& ord) {
    switch (ord.kind) {
        case OrderSpec::Kind::AtPlus:
            return {{"kind", "aplus"}, {"a", to_string(ord.anchor)}};
        case OrderSpec::Kind::AtMinus:
            return {{"kind", "aminus"}, {"a", to_string(ord.anchor)}};
        case OrderSpec::Kind::PlusInfinity:
            return {{"kind", "plusinf"}};
        case OrderSpec::Kind::MinusInfinity:
            return {{"kind", "minusinf"}};
    }
    return {};
}

ValuationSpec valuation_from_json(const json& j, const std::string& path) {
    try {
        if (j.is_string()) return parse_valuation(j.get<std::string>());
    } catch (const std::invalid_argument& err) {
        throw SchemaError(path, err.what());
    }
    const json& kind = require(j, "kind", path);
    if (!kind.is_string()) throw SchemaError(path + ".kind", "expected a string");
    const auto k = kind.get<std::string>();
    if (k == "adic") return ValuationSpec::adic(anchor_from_json(j, path));
    if (k == "atinf") return ValuationSpec::at_infinity();
    throw SchemaError(path + ".kind", "unknown valuation kind '" + k + "'");
}

json to_json(const ValuationSpec& val) {
    if (val.kind == ValuationSpec::Kind::AtInfinity) return {{"kind", "atinf"}};
    return {{"kind", "adic"}, {"a", to_string(val.anchor)}};
}

GroupPresentation presentation_from_json(const json& j, const std::string& path) {
    const json& gens = require(j, "generators", path);
    if (!gens.is_array() || gens.empty()) throw SchemaError(path + ".generators", "expected a nonempty array of names");
    std::vector<std::string> names;
    for (const auto& g : gens) {
        if (!g.is_string()) throw SchemaError(path + ".generators", "generator names must be strings");
        names.push_back(g.get<std::string>());
    }
    GroupPresentation bare;
    try {
        bare = GroupPresentation(names);
    } catch (const std::invalid_argument& err) {
        throw SchemaError(path + ".generators", err.what());
    }
    auto words = [&](const char* key) {
        std::vector<Word> out;
        auto it = j.find(key);
        if (it == j.end()) return out;
        if (!it->is_array()) throw SchemaError(path + "." + key, "expected an array of words");
        for (std::size_t i = 0; i < it->size(); ++i)
            out.push_back(word_from_json(bare, (*it)[i], path + "." + key + "[" + std::to_string(i) + "]"));
        return out;
    };
    auto relators = words("relators");
    auto peripheral = words("peripheral");
    try {
        return GroupPresentation(names, relators, peripheral);
    } catch (const std::invalid_argument& err) {
        throw SchemaError(path, err.what());
    }
}

RepTable representation_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("$", "representation must be a JSON object");
    GroupPresentation pres = presentation_from_json(require(j, "presentation", "$"));
    const json& nj = require(j, "n", "$");
    if (!nj.is_number_integer() || nj.get<long long>() < 1) throw SchemaError("$.n", "n must be a positive integer");
    const auto n = static_cast<std::size_t>(nj.get<long long>());
    OrderSpec ord = j.contains("order") ? order_from_json(j["order"]) : OrderSpec::at_plus(0);
    ValuationSpec val = j.contains("valuation") ? valuation_from_json(j["valuation"]) : canonical_valuation(ord);
    const json& imgs = require(j, "images", "$");
    if (!imgs.is_object()) throw SchemaError("$.images", "expected an object keyed by generator");
    std::vector<MatrixK> images;
    for (const auto& g : pres.generators()) {
        auto it = imgs.find(g);
        if (it == imgs.end()) throw SchemaError("$.images", "missing image for generator '" + g + "'");
        MatrixK m = matrix_from_json(*it, "$.images." + g);
        if (m.rows() != 2 * n || m.cols() != 2 * n) throw SchemaError("$.images." + g, "image must be 2n x 2n");
        images.push_back(std::move(m));
    }
    for (const auto& [key, value] : imgs.items())
        if (pres.generator_index(key) < 0) throw SchemaError("$.images." + key, "not a generator");
    return RepTable(std::move(pres), std::move(images), n, ord, val);
}

json to_json(const RepTable& rep) {
    const auto& pres = rep.presentation();
    json relators = json::array(), peripheral = json::array();
    for (const auto& r : pres.relators()) relators.push_back(pres.format(r));
    for (const auto& p : pres.peripheral()) peripheral.push_back(pres.format(p));
    json images = json::object();
    for (std::size_t i = 0; i < pres.rank(); ++i) images[pres.generators()[i]] = to_json(rep.images()[i]);
    return {{"presentation", {{"generators", pres.generators()}, {"relators", relators}, {"peripheral", peripheral}}},
            {"n", rep.n()},
            {"order", to_json(rep.order())},
            {"valuation", to_json(rep.valuation())},
            {"images", images}};
}

FramingTable framing_from_json(const json& j, const GroupPresentation& pres) {
    FramingTable f;
    const json& pts = require(j, "points", "$.framing");
    if (!pts.is_array()) throw SchemaError("$.framing.points", "expected an array of labels");
    for (const auto& p : pts) {
        if (!p.is_string()) throw SchemaError("$.framing.points", "labels must be strings");
        f.points.push_back(p.get<std::string>());
    }
    const json& imgs = require(j, "images", "$.framing");
    for (const auto& p : f.points) {
        auto it = imgs.find(p);
        if (it == imgs.end()) throw SchemaError("$.framing.images", "missing image for '" + p + "'");
        MatrixK b = matrix_from_json(*it, "$.framing.images." + p);
        try {
            f.images.emplace(p, LagrangianK::span(b));
        } catch (const std::invalid_argument& err) {
            throw SchemaError("$.framing.images." + p, err.what());
        }
    }
    if (j.contains("symmetries")) {
        const json& syms = j["symmetries"];
        if (!syms.is_array()) throw SchemaError("$.framing.symmetries", "expected an array");
        for (std::size_t i = 0; i < syms.size(); ++i) {
            const std::string sp = "$.framing.symmetries[" + std::to_string(i) + "]";
            FramingTable::Symmetry s;
            s.word = word_from_json(pres, require(syms[i], "word", sp), sp + ".word");
            if (syms[i].contains("map")) {
                for (const auto& [from, to] : syms[i]["map"].items()) {
                    if (!to.is_string()) throw SchemaError(sp + ".map", "labels must be strings");
                    s.action[from] = to.get<std::string>();
                }
            }
            if (syms[i].contains("repelling")) s.repelling = syms[i]["repelling"].get<std::string>();
            if (syms[i].contains("attracting")) s.attracting = syms[i]["attracting"].get<std::string>();
            f.symmetries.push_back(std::move(s));
        }
    }
    return f;
}

json to_json(const FramingTable& f, const GroupPresentation& pres) {
    json images = json::object();
    for (const auto& p : f.points) images[p] = to_json(f.image(p).basis());
    json syms = json::array();
    for (const auto& s : f.symmetries) {
        json e = {{"word", pres.format(s.word)}, {"map", s.action}};
        if (!s.repelling.empty()) e["repelling"] = s.repelling;
        if (!s.attracting.empty()) e["attracting"] = s.attracting;
        syms.push_back(std::move(e));
    }
    return {{"points", f.points}, {"images", images}, {"symmetries", syms}};
}

json to_json(const Value& v) { return to_string(v); }

json to_json(const NewtonPolygonResult& np) {
    json out = json::array();
    for (const auto& s : np.segments) out.push_back({{"slope", to_string(s.root_valuation)}, {"mult", s.multiplicity}});
    return out;
}

}  // namespace rsb
