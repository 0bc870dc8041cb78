#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rsb/currents.hpp"
#include "rsb/representation.hpp"

namespace rsb {

using json = nlohmann::json;

/// Input that does not match the expected document shape.
class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Entries may be expression strings or integers.
MatrixK matrix_from_json(const json& j, const std::string& path = "$");
json to_json(const MatrixK& m);

/// {"kind": "aplus", "a": "0"} or the flag form "aplus:0".
OrderSpec order_from_json(const json& j, const std::string& path = "$.order");
json to_json(const OrderSpec& ord);
/// {"kind": "adic", "a": "0"} or the flag form "adic:0" / "atinf".
ValuationSpec valuation_from_json(const json& j, const std::string& path = "$.valuation");
json to_json(const ValuationSpec& val);

GroupPresentation presentation_from_json(const json& j, const std::string& path = "$.presentation");

/// Representation document. The valuation defaults to the one paired with
/// the order. Schema problems raise SchemaError; failed relator or
/// symplecticity checks raise RepresentationError.
RepTable representation_from_json(const json& j);
json to_json(const RepTable& rep);

/// {"points": [...], "images": {label: 2n x n matrix}, "symmetries":
///  [{"word": "...", "map": {...}, "repelling": "...", "attracting": "..."}]}
FramingTable framing_from_json(const json& j, const GroupPresentation& pres);
json to_json(const FramingTable& f, const GroupPresentation& pres);

json to_json(const Value& v);
json to_json(const NewtonPolygonResult& np);

}  // namespace rsb
