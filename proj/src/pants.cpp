#include "rsb/pants.hpp"

namespace rsb {

json pants_document(const OrderSpec& ord, const ValuationSpec& val) {
    json c1 = {{"1", "4*X", "0", "0"}, {"0", "1", "0", "0"}, {"2", "4*X", "1", "0"}, {"-4*X", "2", "-4*X", "1"}};
    json c2 = {{"1", "1/X", "-2", "-1/X"}, {"0", "1", "1/X", "-2"}, {"0", "0", "1", "0"}, {"0", "0", "-1/X", "1"}};
    json c3 = {{"1", "-4*X-1/X", "-2", "-8*X-1/X"},
               {"0", "1", "1/X", "2"},
               {"-2", "4*X+2/X", "1", "8*X+2/X"},
               {"-4*X", "2", "-4*X-1/X", "1"}};
    return {{"presentation",
             {{"generators", {"c1", "c2", "c3"}}, {"relators", {"c3 c2 c1"}}, {"peripheral", {"c1", "c2", "c3"}}}},
            {"n", 2},
            {"order", to_json(ord)},
            {"valuation", to_json(val)},
            {"images", {{"c1", c1}, {"c2", c2}, {"c3", c3}}}};
}

RepTable pants_representation(const OrderSpec& ord, const ValuationSpec& val) {
    return representation_from_json(pants_document(ord, val));
}

}  // namespace rsb
