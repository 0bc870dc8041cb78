#pragma once

#include "rsb/json_io.hpp"

namespace rsb {

/// The pair-of-pants representation into Sp(4, Q(X)) with presentation
/// <c1, c2, c3 | c3 c2 c1>, c3 = (c2 c1)^{-1}, as a representation document.
json pants_document(const OrderSpec& ord, const ValuationSpec& val);

RepTable pants_representation(const OrderSpec& ord, const ValuationSpec& val);

}  // namespace rsb
