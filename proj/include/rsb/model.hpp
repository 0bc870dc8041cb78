#pragma once

#include <vector>

#include "rsb/representation.hpp"

namespace rsb {

/// A cyclic group <g> acting through k diag(E, E^{-1}) k^{-1} together with an
/// equivariant maximal framing on finitely many labels.
struct HyperbolicModel {
    RepTable rep;
    FramingTable framing;
};

/// True iff the symmetric matrix s is positive definite in the order.
bool is_positive_definite(const MatrixK& s, const OrderSpec& ord);

/// Builds the model for E = diag(e) with 0 < e_i < 1 in ord, a strictly
/// increasing chain 0 < S_0 < S_1 < ... of symmetric matrices (Loewner order)
/// and a symplectic conjugator k. Labels in positive cyclic order are "m"
/// (the repelling Lagrangian k H), "s0", "s1", ... (k graph(S_i)) and "p" (the
/// attracting Lagrangian k V). The action of g is recorded for every label
/// whose image is again in the chain. Throws std::invalid_argument when a
/// hypothesis fails.
HyperbolicModel hyperbolic_model(const std::vector<RatFunc>& e, const std::vector<MatrixK>& chain, const MatrixK& k,
                                 const OrderSpec& ord, const ValuationSpec& val);

}  // namespace rsb
