#pragma once

#include <stdexcept>
#include <vector>

#include "rsb/symplectic.hpp"
#include "rsb/valuation.hpp"

namespace rsb {

class RootError : public std::domain_error {
public:
    enum class Kind { NotSplit, SlopeTie, NotLagrangian };
    RootError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct SplitRoot {
    RatFunc value;
    int multiplicity = 0;
};

struct RootSearch {
    std::vector<SplitRoot> roots;  // roots found in Q(X), distinct
    bool complete = false;         // multiplicities add up to the degree
};

/// Roots of p lying in Q(X). Each root of a generic specialization X = a is
/// lifted in Q[[X - a]] and recovered by rational reconstruction; candidates
/// are verified exactly, so every reported root is genuine.
RootSearch rational_function_roots(const Polynomial<RatFunc>& p);

/// Sum of the generalized eigenspaces of the n eigenvalues of least
/// valuation (the dominant ones for an order compatible with val).
/// Throws RootError when the characteristic polynomial does not split over
/// Q(X), when the n-th and (n+1)-th valuations tie, or when the result is not
/// Lagrangian.
LagrangianK attracting_lagrangian(const MatrixK& g, const ValuationSpec& val);

/// attracting_lagrangian(g^{-1}).
LagrangianK repelling_lagrangian(const MatrixK& g, const ValuationSpec& val);

}  // namespace rsb
