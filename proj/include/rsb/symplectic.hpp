#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "rsb/matrix.hpp"
#include "rsb/order.hpp"

namespace rsb {

class LagrangianError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TransversalityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The standard form <(x1,y1),(x2,y2)> = x1.y2 - x2.y1 on K^{2n}.
struct SymplecticForm {
    std::size_t n = 1;

    std::size_t dim() const { return 2 * n; }

    /// Gram matrix J = [[0, I], [-I, 0]].
    template <class K>
    Matrix<K> gram() const {
        Matrix<K> j(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            j(i, n + i) = K(1);
            j(n + i, i) = K(-1);
        }
        return j;
    }

    /// Matrix of pairings <u_i, v_j> between the columns of u and v.
    template <class K>
    Matrix<K> pair(const Matrix<K>& u, const Matrix<K>& v) const {
        if (u.rows() != dim() || v.rows() != dim()) throw DimensionError("vectors do not live in K^{2n}");
        Matrix<K> out(u.cols(), v.cols());
        for (std::size_t a = 0; a < u.cols(); ++a)
            for (std::size_t b = 0; b < v.cols(); ++b) {
                K s(0);
                for (std::size_t i = 0; i < n; ++i) {
                    const K& x1 = u(i, a);
                    const K& y1 = u(n + i, a);
                    const K& x2 = v(i, b);
                    const K& y2 = v(n + i, b);
                    if (!is_zero(x1) && !is_zero(y2)) s = s + x1 * y2;
                    if (!is_zero(x2) && !is_zero(y1)) s = s - x2 * y1;
                }
                out(a, b) = s;
            }
        return out;
    }
};

/// True iff g^T J g = J exactly. Throws DimensionError unless g is 2n x 2n.
template <class K>
bool is_symplectic(const Matrix<K>& g, const SymplecticForm& form) {
    if (g.rows() != form.dim() || g.cols() != form.dim()) throw DimensionError("expected a 2n x 2n matrix");
    return form.pair(g, g) == form.gram<K>();
}

/// An n-dimensional isotropic subspace of K^{2n}, stored by a canonical
/// basis: the transpose of the reduced row echelon form of any basis^T.
template <class K>
class Lagrangian {
public:
    Lagrangian() = default;

    /// Throws LagrangianError on rank deficiency or a non-isotropic span.
    static Lagrangian span(const Matrix<K>& vectors) {
        if (vectors.rows() % 2 != 0) throw DimensionError("ambient dimension must be even");
        const std::size_t n = vectors.rows() / 2;
        if (vectors.cols() != n) throw LagrangianError("a Lagrangian needs exactly n spanning vectors");
        auto e = rref(vectors.transpose());
        if (e.pivots.size() != n) throw LagrangianError("spanning vectors are linearly dependent");
        Matrix<K> basis = e.reduced.transpose();
        SymplecticForm form{n};
        auto p = form.pair(basis, basis);
        for (const auto& x : p.entries())
            if (!is_zero(x)) throw LagrangianError("span is not isotropic");
        Lagrangian l;
        l.basis_ = std::move(basis);
        l.n_ = n;
        return l;
    }

    /// span(e_1..e_n).
    static Lagrangian horizontal(std::size_t n) {
        Matrix<K> b(2 * n, n);
        for (std::size_t i = 0; i < n; ++i) b(i, i) = K(1);
        return span(b);
    }
    /// span(e_{n+1}..e_{2n}).
    static Lagrangian vertical(std::size_t n) {
        Matrix<K> b(2 * n, n);
        for (std::size_t i = 0; i < n; ++i) b(n + i, i) = K(1);
        return span(b);
    }
    /// Graph {(x, S x)} of a symmetric n x n matrix S.
    static Lagrangian graph(const Matrix<K>& s) {
        const std::size_t n = s.rows();
        Matrix<K> b(2 * n, n);
        b.set_block(0, 0, Matrix<K>::identity(n));
        b.set_block(n, 0, s);
        return span(b);
    }

    std::size_t n() const { return n_; }
    const Matrix<K>& basis() const { return basis_; }

    Lagrangian transformed(const Matrix<K>& g) const { return span(g * basis_); }

    friend bool operator==(const Lagrangian& a, const Lagrangian& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const Lagrangian& a, const Lagrangian& b) { return !(a == b); }

private:
    Matrix<K> basis_;
    std::size_t n_ = 0;
};

using LagrangianK = Lagrangian<RatFunc>;
using LagrangianQ = Lagrangian<Rational>;

template <class K>
bool transverse(const Lagrangian<K>& a, const Lagrangian<K>& b) {
    if (a.n() != b.n()) throw DimensionError("Lagrangians of different dimension");
    return !is_zero(determinant(hconcat(a.basis(), b.basis())));
}

/// Signature data of a symmetric form: counts of positive and negative
/// squares after diagonalization, and the radical dimension.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int radical = 0;
    int signature() const { return positive - negative; }
};

/// Congruence diagonalization of a symmetric matrix, signs decided by ord.
template <class K>
Inertia inertia(Matrix<K> g, const OrderSpec& ord) {
    if (!g.is_square()) throw DimensionError("inertia of a non-square matrix");
    const std::size_t n = g.rows();
    Inertia out;
    auto swap_index = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(g(a, j), g(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(g(i, a), g(i, b));
    };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n && p == n; ++i)
            if (!is_zero(g(i, i))) p = i;
        if (p == n) {
            // All remaining diagonal entries vanish: fold in a nonzero off-diagonal one.
            std::size_t fi = n, fj = n;
            for (std::size_t i = k; i < n && fi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!is_zero(g(i, j))) {
                        fi = i;
                        fj = j;
                        break;
                    }
            if (fi == n) {
                out.radical = static_cast<int>(n - k);
                return out;
            }
            for (std::size_t j = 0; j < n; ++j) g(fi, j) = g(fi, j) + g(fj, j);
            for (std::size_t i = 0; i < n; ++i) g(i, fi) = g(i, fi) + g(i, fj);
            p = fi;
        }
        swap_index(k, p);
        const K d = g(k, k);
        (sign(d, ord) > 0 ? out.positive : out.negative) += 1;
        const K inv = K(1) / d;
        // Schur complement on the trailing block.
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(g(i, k))) continue;
            const K f = g(i, k) * inv;
            for (std::size_t j = i; j < n; ++j) {
                if (is_zero(g(k, j))) continue;
                g(i, j) = g(i, j) - f * g(k, j);
                g(j, i) = g(i, j);
            }
        }
        for (std::size_t j = k + 1; j < n; ++j) g(k, j) = g(j, k) = K(0);
    }
    return out;
}

struct MaslovResult {
    int index = 0;
    int radical_dimension = 0;
};

/// The 3n x 3n Gram matrix of q(x1,x2,x3) = <x1,x2> + <x2,x3> + <x3,x1> on
/// l1 x l2 x l3 (scaled by 2).
template <class K>
Matrix<K> maslov_form(const Lagrangian<K>& l1, const Lagrangian<K>& l2, const Lagrangian<K>& l3) {
    const std::size_t n = l1.n();
    if (l2.n() != n || l3.n() != n) throw DimensionError("Lagrangians of different dimension");
    SymplecticForm form{n};
    auto m12 = form.pair(l1.basis(), l2.basis());
    auto m23 = form.pair(l2.basis(), l3.basis());
    auto m31 = form.pair(l3.basis(), l1.basis());
    Matrix<K> g(3 * n, 3 * n);
    g.set_block(0, n, m12);
    g.set_block(n, 0, m12.transpose());
    g.set_block(n, 2 * n, m23);
    g.set_block(2 * n, n, m23.transpose());
    g.set_block(2 * n, 0, m31);
    g.set_block(0, 2 * n, m31.transpose());
    return g;
}

template <class K>
MaslovResult maslov_full(const Lagrangian<K>& l1, const Lagrangian<K>& l2, const Lagrangian<K>& l3,
                         const OrderSpec& ord) {
    auto in = inertia(maslov_form(l1, l2, l3), ord);
    return {in.signature(), in.radical};
}

template <class K>
int maslov(const Lagrangian<K>& l1, const Lagrangian<K>& l2, const Lagrangian<K>& l3, const OrderSpec& ord) {
    return maslov_full(l1, l2, l3, ord).index;
}

template <class K>
bool is_maximal_triple(const Lagrangian<K>& l1, const Lagrangian<K>& l2, const Lagrangian<K>& l3,
                       const OrderSpec& ord) {
    return maslov(l1, l2, l3, ord) == static_cast<int>(l1.n());
}

/// det(p_{l1 || l2} o p_{l3 || l4} restricted to l1), where p_{a || b} is the
/// projection onto a along b. Requires l1, l2 and l3, l4 transverse.
/// Computed as det W(1,4) det W(3,2) / (det W(1,2) det W(3,4)) with W(a,b) the
/// matrix of pairings between the bases of l_a and l_b.
template <class K>
K crossratio(const Lagrangian<K>& l1, const Lagrangian<K>& l2, const Lagrangian<K>& l3, const Lagrangian<K>& l4) {
    const SymplecticForm form{l1.n()};
    auto w = [&form](const Lagrangian<K>& a, const Lagrangian<K>& b) {
        return determinant(form.pair(a.basis(), b.basis()));
    };
    const K d12 = w(l1, l2), d34 = w(l3, l4);
    if (is_zero(d12) || is_zero(d34)) throw TransversalityError("crossratio needs transverse pairs");
    return w(l1, l4) * w(l3, l2) / (d12 * d34);
}

}  // namespace rsb
