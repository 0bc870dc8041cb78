#pragma once

#include <random>
#include <string>
#include <vector>

#include "rsb/currents.hpp"
#include "rsb/model.hpp"
#include "rsb/parse.hpp"
#include "rsb/spectra.hpp"

namespace testkit {

using namespace rsb;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long bound = 9) {
    long den = uniform(rng, 1, bound);
    Rational q(uniform(rng, -bound, bound), den);
    q.canonicalize();
    return q;
}

inline Rational random_positive_rational(Rng& rng, long bound = 9) {
    Rational q(uniform(rng, 1, bound), uniform(rng, 1, bound));
    q.canonicalize();
    return q;
}

inline Poly random_poly(Rng& rng, int max_degree, long bound = 5) {
    std::vector<Rational> c(static_cast<std::size_t>(uniform(rng, 0, max_degree)) + 1);
    for (auto& x : c) x = Rational(uniform(rng, -bound, bound));
    return Poly(std::move(c));
}

inline RatFunc random_ratfunc(Rng& rng, int max_degree = 3) {
    Poly den;
    while (den.is_zero()) den = random_poly(rng, max_degree);
    return RatFunc(random_poly(rng, max_degree), den);
}

inline RatFunc random_nonzero(Rng& rng, int max_degree = 3) {
    RatFunc f;
    while (f.is_zero()) f = random_ratfunc(rng, max_degree);
    return f;
}

/// c (X - a)^k or c X^k style element that is positive and < 1 in ord.
inline RatFunc random_contraction(Rng& rng, const OrderSpec& ord, long max_power = 3) {
    const RatFunc x = RatFunc::x();
    RatFunc t;
    switch (ord.kind) {
        case OrderSpec::Kind::AtPlus: t = x - RatFunc(ord.anchor); break;
        case OrderSpec::Kind::AtMinus: t = RatFunc(ord.anchor) - x; break;
        case OrderSpec::Kind::PlusInfinity: t = x.inverse(); break;
        case OrderSpec::Kind::MinusInfinity: t = -x.inverse(); break;
    }
    return RatFunc(random_positive_rational(rng)) * t.pow(uniform(rng, 1, max_power));
}

inline MatrixK diag(const std::vector<RatFunc>& d) {
    MatrixK m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

inline MatrixK random_symmetric(Rng& rng, std::size_t n, int max_degree) {
    MatrixK s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = RatFunc(random_poly(rng, max_degree, 3));
    return s;
}

inline MatrixQ random_symmetric_q(Rng& rng, std::size_t n) {
    MatrixQ s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = Rational(uniform(rng, -3, 3));
    return s;
}

/// [[I, S], [0, I]] or [[I, 0], [S, I]].
template <class K>
Matrix<K> transvection(const Matrix<K>& s, bool upper) {
    const std::size_t n = s.rows();
    Matrix<K> g = Matrix<K>::identity(2 * n);
    if (upper)
        g.set_block(0, n, s);
    else
        g.set_block(n, 0, s);
    return g;
}

/// diag(A, A^{-T}) for unit lower triangular A.
template <class K>
Matrix<K> levi(const Matrix<K>& a) {
    const std::size_t n = a.rows();
    Matrix<K> g(2 * n, 2 * n);
    g.set_block(0, 0, a);
    g.set_block(n, n, inverse(a).transpose());
    return g;
}

inline MatrixQ random_symplectic_q(Rng& rng, std::size_t n, int factors = 3) {
    MatrixQ g = MatrixQ::identity(2 * n);
    for (int f = 0; f < factors; ++f) g = g * transvection(random_symmetric_q(rng, n), f % 2 == 0);
    MatrixQ a = MatrixQ::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) a(i, j) = Rational(uniform(rng, -2, 2));
    return g * levi(a);
}

/// A product of two transvections and a torus element, with every entry of
/// degree <= max_degree.
inline MatrixK random_symplectic_k(Rng& rng, std::size_t n, int max_degree = 3) {
    const RatFunc x = RatFunc::x();
    while (true) {
        MatrixK g = transvection(random_symmetric(rng, n, 1), true) * transvection(random_symmetric(rng, n, 1), false);
        std::vector<RatFunc> t(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = RatFunc(random_positive_rational(rng, 3)) * x.pow(uniform(rng, -1, 1));
            t[n + i] = t[i].inverse();
        }
        g = g * diag(t);
        if (g.max_entry_degree() <= max_degree) return g;
    }
}

/// A random nonsingular Lagrangian over Q: the image of the horizontal one.
inline LagrangianQ random_lagrangian_q(Rng& rng, std::size_t n) {
    return LagrangianQ::horizontal(n).transformed(random_symplectic_q(rng, n, uniform(rng, 1, 3)));
}

struct ModelData {
    HyperbolicModel model;
    std::vector<RatFunc> e;
};

/// Chain S0 < S0 + t(S1 - S0) < S1 < S1 + t(S2 - S1) < S2 with
/// S_{i+1} = E^{-1} S_i E^{-1}, so that g maps s0 -> s2 -> s4 and s1 -> s3.
/// Retries until the chain is strictly increasing.
inline ModelData random_model(Rng& rng, std::size_t n, const OrderSpec& ord, const ValuationSpec& val,
                              long max_power = 3) {
    while (true) {
        std::vector<RatFunc> e(n);
        for (auto& x : e) x = random_contraction(rng, ord, max_power);
        MatrixK einv(n, n);
        for (std::size_t i = 0; i < n; ++i) einv(i, i) = e[i].inverse();
        MatrixK a = MatrixK::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) a(i, j) = RatFunc(uniform(rng, -2, 2));
        std::vector<RatFunc> d(n);
        for (auto& x : d) x = RatFunc(random_positive_rational(rng));
        MatrixK s0 = a.transpose() * diag(d) * a;
        MatrixK s1 = einv * s0 * einv;
        MatrixK s2 = einv * s1 * einv;
        Rational tq(uniform(rng, 1, 5), 6);
        tq.canonicalize();
        RatFunc t(tq);
        std::vector<MatrixK> chain{s0, s0 + t * (s1 - s0), s1, s1 + t * (s2 - s1), s2};
        bool increasing = is_positive_definite(s0, ord);
        for (std::size_t i = 1; increasing && i < chain.size(); ++i)
            increasing = is_positive_definite(chain[i] - chain[i - 1], ord);
        if (!increasing) continue;
        MatrixK k = to_ratfunc(random_symplectic_q(rng, n, 2));
        return {hyperbolic_model(e, chain, k, ord, val), e};
    }
}

/// All 5-tuples with offsets 0 < o2 <= o3 <= o4 < o5 from the first label.
inline std::vector<std::array<std::string, 5>> nested_tuples(const std::vector<std::string>& p) {
    std::vector<std::array<std::string, 5>> out;
    const std::size_t m = p.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 1; b < m; ++b)
            for (std::size_t c = b; c < m; ++c)
                for (std::size_t d = c; d < m; ++d)
                    for (std::size_t f = d + 1; f < m; ++f)
                        out.push_back({p[a], p[(a + b) % m], p[(a + c) % m], p[(a + d) % m], p[(a + f) % m]});
    return out;
}

/// log|lambda| / |log t| for the eigenvalues of m specialised at X = t,
/// computed with 200-digit floats, sorted nonincreasing.
std::vector<long double> numeric_log_magnitudes(const MatrixK& m, long double t);

/// Same for the roots of p (companion matrix), t = 10^-k.
std::vector<long double> numeric_root_log_magnitudes(const Polynomial<RatFunc>& p, long double t);

/// 2 f(10^-12) - f(10^-6): cancels the log|c| offset of roots c X^s.
std::vector<long double> extrapolated_log_magnitudes(const MatrixK& m);

}  // namespace testkit
