#include "rsb/roots.hpp"

#include "rsb/spectra.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rsb {

namespace {

using Series = std::vector<Rational>;  // truncated power series, lowest first

Series series_mul(const Series& a, const Series& b, std::size_t prec) {
    Series c(prec, Rational(0));
    for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < prec; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

Series series_inv(const Series& a, std::size_t prec) {
    Series b(prec, Rational(0));
    b[0] = 1 / a[0];
    for (std::size_t k = 1; k < prec; ++k) {
        Rational s = 0;
        for (std::size_t i = 1; i <= k && i < a.size(); ++i) s += a[i] * b[k - i];
        b[k] = -s * b[0];
    }
    return b;
}

Series to_series(const Poly& p, std::size_t prec) {
    Series s(prec, Rational(0));
    for (std::size_t i = 0; i < prec && static_cast<int>(i) <= p.degree(); ++i) s[i] = p.coeff(static_cast<int>(i));
    return s;
}

Series eval_series(const std::vector<Series>& coeffs, const Series& x, std::size_t prec) {
    Series acc(prec, Rational(0));
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = series_mul(acc, x, prec);
        for (std::size_t i = 0; i < prec; ++i) acc[i] += (*it)[i];
    }
    return acc;
}

// Rational roots of a polynomial over Q. Candidates come from a numeric
// solver and are confirmed exactly; p must be squarefree.
std::vector<Rational> rational_roots(const Poly& p) {
    std::vector<Rational> out;
    if (p.degree() < 1) return out;
    auto [k0, rest] = split_root_power(p, Rational(0));
    if (k0 > 0) out.emplace_back(0);
    if (rest.degree() < 1) return out;
    Integer den = common_denominator(rest.coeffs());
    std::vector<Integer> c;
    for (const auto& x : rest.coeffs()) c.emplace_back(x * den);
    // Roots p/q have q | lead, so lead * root is an integer.
    const Integer lead = c.back();
    Eigen::Matrix<long double, Eigen::Dynamic, 1> coeffs(static_cast<Eigen::Index>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rational scaled(c[i]);
        scaled /= Rational(c.back());
        coeffs(static_cast<Eigen::Index>(i)) = static_cast<long double>(scaled.get_d());
    }
    Eigen::PolynomialSolver<long double, Eigen::Dynamic> solver;
    solver.compute(coeffs);
    for (const auto& z : solver.roots()) {
        long double scale = std::max<long double>(1, std::fabs(z.real()));
        if (std::fabs(z.imag()) > 1e-6L * scale) continue;
        long double guess = std::round(z.real() * static_cast<long double>(lead.get_d()));
        if (!std::isfinite(guess) || std::fabs(guess) > 9e15L) continue;
        for (long delta : {0L, -1L, 1L}) {
            Rational cand(Integer(static_cast<long>(guess) + delta), lead);
            cand.canonicalize();
            if (sgn(rest.eval(cand)) == 0 && std::find(out.begin(), out.end(), cand) == out.end()) {
                out.push_back(cand);
                break;
            }
        }
    }
    return out;
}

// Squarefree part over Q(X), with coefficients cleared into Q[X].
std::vector<Poly> squarefree_cleared(const Polynomial<RatFunc>& p) {
    Polynomial<RatFunc> q = p;
    if (p.degree() >= 1) {
        auto g = euclid_gcd(p, p.derivative());
        if (g.degree() >= 1) q = exact_quotient(p, g);
    }
    Poly den = Poly::constant(1);
    for (const auto& c : q.coeffs()) den = den * exact_quotient(c.den(), poly_gcd(den, c.den()));
    std::vector<Poly> out;
    for (const auto& c : q.coeffs()) out.push_back(exact_quotient(c.num() * den, c.den()));
    return out;
}

Poly specialize(const std::vector<Poly>& coeffs, const Rational& a) {
    std::vector<Rational> c;
    for (const auto& x : coeffs) c.push_back(x.eval(a));
    return Poly(std::move(c));
}

std::vector<Rational> evaluation_points() {
    std::vector<Rational> pts;
    for (long v : {2L, 3L, -2L, 5L, -3L, 7L, 11L, -5L, 13L, 17L}) pts.emplace_back(v);
    for (long v : {2L, 3L, 5L, 7L}) pts.emplace_back(Rational(1, v));
    return pts;
}

std::optional<RatFunc> lift_root(const std::vector<Poly>& coeffs, const Rational& a, const Rational& r0) {
    const int deg_low = coeffs.front().degree() < 0 ? 0 : coeffs.front().degree();
    const int deg_high = coeffs.back().degree();
    const auto prec = static_cast<std::size_t>(deg_low + deg_high + 2);
    std::vector<Series> f, df;
    for (const auto& c : coeffs) f.push_back(to_series(taylor_shift(c, a), prec));
    for (std::size_t i = 1; i < f.size(); ++i) {
        Series d = f[i];
        for (auto& x : d) x *= static_cast<long>(i);
        df.push_back(std::move(d));
    }
    Series r(prec, Rational(0));
    r[0] = r0;
    for (std::size_t done = 1; done < prec; done *= 2) {
        Series num = eval_series(f, r, prec);
        Series den = eval_series(df, r, prec);
        if (sgn(den[0]) == 0) return std::nullopt;
        Series step = series_mul(num, series_inv(den, prec), prec);
        for (std::size_t i = 0; i < prec; ++i) r[i] -= step[i];
    }
    // Rational reconstruction by the extended Euclidean algorithm.
    Poly r_prev = Poly::monomial(Rational(1), static_cast<int>(prec));
    Poly r_cur(r);
    Poly t_prev, t_cur = Poly::constant(1);
    while (r_cur.degree() > deg_low) {
        auto [q, rem] = divmod(r_prev, r_cur);
        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        Poly t_next = t_prev - q * t_cur;
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    if (t_cur.is_zero() || sgn(t_cur.coeff(0)) == 0 || t_cur.degree() > deg_high) return std::nullopt;
    return RatFunc(taylor_shift(r_cur, -a), taylor_shift(t_cur, -a));
}

}  // namespace

RootSearch rational_function_roots(const Polynomial<RatFunc>& p) {
    if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    RootSearch best;
    if (p.degree() == 0) {
        best.complete = true;
        return best;
    }
    auto coeffs = squarefree_cleared(p);
    const int sq_deg = static_cast<int>(coeffs.size()) - 1;
    for (const auto& a : evaluation_points()) {
        Poly pa = specialize(coeffs, a);
        if (pa.degree() != sq_deg) continue;
        if (euclid_gcd(pa, pa.derivative()).degree() > 0) continue;
        RootSearch found;
        int total = 0;
        for (const auto& r0 : rational_roots(pa)) {
            auto cand = lift_root(coeffs, a, r0);
            if (!cand) continue;
            auto [k, cof] = split_root_power(p, *cand);
            if (k == 0) continue;
            found.roots.push_back({*cand, k});
            total += k;
        }
        found.complete = total == p.degree();
        if (found.complete) return found;
        int best_total = 0;
        for (const auto& r : best.roots) best_total += r.multiplicity;
        if (total > best_total) best = std::move(found);
    }
    return best;
}

LagrangianK attracting_lagrangian(const MatrixK& g, const ValuationSpec& val) {
    if (!g.is_square() || g.rows() % 2 != 0) throw DimensionError("expected a 2n x 2n matrix");
    const std::size_t n = g.rows() / 2;
    auto search = rational_function_roots(char_poly(g));
    if (!search.complete) throw RootError(RootError::Kind::NotSplit, "characteristic polynomial does not split over Q(X)");
    struct Entry {
        const SplitRoot* root;
        Value v;
    };
    std::vector<Entry> entries;
    for (const auto& r : search.roots) entries.push_back({&r, nu(r.value, val)});
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.v < b.v; });
    std::size_t count = 0;
    MatrixK prod = MatrixK::identity(g.rows());
    for (const auto& e : entries) {
        if (count == n) break;
        count += static_cast<std::size_t>(e.root->multiplicity);
        if (count > n) throw RootError(RootError::Kind::SlopeTie, "a repeated eigenvalue straddles the dominant block");
        MatrixK shifted = g - e.root->value * MatrixK::identity(g.rows());
        prod = prod * shifted.pow(e.root->multiplicity);
    }
    // Valuation gap between the n-th and (n+1)-th eigenvalue.
    std::vector<Value> expanded;
    for (const auto& e : entries)
        for (int i = 0; i < e.root->multiplicity; ++i) expanded.push_back(e.v);
    if (!(expanded[n - 1] < expanded[n]))
        throw RootError(RootError::Kind::SlopeTie, "n-th and (n+1)-th eigenvalue valuations coincide");
    auto kernel = nullspace(prod);
    if (kernel.cols() != n) throw RootError(RootError::Kind::NotLagrangian, "dominant generalized eigenspace has wrong dimension");
    try {
        return LagrangianK::span(kernel);
    } catch (const LagrangianError& e) {
        throw RootError(RootError::Kind::NotLagrangian, e.what());
    }
}

LagrangianK repelling_lagrangian(const MatrixK& g, const ValuationSpec& val) {
    return attracting_lagrangian(inverse(g), val);
}

}  // namespace rsb
