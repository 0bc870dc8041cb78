#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rsb/rational.hpp"

namespace rsb {

namespace detail {
template <class C>
bool coeff_is_zero(const C& x) {
    return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial over a field `C`, coefficients lowest degree
/// first. The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
template <class C>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(C value) { return Polynomial(std::vector<C>{std::move(value)}); }

    static Polynomial monomial(C value, int degree) {
        std::vector<C> c(static_cast<std::size_t>(degree) + 1, C(0));
        c.back() = std::move(value);
        return Polynomial(std::move(c));
    }

    /// The polynomial T - root.
    static Polynomial linear_factor(const C& root) { return Polynomial(std::vector<C>{-root, C(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<C>& coeffs() const { return c_; }

    C coeff(int i) const {
        if (i < 0 || i > degree()) return C(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const C& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    int low_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero_coeff(c_[i])) return static_cast<int>(i);
        return -1;
    }

    bool is_monomial() const { return !c_.empty() && low_degree() == degree(); }

    C eval(const C& x) const {
        C acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<C> d(c_.size() - 1, C(0));
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * C(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    Polynomial monic() const {
        if (c_.empty()) return {};
        const C lc = c_.back();
        std::vector<C> d = c_;
        for (auto& x : d) x = x / lc;
        return Polynomial(std::move(d));
    }

    Polynomial operator-() const {
        std::vector<C> d = c_;
        for (auto& x : d) x = -x;
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<C> d(std::max(a.c_.size(), b.c_.size()), C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] = d[i] + b.c_[i];
        return Polynomial(std::move(d));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<C> d(std::max(a.c_.size(), b.c_.size()), C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] = d[i] - b.c_[i];
        return Polynomial(std::move(d));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<C> d(a.c_.size() + b.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_coeff(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] = d[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(d));
    }
    friend Polynomial operator*(const C& s, const Polynomial& a) {
        if (is_zero_coeff(s)) return {};
        std::vector<C> d = a.c_;
        for (auto& x : d) x = s * x;
        return Polynomial(std::move(d));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Euclidean division a = q*b + r with deg r < deg b.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {Polynomial(), a};
        std::vector<C> r = a.c_;
        const int db = b.degree();
        std::vector<C> q(static_cast<std::size_t>(a.degree() - db) + 1, C(0));
        const C lc = b.leading();
        for (int k = a.degree(); k >= db; --k) {
            const C& top = r[static_cast<std::size_t>(k)];
            if (is_zero_coeff(top)) continue;
            C f = top / lc;
            for (int j = 0; j <= db; ++j) {
                auto idx = static_cast<std::size_t>(k - db + j);
                r[idx] = r[idx] - f * b.c_[static_cast<std::size_t>(j)];
            }
            q[static_cast<std::size_t>(k - db)] = std::move(f);
        }
        r.resize(static_cast<std::size_t>(db));
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    /// Quotient when b is known to divide a; throws otherwise.
    friend Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
        return q;
    }

    /// Monic greatest common divisor (zero if both are zero).
    friend Polynomial euclid_gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    /// Largest k with (T - root)^k dividing p (p nonzero), and the cofactor.
    friend std::pair<int, Polynomial> split_root_power(Polynomial p, const C& root) {
        int k = 0;
        while (!p.is_zero() && p.degree() >= 1) {
            // Synthetic division by (T - root).
            std::vector<C> q(static_cast<std::size_t>(p.degree()), C(0));
            C carry(0);
            for (int i = p.degree(); i >= 1; --i) {
                carry = carry * root + p.c_[static_cast<std::size_t>(i)];
                q[static_cast<std::size_t>(i - 1)] = carry;
            }
            C rem = carry * root + p.c_[0];
            if (!is_zero_coeff(rem)) break;
            p = Polynomial(std::move(q));
            ++k;
        }
        return {k, std::move(p)};
    }

private:
    static bool is_zero_coeff(const C& x) { return detail::coeff_is_zero(x); }

    void trim() {
        while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
};

using Poly = Polynomial<Rational>;

}  // namespace rsb
