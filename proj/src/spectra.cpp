#include "rsb/spectra.hpp"

#include <algorithm>
#include <functional>

namespace rsb {

NormChoice parse_norm(std::string_view text) {
    if (text == "sum") return NormChoice::SymplecticSum;
    if (text == "spread") return NormChoice::SpreadMax;
    throw std::invalid_argument("unknown norm '" + std::string(text) + "' (expected sum or spread)");
}

std::string to_string(NormChoice n) { return n == NormChoice::SymplecticSum ? "sum" : "spread"; }

namespace {

std::vector<Rational> root_log_magnitudes(const Polynomial<RatFunc>& p, const ValuationSpec& val) {
    if (is_zero(p.coeff(0))) throw SpectrumError("singular matrix has a zero eigenvalue");
    std::vector<Rational> out;
    for (const auto& v : newton_polygon(p, val).expanded()) out.push_back(-v.finite());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// Checks the multiset is closed under negation and returns its nonnegative half.
std::vector<Rational> symmetric_half(const std::vector<Rational>& desc) {
    const std::size_t m = desc.size();
    if (m % 2 != 0) throw SpectrumError("symplectic spectrum has odd size");
    for (std::size_t i = 0; i < m; ++i)
        if (desc[i] != -desc[m - 1 - i]) throw SpectrumError("eigenvalue valuations are not symmetric under negation");
    return {desc.begin(), desc.begin() + static_cast<std::ptrdiff_t>(m / 2)};
}

Rational length_from(const std::vector<Rational>& desc, NormChoice norm) {
    if (norm == NormChoice::SpreadMax) return desc.front() - desc.back();
    Rational total = 0;
    for (const auto& x : symmetric_half(desc)) total += x;
    return total;
}

}  // namespace

Polynomial<RatFunc> symplectic_char_poly(const MatrixK& g) {
    if (!g.is_square() || g.rows() % 2 != 0) throw DimensionError("symplectic char poly needs a 2n x 2n matrix");
    const std::size_t m = g.rows(), n = m / 2;
    // Power sums p_k = tr(g^k), k = 1..n, with tr(g^(a+b)) = sum (g^a)_ij (g^b)_ji.
    std::vector<MatrixK> pw{MatrixK::identity(m), g};
    while (pw.size() <= (n + 1) / 2) pw.push_back(pw.back() * g);
    std::vector<RatFunc> p(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t a = (k + 1) / 2, b = k / 2;
        if (b == 0) {
            p[k] = pw[a].trace();
            continue;
        }
        RatFunc t;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (!is_zero(pw[a](i, j)) && !is_zero(pw[b](j, i))) t += pw[a](i, j) * pw[b](j, i);
        p[k] = t;
    }
    // Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
    std::vector<RatFunc> e(n + 1);
    e[0] = RatFunc(1);
    for (std::size_t k = 1; k <= n; ++k) {
        RatFunc acc;
        for (std::size_t i = 1; i <= k; ++i) {
            RatFunc term = e[k - i] * p[i];
            acc = i % 2 == 1 ? acc + term : acc - term;
        }
        e[k] = RatFunc(Rational(1, static_cast<long>(k))) * acc;
    }
    // Coefficient of t^(m-k) is (-1)^k e_k and e_{m-k} = e_k.
    std::vector<RatFunc> c(m + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        RatFunc v = k % 2 == 0 ? e[k] : -e[k];
        c[m - k] = v;
        c[k] = v;
    }
    return Polynomial<RatFunc>(std::move(c));
}

Rational symplectic_translation_length(const MatrixK& g, const ValuationSpec& val, NormChoice norm) {
    return length_from(root_log_magnitudes(symplectic_char_poly(g), val), norm);
}

std::vector<Rational> eigenvalue_log_magnitudes(const MatrixK& g, const ValuationSpec& val) {
    return root_log_magnitudes(char_poly(g), val);
}

JordanVector jordan_valuation(const MatrixK& g, const ValuationSpec& val, SpectralMode mode) {
    auto desc = eigenvalue_log_magnitudes(g, val);
    if (mode == SpectralMode::Linear) return {desc};
    return {symmetric_half(desc)};
}

Rational translation_length(const MatrixK& g, const ValuationSpec& val, NormChoice norm, SpectralMode mode) {
    auto desc = eigenvalue_log_magnitudes(g, val);
    if (norm == NormChoice::SpreadMax) return desc.front() - desc.back();
    if (mode == SpectralMode::Linear) throw SpectrumError("the sum norm needs a symplectic element");
    Rational total = 0;
    for (const auto& x : symmetric_half(desc)) total += x;
    return total;
}

Rational building_pseudodistance(const MatrixK& g1, const MatrixK& g2, const ValuationSpec& val, NormChoice norm) {
    if (!g1.is_square() || g1.rows() != g2.rows() || g2.cols() != g1.cols())
        throw DimensionError("pseudodistance needs two square matrices of the same size");
    MatrixK h = inverse(g1) * g2;
    auto desc = root_log_magnitudes(char_poly(h.transpose() * h), val);
    for (auto& x : desc) x /= 2;
    if (norm == NormChoice::SpreadMax) return desc.front() - desc.back();
    Rational total = 0;
    for (const auto& x : desc)
        if (sgn(x) > 0) total += x;
    return total;
}

}  // namespace rsb
