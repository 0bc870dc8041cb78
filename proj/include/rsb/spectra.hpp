#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rsb/matrix.hpp"
#include "rsb/valuation.hpp"

namespace rsb {

enum class NormChoice { SymplecticSum, SpreadMax };
enum class SpectralMode { Symplectic, Linear };

/// "sum" or "spread".
NormChoice parse_norm(std::string_view text);
std::string to_string(NormChoice n);

class SpectrumError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// det(T*I - g), monic, by Berkowitz's division-free recursion.
template <class K>
Polynomial<K> char_poly(const Matrix<K>& a) {
    if (!a.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    // Coefficients highest degree first.
    std::vector<K> v{K(1)};
    for (std::size_t r = 0; r < n; ++r) {
        // Column of the Toeplitz matrix: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S.
        std::vector<K> col{K(1), -a(r, r)};
        std::vector<K> s(r);
        for (std::size_t i = 0; i < r; ++i) s[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            K dot(0);
            for (std::size_t j = 0; j < r; ++j)
                if (!is_zero(s[j]) && !is_zero(a(r, j))) dot = dot + a(r, j) * s[j];
            col.push_back(-dot);
            if (k + 1 < r) {
                std::vector<K> next(r, K(0));
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        if (!is_zero(a(i, j)) && !is_zero(s[j])) next[i] = next[i] + a(i, j) * s[j];
                s = std::move(next);
            }
        }
        std::vector<K> w(v.size() + 1, K(0));
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < v.size() && j <= i; ++j)
                if (i - j < col.size() && !is_zero(col[i - j]) && !is_zero(v[j])) w[i] = w[i] + col[i - j] * v[j];
        v = std::move(w);
    }
    return Polynomial<K>(std::vector<K>(v.rbegin(), v.rend()));
}

/// Characteristic polynomial of a matrix assumed symplectic, from the traces
/// of g^k for k <= n and the palindromic symmetry of the coefficients.
Polynomial<RatFunc> symplectic_char_poly(const MatrixK& g);

/// -nu of the eigenvalues, nonincreasing, with multiplicity. Throws
/// SpectrumError for singular input.
std::vector<Rational> eigenvalue_log_magnitudes(const MatrixK& g, const ValuationSpec& val);

/// Symplectic mode: the nonnegative half (length n) of the symmetric
/// multiset of -nu(eigenvalue). Linear mode: all values. Nonincreasing.
struct JordanVector {
    std::vector<Rational> entries;
};

JordanVector jordan_valuation(const MatrixK& g, const ValuationSpec& val,
                              SpectralMode mode = SpectralMode::Symplectic);

/// Same as translation_length in symplectic mode for a g already known to be
/// symplectic (images of a RepTable), skipping the general char poly.
Rational symplectic_translation_length(const MatrixK& g, const ValuationSpec& val,
                                       NormChoice norm = NormChoice::SymplecticSum);

Rational translation_length(const MatrixK& g, const ValuationSpec& val, NormChoice norm = NormChoice::SymplecticSum,
                            SpectralMode mode = SpectralMode::Symplectic);

/// -nu(N(delta(g1 x0, g2 x0))) computed from the eigenvalues of h^T h, h = g1^{-1} g2.
Rational building_pseudodistance(const MatrixK& g1, const MatrixK& g2, const ValuationSpec& val,
                                 NormChoice norm = NormChoice::SymplecticSum);

}  // namespace rsb
