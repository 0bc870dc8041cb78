#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace rsb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline int sign_of(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Least common multiple of the denominators of `values`.
template <class Range>
Integer common_denominator(const Range& values) {
    Integer l = 1;
    for (const Rational& v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    return l;
}

std::size_t hash_value(const Rational& q);

}  // namespace rsb
