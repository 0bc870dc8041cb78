#include "rsb/ratfunc.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

namespace rsb {

namespace {

const Poly& one_poly() {
    static const Poly one = Poly::constant(1);
    return one;
}

Poly x_power(int k) { return Poly::monomial(1, k); }

// Modular gcd: images in F_p[X] for word-size primes, combined by CRT and
// rational reconstruction, then checked by exact division.
using Residues = std::vector<std::uint64_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    for (; e; e >>= 1, a = mul_mod(a, a, p))
        if (e & 1) r = mul_mod(r, a, p);
    return r;
}

std::uint64_t reduce(const Integer& z, std::uint64_t p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

// Image of p in F_p[X]; empty when a denominator or the leading coefficient vanishes mod p.
std::optional<Residues> image_mod(const Poly& f, std::uint64_t p) {
    Residues out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        std::uint64_t d = reduce(c.get_den(), p);
        if (d == 0) return std::nullopt;
        out.push_back(mul_mod(reduce(c.get_num(), p), inv_mod(d, p), p));
    }
    if (out.empty() || out.back() == 0) return std::nullopt;
    return out;
}

// Monic gcd in F_p[X].
Residues gcd_mod(Residues a, Residues b, std::uint64_t p) {
    auto trim = [](Residues& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        const std::uint64_t inv = inv_mod(b.back(), p);
        while (a.size() >= b.size()) {
            const std::uint64_t f = mul_mod(a.back(), inv, p);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mul_mod(f, b[j], p)) % p;
            trim(a);
        }
        std::swap(a, b);
    }
    const std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& x : a) x = mul_mod(x, inv, p);
    return a;
}

// a/b with |a|, b <= sqrt(m/2) and a = b u mod m, if one exists.
std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& m) {
    Integer bound = sqrt(Integer(m / 2));
    Integer r0 = m, r1 = u, t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || abs(t1) > bound || gcd(t1, m) != 1) return std::nullopt;
    Rational q(r1, t1);
    q.canonicalize();
    return q;
}

bool divides(const Poly& g, const Poly& f) { return divmod(f, g).second.is_zero(); }

const std::vector<std::uint64_t>& gcd_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> out;
        Integer q = Integer(1) << 61;
        for (int i = 0; i < 64; ++i) {
            mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
            out.push_back(q.get_ui());
        }
        return out;
    }();
    return primes;
}

// Monic gcd of a and b (both of positive degree), or nullopt if the primes ran out.
std::optional<Poly> modular_gcd(const Poly& a, const Poly& b) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<Integer> crt;
    Integer modulus = 1;
    std::optional<Poly> previous;
    for (std::uint64_t p : gcd_primes()) {
        auto ia = image_mod(a, p), ib = image_mod(b, p);
        if (!ia || !ib) continue;
        Residues g = gcd_mod(std::move(*ia), std::move(*ib), p);
        const std::size_t d = g.size() - 1;
        if (d == 0) return Poly::constant(1);
        if (d > best) continue;
        if (d < best) {
            best = d;
            crt.assign(g.size(), Integer(0));
            modulus = 1;
            previous.reset();
        }
        // x = crt[i] mod modulus, x = g[i] mod p.
        const std::uint64_t minv = inv_mod(reduce(modulus, p), p);
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint64_t diff = (g[i] + p - reduce(crt[i], p)) % p;
            crt[i] += modulus * Integer(static_cast<unsigned long>(mul_mod(diff, minv, p)));
        }
        modulus *= Integer(static_cast<unsigned long>(p));
        std::vector<Rational> c;
        c.reserve(crt.size());
        for (const auto& x : crt) {
            auto q = rational_reconstruction(x, modulus);
            if (!q) break;
            c.push_back(std::move(*q));
        }
        if (c.size() != crt.size()) continue;
        Poly candidate(std::move(c));
        if (previous && *previous == candidate && divides(candidate, a) && divides(candidate, b)) return candidate;
        previous = std::move(candidate);
    }
    return std::nullopt;
}

Poly reversed(const Poly& p) {
    std::vector<Rational> c = p.coeffs();
    std::reverse(c.begin(), c.end());
    return Poly(std::move(c));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return one_poly();
    if (a.is_monomial()) return x_power(std::min(a.degree(), b.low_degree()));
    if (b.is_monomial()) return x_power(std::min(b.degree(), a.low_degree()));
    if (a == b) return a.monic();
    // Pull out the common power of X first.
    int common = std::min(a.low_degree(), b.low_degree());
    auto strip = [](const Poly& p) {
        int k = p.low_degree();
        return Poly(std::vector<Rational>(p.coeffs().begin() + k, p.coeffs().end()));
    };
    Poly sa = strip(a), sb = strip(b);
    Poly g = one_poly();
    if (sa.degree() > 0 && sb.degree() > 0) {
        auto m = modular_gcd(sa, sb);
        g = m ? std::move(*m) : euclid_gcd(std::move(sa), std::move(sb));
    }
    return common > 0 ? g * x_power(common) : g;
}

Poly taylor_shift(const Poly& p, const Rational& shift) {
    if (sgn(shift) == 0) return p;
    Poly lin(std::vector<Rational>{shift, 1});
    Poly acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + Poly::constant(*it);
    return acc;
}

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = one_poly();
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = exact_quotient(num, g);
        den = exact_quotient(den, g);
    }
    Rational lc = den.leading();
    if (lc != 1) {
        num = Rational(1 / lc) * num;
        den = den.monic();
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RatFunc RatFunc::x() { return RatFunc(Poly::monomial(1, 1)); }

int RatFunc::degree() const { return std::max({num_.degree(), den_.degree(), 0}); }

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("rational function is not constant");
    return num_.is_zero() ? Rational(0) : num_.coeff(0);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_ == one_poly() && b.den_ == one_poly()) return RatFunc(a.num_ * b.num_, one_poly(), RatFunc::Canonical{});
    Poly g1 = poly_gcd(a.num_, b.den_);
    Poly g2 = poly_gcd(b.num_, a.den_);
    Poly an = g1.degree() > 0 ? exact_quotient(a.num_, g1) : a.num_;
    Poly bd = g1.degree() > 0 ? exact_quotient(b.den_, g1) : b.den_;
    Poly bn = g2.degree() > 0 ? exact_quotient(b.num_, g2) : b.num_;
    Poly ad = g2.degree() > 0 ? exact_quotient(a.den_, g2) : a.den_;
    return RatFunc(an * bn, ad * bd, RatFunc::Canonical{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        Poly t = a.num_ + b.num_;
        if (t.is_zero()) return {};
        if (a.den_.degree() == 0) return RatFunc(std::move(t), one_poly(), RatFunc::Canonical{});
        Poly g = poly_gcd(t, a.den_);
        if (g.degree() == 0) return RatFunc(std::move(t), a.den_, RatFunc::Canonical{});
        return RatFunc(exact_quotient(t, g), exact_quotient(a.den_, g), RatFunc::Canonical{});
    }
    Poly g = poly_gcd(a.den_, b.den_);
    if (g.degree() == 0) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Canonical{});
    }
    Poly ad1 = exact_quotient(a.den_, g);
    Poly bd1 = exact_quotient(b.den_, g);
    Poly t = a.num_ * bd1 + b.num_ * ad1;
    if (t.is_zero()) return {};
    Poly g2 = poly_gcd(t, g);
    if (g2.degree() > 0) {
        t = exact_quotient(t, g2);
        g = exact_quotient(g, g2);
    }
    return RatFunc(std::move(t), ad1 * bd1 * g, RatFunc::Canonical{});
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc result(1);
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Rational RatFunc::eval(const Rational& t) const {
    Rational d = den_.eval(t);
    if (sgn(d) == 0) throw std::domain_error("evaluation at a pole");
    return num_.eval(t) / d;
}

RatFunc RatFunc::shifted(const Rational& shift) const {
    return RatFunc(taylor_shift(num_, shift), taylor_shift(den_, shift), Canonical{});
}

RatFunc RatFunc::reciprocal_argument() const {
    if (is_zero()) return {};
    int dn = num_.degree();
    int dd = den_.degree();
    Poly n = reversed(num_);
    Poly d = reversed(den_);
    if (dd > dn) n = n * x_power(dd - dn);
    if (dn > dd) d = d * x_power(dn - dd);
    return RatFunc(std::move(n), std::move(d));
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        std::string term;
        if (k == 0) {
            term = mag.get_str();
        } else {
            std::string mono = k == 1 ? "X" : "X^" + std::to_string(k);
            term = mag == 1 ? mono : mag.get_str() + "*" + mono;
        }
        if (out.empty()) {
            out = (sgn(c) < 0 ? "-" : "") + term;
        } else {
            out += (sgn(c) < 0 ? "-" : "+") + term;
        }
    }
    return out;
}

std::string to_string(const RatFunc& f) {
    if (f.den().degree() == 0) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::size_t hash_value(const RatFunc& f) {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& c : f.num().coeffs()) mix(hash_value(c));
    mix(0xabcdefULL);
    for (const auto& c : f.den().coeffs()) mix(hash_value(c));
    return h;
}

}  // namespace rsb
