#include "rsb/order.hpp"

#include <stdexcept>

namespace rsb {

OrderSpec parse_order(std::string_view text) {
    std::string s(text);
    if (s == "plusinf" || s == "+inf" || s == "inf") return OrderSpec::plus_infinity();
    if (s == "minusinf" || s == "-inf") return OrderSpec::minus_infinity();
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        std::string head = s.substr(0, colon);
        Rational a = parse_rational(s.substr(colon + 1));
        if (head == "aplus") return OrderSpec::at_plus(a);
        if (head == "aminus") return OrderSpec::at_minus(a);
    }
    throw std::invalid_argument("unknown order '" + s + "' (expected aplus:A, aminus:A, plusinf or minusinf)");
}

std::string to_string(const OrderSpec& ord) {
    switch (ord.kind) {
        case OrderSpec::Kind::AtMinus: return "aminus:" + to_string(ord.anchor);
        case OrderSpec::Kind::AtPlus: return "aplus:" + to_string(ord.anchor);
        case OrderSpec::Kind::MinusInfinity: return "minusinf";
        case OrderSpec::Kind::PlusInfinity: return "plusinf";
    }
    return "?";
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::LT: return "LT";
        case Ordering::EQ: return "EQ";
        case Ordering::GT: return "GT";
    }
    return "?";
}

std::pair<int, Rational> factor_at(const Poly& p, const Rational& a) {
    auto [k, rest] = split_root_power(p, a);
    return {k, rest.eval(a)};
}

int sign(const RatFunc& f, const OrderSpec& ord) {
    if (f.is_zero()) return 0;
    const Poly& n = f.num();
    const Poly& d = f.den();
    switch (ord.kind) {
        case OrderSpec::Kind::AtPlus:
        case OrderSpec::Kind::AtMinus: {
            auto [kn, vn] = factor_at(n, ord.anchor);
            auto [kd, vd] = factor_at(d, ord.anchor);
            int s = sgn(vn) * sgn(vd);
            if (ord.kind == OrderSpec::Kind::AtMinus && ((kn - kd) % 2 != 0)) s = -s;
            return s;
        }
        case OrderSpec::Kind::PlusInfinity:
        case OrderSpec::Kind::MinusInfinity: {
            int s = sgn(n.leading()) * sgn(d.leading());
            if (ord.kind == OrderSpec::Kind::MinusInfinity && ((n.degree() - d.degree()) % 2 != 0)) s = -s;
            return s;
        }
    }
    return 0;
}

}  // namespace rsb
