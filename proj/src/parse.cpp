#include "rsb/parse.hpp"

#include <cctype>

namespace rsb {

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := ('-' | '+') unary | power
// power  := atom ('^' exponent)?
// atom   := integer | 'X' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    RatFunc run() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
        RatFunc v = expr();
        skip();
        if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            if (accept('+')) {
                v = v + term();
            } else if (accept('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    RatFunc term() {
        RatFunc v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                skip();
                std::size_t at = pos_;
                RatFunc d = unary();
                if (d.is_zero()) throw ParseError("division by the zero polynomial", at);
                v = v / d;
            } else {
                return v;
            }
        }
    }

    RatFunc unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFunc power() {
        skip();
        std::size_t at = pos_;
        RatFunc base = atom();
        if (!accept('^')) return base;
        long e = exponent();
        if (e < 0 && base.is_zero()) throw ParseError("negative power of zero", at);
        return base.pow(e);
    }

    long exponent() {
        skip();
        bool paren = accept('(');
        bool neg = false;
        if (accept('-')) {
            neg = true;
        } else {
            accept('+');
        }
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent", start);
        if (pos_ - start > 6) throw ParseError("exponent too large", start);
        long e = std::stol(std::string(s_.substr(start, pos_ - start)));
        if (paren && !accept(')')) throw ParseError("expected ')'", pos_);
        return neg ? -e : e;
    }

    RatFunc atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (c == 'X') {
            ++pos_;
            return RatFunc::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatFunc(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).run(); }

}  // namespace rsb
