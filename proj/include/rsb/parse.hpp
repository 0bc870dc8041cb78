#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rsb/ratfunc.hpp"

namespace rsb {

/// Syntax or evaluation error in an expression, with the 0-based offset of
/// the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses an expression in X built from integers, + - * / ^ and parentheses.
/// '^' takes an integer exponent and binds tighter than unary minus.
RatFunc parse_ratfunc(std::string_view text);

}  // namespace rsb
