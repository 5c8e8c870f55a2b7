#ifndef RINEHART_PARSE_HPP
#define RINEHART_PARSE_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "rinehart/poly.hpp"

namespace rinehart {

/// Syntax or semantic error in expression text; offset is the 0-based
/// byte position in the input.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)),
          offset(offset) {}
    std::size_t offset;
};

/// Parses the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := nat | nat '/' nat | var | '(' expr ')' | '-' factor
/// Implicit multiplication is not accepted.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace rinehart

#endif
