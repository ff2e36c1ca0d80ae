#pragma once

// Text forms of equations and arrangements.
//
//   roots=0,1,-1;k=1;H=1          split form (X - a1 Y)(X - a2 Y)(X - a3 Y) H = k E
//   form=xy(x-y);k=1              the form XY(X-Y)
//   family=mordell;k=-2           a curve family (see curves.hpp for the keys)
//   1,0,0;0,1,0;0,0,1;1,1,1       hyperplanes, one coefficient vector each

#include "dioph/curves.hpp"
#include "dioph/hyperarr.hpp"
#include "dioph/thuemahler.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace dioph {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::invalid_argument("parse error at " + std::to_string(position) + ": " + message), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

using ParsedSpec = std::variant<BinaryFormSpec, CurveSpec, LinearFormSystem>;

/// Throws ParseError on malformed text and std::invalid_argument on semantic errors
/// (duplicate roots, zero k, proportional hyperplanes).
ParsedSpec parse_equation_spec(std::string_view text);

/// Canonical text form; parse_equation_spec(format_equation_spec(x)) reproduces x.
std::string format_equation_spec(const ParsedSpec& spec);

/// "a,b,c" with exact rationals; offset is added to error positions.
std::vector<Rational> parse_rational_list(std::string_view text, std::size_t offset = 0);

}  // namespace dioph
