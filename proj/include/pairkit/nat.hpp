#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pairkit {

// Arbitrary-precision non-negative integer. Encoder outputs grow
// multiplicatively with the inputs, so a fixed-width type is not an option.
using Nat = boost::multiprecision::cpp_int;

// Parses a decimal or 0x-prefixed hexadecimal numeral.
// Throws std::invalid_argument on anything else (including signs).
Nat parse_nat(std::string_view text);

std::string to_string(const Nat& value);

}  // namespace pairkit
