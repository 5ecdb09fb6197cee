#include "pairkit/nat.hpp"

#include <cctype>
#include <stdexcept>

namespace pairkit {

namespace {

bool all_digits_in(std::string_view digits, bool (*pred)(char)) {
  for (char c : digits) {
    if (!pred(c)) return false;
  }
  return !digits.empty();
}

bool is_dec(char c) { return c >= '0' && c <= '9'; }

bool is_hex(char c) {
  return is_dec(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

}  // namespace

Nat parse_nat(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    if (!all_digits_in(text.substr(2), is_hex)) {
      throw std::invalid_argument("not a hexadecimal numeral: '" +
                                  std::string(text) + "'");
    }
    return Nat("0x" + std::string(text.substr(2)));
  }
  if (!all_digits_in(text, is_dec)) {
    throw std::invalid_argument("not a decimal numeral: '" + std::string(text) +
                                "'");
  }
  return Nat(std::string(text));
}

std::string to_string(const Nat& value) { return value.str(); }

}  // namespace pairkit
