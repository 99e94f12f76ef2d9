#pragma once

// Shared scanner for ring literals and polynomial text.

#include <cctype>
#include <string>
#include <string_view>

#include "simplext/ring.hpp"

namespace simplext::detail {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

  /// Unsigned decimal digits; no leading whitespace skipping inside.
  std::string_view digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return text.substr(start, pos - start);
  }
};

/// Reads one ring literal at the cursor. Scalar literals may carry a leading
/// sign only when `allow_sign` is set.
RingValue read_value(const RingDescriptor& r, Cursor& cur, bool allow_sign);

/// True if the next token can start a literal of `r` (sign excluded).
bool starts_value(const RingDescriptor& r, Cursor& cur);

}  // namespace simplext::detail
