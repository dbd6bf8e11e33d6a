#pragma once

// Text forms used by the CLI:
//   group    := "Z" int ( "x" "Z" int )*          e.g. Z10xZ2
//   element  := "(" int ( "," int )* ")"          e.g. (3,1)
//   set      := [ "{" ] [ element ( "," element )* ] [ "}" ]   e.g. (1),(3) or {(1),(3)}
// Whitespace is allowed between tokens. Errors carry the byte offset.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "semicayley/abelian_group.hpp"
#include "semicayley/errors.hpp"

namespace semicayley {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }
  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a non-negative integer", start);
    return static_cast<int>(v);
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Element parse_element_at(const AbelianGroup& group, Cursor& cur) {
  const std::size_t start = cur.pos();
  cur.expect('(');
  Element e;
  if (!cur.peek(')')) {
    e.coords.push_back(cur.integer());
    while (cur.peek(',')) {
      cur.expect(',');
      e.coords.push_back(cur.integer());
    }
  }
  cur.expect(')');
  try {
    group.validate(e);
  } catch (const InvalidElementError& err) {
    throw ParseError(err.what(), start);
  }
  return e;
}

}  // namespace detail

inline AbelianGroup parse_group(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<int> factors;
  do {
    if (!factors.empty()) cur.expect('x');
    cur.expect('Z');
    const std::size_t at = cur.pos();
    const int n = cur.integer();
    if (n < 2) throw ParseError("cyclic factor must be >= 2", at);
    factors.push_back(n);
  } while (cur.peek('x'));
  if (!cur.at_end()) throw ParseError("unexpected trailing input", cur.pos());
  return AbelianGroup(std::move(factors));
}

inline Element parse_element(const AbelianGroup& group, std::string_view text) {
  detail::Cursor cur(text);
  Element e = detail::parse_element_at(group, cur);
  if (!cur.at_end()) throw ParseError("unexpected trailing input", cur.pos());
  return e;
}

inline std::vector<Element> parse_element_set(const AbelianGroup& group, std::string_view text) {
  detail::Cursor cur(text);
  std::vector<Element> out;
  if (cur.at_end()) return out;
  const bool braced = cur.peek('{');
  if (braced) cur.expect('{');
  if (!braced || !cur.peek('}')) {
    out.push_back(detail::parse_element_at(group, cur));
    while (cur.peek(',')) {
      cur.expect(',');
      out.push_back(detail::parse_element_at(group, cur));
    }
  }
  if (braced) cur.expect('}');
  if (!cur.at_end()) throw ParseError("unexpected trailing input", cur.pos());
  return out;
}

inline std::string format_element_set(const std::vector<Element>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += to_string(set[i]);
  }
  return out + "}";
}

}  // namespace semicayley
