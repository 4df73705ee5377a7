/*
   Copyright 2026 The steenrod authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* Text syntax.

     sq-expr  := term ('+' term)*          term   := '1' | '0' | ('Sq' nat)+
     poly     := mono ('+' mono)*          mono   := '1' | '0' | factor ('*' factor)*
                                           factor := 't' idx ('^' nat)?
     module   := 's' nat | 'rp' nat | 'cp' nat | 'wedge(' module ',' module ')'
               | 'susp(' module ')'

   Factors of a term are separated by whitespace. Sums cancel mod 2. */

#ifndef STEENROD_PARSE_HPP
#define STEENROD_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adem.hpp"
#include "module.hpp"
#include "poly.hpp"

namespace steenrod {

/// Syntax error with the 0-based byte offset where it was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error("at position " + std::to_string(position) + ": " + message), position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  [[nodiscard]] char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  [[nodiscard]] bool peek_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  [[nodiscard]] std::size_t pos() const noexcept { return pos_; }
  [[nodiscard]] bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept_word(std::string_view w) {
    if (!starts_with(w)) return false;
    pos_ += w.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::uint32_t natural(const char* what) {
    const std::size_t start = pos_;
    if (!peek_digit()) fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (peek_digit()) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) throw ParseError(std::string(what) + " is too large", start);
    }
    return static_cast<std::uint32_t>(v);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    if (pos_ >= text_.size()) throw ParseError(msg + ", found end of input", pos_);
    throw ParseError(msg + ", found '" + std::string(1, text_[pos_]) + "'", pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline bool is_lone_digit(Cursor& c, char d) {
  c.skip_ws();
  if (c.peek() != d) return false;
  // "1" and "0" as whole terms, not the start of a longer number
  Cursor look = c;
  look.accept(d);
  return !look.peek_digit();
}

}  // namespace detail

inline AdemElement parse_sq(std::string_view text) {
  detail::Cursor c(text);
  AdemElement out;
  if (c.at_end()) c.fail("expected a Steenrod expression");
  do {
    c.skip_ws();
    if (detail::is_lone_digit(c, '1')) {
      c.accept('1');
      out.toggle(SqWord{});
    } else if (detail::is_lone_digit(c, '0')) {
      c.accept('0');
    } else {
      std::vector<SqWord::exponent_type> exps;
      c.skip_ws();
      if (!c.starts_with("Sq")) c.fail("expected 'Sq<n>', '1' or '0'");
      while (true) {
        c.skip_ws();
        if (!c.starts_with("Sq")) break;
        const std::size_t at = c.pos();
        c.accept_word("Sq");
        const auto n = c.natural("an exponent after 'Sq'");
        if (n == 0) throw ParseError("Sq0 is the identity; write '1' instead", at);
        exps.push_back(n);
      }
      out.toggle(SqWord(std::move(exps)));
    }
  } while (c.accept('+'));
  if (!c.at_end()) c.fail("expected '+' or end of input");
  return out;
}

inline PolyElement parse_poly(std::string_view text) {
  detail::Cursor c(text);
  PolyElement out;
  if (c.at_end()) c.fail("expected a polynomial");
  do {
    c.skip_ws();
    if (detail::is_lone_digit(c, '1')) {
      c.accept('1');
      out.toggle(PolyMonomial{});
    } else if (detail::is_lone_digit(c, '0')) {
      c.accept('0');
    } else {
      std::vector<PolyMonomial::Factor> fs;
      do {
        c.skip_ws();
        if (!c.accept_word("t")) c.fail("expected 't<index>', '1' or '0'");
        const std::size_t at = c.pos();
        const auto v = c.natural("a variable index after 't'");
        if (v == 0) throw ParseError("variable indices start at 1", at);
        std::uint32_t e = 1;
        c.skip_ws();
        if (c.accept('^')) {
          c.skip_ws();
          const std::size_t eat = c.pos();
          e = c.natural("an exponent after '^'");
          if (e == 0) throw ParseError("exponent must be positive", eat);
        }
        fs.emplace_back(v, e);
      } while (c.accept('*'));
      out.toggle(PolyMonomial(std::move(fs)));
    }
  } while (c.accept('+'));
  if (!c.at_end()) c.fail("expected '+', '*' or end of input");
  return out;
}

namespace detail {

inline GradedModule parse_module_rec(Cursor& c) {
  c.skip_ws();
  if (c.accept_word("wedge")) {
    c.expect('(');
    auto a = parse_module_rec(c);
    c.expect(',');
    auto b = parse_module_rec(c);
    c.expect(')');
    return wedge(a, b);
  }
  if (c.accept_word("susp")) {
    c.expect('(');
    auto a = parse_module_rec(c);
    c.expect(')');
    return suspend(a);
  }
  const std::size_t at = c.pos();
  if (c.accept_word("rp")) return real_proj(c.natural("a dimension after 'rp'"));
  if (c.accept_word("cp")) return complex_proj(c.natural("a dimension after 'cp'"));
  if (c.accept_word("s")) {
    const auto n = c.natural("a dimension after 's'");
    if (n == 0) throw ParseError("sphere dimension must be at least 1", at);
    return sphere(n);
  }
  c.fail("expected s<n>, rp<n>, cp<n>, wedge(a,b) or susp(a)");
}

}  // namespace detail

/// Builds a catalog module from its constructor expression, e.g.
/// "wedge(s5,s3)" or "susp(cp2)".
inline GradedModule parse_module_spec(std::string_view text) {
  detail::Cursor c(text);
  auto M = detail::parse_module_rec(c);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return M;
}

}  // namespace steenrod

#endif  // STEENROD_PARSE_HPP
