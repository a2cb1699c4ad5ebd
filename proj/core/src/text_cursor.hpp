#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "oagw/numeric.hpp"

namespace oagw::detail {

/// Hand-rolled scanner shared by the element, formula and series parsers.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  std::size_t offset() const { return base_ + pos_; }
  bool atEnd() {
    skipSpace();
    return pos_ >= text_.size();
  }
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char peekRaw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool startsWith(std::string_view token) {
    skipSpace();
    return text_.substr(pos_, token.size()) == token;
  }
  bool consume(std::string_view token) {
    if (!startsWith(token)) return false;
    pos_ += token.size();
    return true;
  }
  /// Consumes a keyword only when it is not followed by an identifier character.
  bool consumeWord(std::string_view word) {
    if (!startsWith(word)) return false;
    std::size_t end = pos_ + word.size();
    if (end < text_.size() && isIdentChar(text_[end])) return false;
    pos_ = end;
    return true;
  }
  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, offset()); }

  std::string digits() {
    skipSpace();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::uint32_t smallNumber() {
    std::string d = digits();
    if (d.size() > 9) fail("number too large");
    return static_cast<std::uint32_t>(std::stoul(d));
  }
  bool peekDigit() {
    skipSpace();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  static bool isIdentStart(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
  static bool isIdentChar(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\''; }
  bool peekIdentifier() {
    skipSpace();
    return pos_ < text_.size() && isIdentStart(text_[pos_]);
  }
  std::string identifier() {
    skipSpace();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !isIdentStart(text_[pos_])) fail("expected identifier");
    while (pos_ < text_.size() && isIdentChar(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t position() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace oagw::detail
