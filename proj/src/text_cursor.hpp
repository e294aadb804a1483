#pragma once

// Shared lexical helpers for the ordinal and expression parsers.

#include "wqo/errors.hpp"
#include "wqo/ordinal.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wqo::detail {

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek(std::size_t ahead = 0) {
    skip_space();
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  // Raw lookahead without skipping whitespace first.
  char peek_raw(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  bool starts_with(std::string_view token) {
    skip_space();
    return text_.substr(pos_).starts_with(token);
  }

  bool accept(std::string_view token) {
    if (!starts_with(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail({"'" + std::string(token) + "'"}, "unexpected input");
  }

  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Natural natural() {
    if (!peek_digit()) fail({"natural number"}, "unexpected input");
    Natural n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return n;
  }

  std::size_t position() const noexcept { return pos_; }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) {
    skip_space();
    std::string what = detail;
    if (pos_ < text_.size()) {
      what += " '";
      what += text_[pos_];
      what += "'";
    } else {
      what += " end of input";
    }
    throw ParseError(pos_, std::move(expected), what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// ord := term ('+' term)*. Stops before a '+' that is followed by another '+'.
Ordinal read_ordinal(TextCursor& in);

}  // namespace wqo::detail
