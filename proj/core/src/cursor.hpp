#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "overlay/error.hpp"

namespace overlay::detail {

/// Hand-written scanner shared by the graph-literal, edge-list and family DSL parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000L) {
        pos_ = start;
        fail({"integer below 10^9"});
      }
      ++pos_;
    }
    if (pos_ == start) fail({"integer"});
    return static_cast<int>(value);
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0)) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t position() const { return offset_ + pos_; }
  void rewind(std::size_t local) { pos_ = local; }
  std::size_t local_position() const { return pos_; }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found;
    if (pos_ < text_.size()) found = std::string(1, text_[pos_]);
    throw ParseError(position(), std::move(expected), found);
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace overlay::detail

namespace overlay {
class Graph;
}

namespace overlay::detail {
/// graph := int ':' [ int '-' int ( ',' int '-' int )* ]
Graph parse_graph(Cursor& cursor);
}  // namespace overlay::detail
