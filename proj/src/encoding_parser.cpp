#include <cctype>
#include <charconv>
#include <optional>

#include "gregcycle/period28.hpp"

namespace gregcycle {

namespace {

// encoding := piece+
// piece    := "(" INT ")" INT
// Whitespace may separate any two tokens.
class EncodingParser {
 public:
  EncodingParser(std::string_view text, ParseMode mode) : text_(text), mode_(mode) {}

  std::vector<Segment> parse() {
    std::vector<Segment> segments;
    skip_ws();
    if (at_end()) fail(pos_, "empty encoding");
    while (!at_end()) {
      segments.push_back(piece());
      skip_ws();
    }
    return segments;
  }

 private:
  Segment piece() {
    expect('(', "expected '(' to open a skip");
    const int skip = integer("expected skip count");
    expect(')', "expected ')' to close the skip");
    skip_ws();
    const std::size_t length_pos = pos_;
    if (at_end()) {
      fail(length_pos, "dangling skip (" + std::to_string(skip) + ") with no length");
    }
    if (peek() == '(') {
      if (auto repaired = parenthesised_final_length()) return {skip, *repaired};
      fail(length_pos, mode_ == ParseMode::Strict
                           ? "expected length after skip, found '(' (a parenthesised final length "
                             "is accepted only in lenient mode)"
                           : "expected length after skip, found '('");
    }
    return {skip, integer("expected length")};
  }

  // "(INT)" followed only by whitespace, read as the final length.
  std::optional<int> parenthesised_final_length() {
    if (mode_ != ParseMode::Lenient) return std::nullopt;
    const std::size_t saved = pos_;
    ++pos_;
    skip_ws();
    if (at_end() || !is_digit(peek())) {
      pos_ = saved;
      return std::nullopt;
    }
    const int value = integer("expected length");
    skip_ws();
    if (at_end() || peek() != ')') {
      pos_ = saved;
      return std::nullopt;
    }
    ++pos_;
    skip_ws();
    if (!at_end()) {
      pos_ = saved;
      return std::nullopt;
    }
    return value;
  }

  int integer(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (start == pos_) {
      fail(start, at_end() ? std::string(what) + ", found end of input"
                           : std::string(what) + ", found '" + peek() + "'");
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail(start, "integer out of range");
    return value;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (at_end()) fail(pos_, std::string(what) + ", found end of input");
    if (peek() != c) fail(pos_, std::string(what) + ", found '" + peek() + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw EncodingError(EncodingError::Kind::Syntax, at,
                        "syntax error at offset " + std::to_string(at) + ": " + msg);
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  ParseMode mode_;
  std::size_t pos_ = 0;
};

}  // namespace

PieceEncoding parse_encoding(std::string_view text, ParseMode mode) {
  return PieceEncoding(EncodingParser(text, mode).parse());
}

}  // namespace gregcycle
