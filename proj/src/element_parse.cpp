#include <cctype>
#include <limits>

#include "grassmann/element.hpp"

namespace grassmann {

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (['*'] factor)*
// factor := number | 'e' digits | '(' expr ')'
// number := digits ['/' digits]
class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  Element parse() {
    Element e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  bool starts_factor() {
    char c = peek();
    return is_digit(c) || c == 'e' || c == '(';
  }

  Element expr() {
    Element acc;
    bool negate = false;
    if (char c = peek(); c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    for (;;) {
      Element t = term();
      if (negate) acc -= t; else acc += t;
      char c = peek();
      if (c != '+' && c != '-') break;
      negate = c == '-';
      ++pos_;
    }
    return acc;
  }

  Element term() {
    Element acc = factor();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Element factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Element inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'e') {
      ++pos_;
      std::size_t at = pos_;
      std::string_view d = digits();
      if (d.empty()) fail("expected generator index after 'e'");
      unsigned long long v = 0;
      for (char ch : d) {
        v = v * 10 + static_cast<unsigned>(ch - '0');
        if (v > std::numeric_limits<Index>::max()) throw ParseError("generator index too large", at);
      }
      if (v == 0) throw ParseError("generator index must be >= 1", at);
      return Element::generator(static_cast<Index>(v));
    }
    if (is_digit(c)) {
      std::size_t start = pos_;
      digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (digits().empty()) fail("expected denominator");
      }
      try {
        return Element::scalar(parse_scalar(text_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text) { return ElementParser(text).parse(); }

}  // namespace grassmann
