#include "grassmann/graded_polynomial.hpp"

#include <cctype>
#include <limits>

#include "grassmann/element.hpp"

namespace grassmann {

std::string GradedVariable::name() const {
  return (degree == 0 ? "y" : "z") + std::to_string(index);
}

GradedPolynomial GradedPolynomial::constant(const Scalar& c) {
  GradedPolynomial p;
  p.add_term({}, c);
  return p;
}

GradedPolynomial GradedPolynomial::variable(GradedVariable v) {
  GradedPolynomial p;
  p.add_term({v}, Scalar(1));
  return p;
}

std::set<GradedVariable> GradedPolynomial::variables() const {
  std::set<GradedVariable> out;
  for (const auto& [w, c] : terms_) out.insert(w.begin(), w.end());
  return out;
}

void GradedPolynomial::add_term(const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
  GradedPolynomial out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

GradedPolynomial commutator(const GradedPolynomial& a, const GradedPolynomial& b) {
  return a * b - b * a;
}

std::string to_string(const GradedPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    bool negative = c < 0;
    Scalar magnitude = negative ? Scalar(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (w.empty()) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "*" : "") + w[k].name();
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  GradedPolynomial parse() {
    GradedPolynomial p = expr();
    if (peek() != '\0') fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  bool starts_factor() {
    char c = peek();
    return is_digit(c) || c == 'y' || c == 'z' || c == '(' || c == '[';
  }

  GradedPolynomial expr() {
    GradedPolynomial acc;
    bool negate = false;
    if (char c = peek(); c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    for (;;) {
      GradedPolynomial t = term();
      if (negate) acc -= t; else acc += t;
      char c = peek();
      if (c != '+' && c != '-') break;
      negate = c == '-';
      ++pos_;
    }
    return acc;
  }

  GradedPolynomial term() {
    GradedPolynomial acc = factor();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  GradedPolynomial factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      GradedPolynomial inner = expr();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      GradedPolynomial a = expr();
      expect(',');
      GradedPolynomial b = expr();
      expect(']');
      return commutator(a, b);
    }
    if (c == 'y' || c == 'z') {
      ++pos_;
      std::size_t at = pos_;
      std::string_view d = digits();
      if (d.empty()) fail(std::string("expected index after '") + c + "'");
      unsigned long long v = 0;
      for (char ch : d) {
        v = v * 10 + static_cast<unsigned>(ch - '0');
        if (v > std::numeric_limits<std::uint32_t>::max()) throw ParseError("variable index too large", at);
      }
      if (v == 0) throw ParseError("variable index must be >= 1", at);
      return GradedPolynomial::variable({c == 'y' ? 0 : 1, static_cast<std::uint32_t>(v)});
    }
    if (is_digit(c)) {
      std::size_t start = pos_;
      digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (digits().empty()) fail("expected denominator");
      }
      try {
        return GradedPolynomial::constant(parse_scalar(text_.substr(start, pos_ - start)));
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

GradedPolynomial parse_graded_polynomial(std::string_view text) {
  return PolynomialParser(text).parse();
}

}  // namespace grassmann
