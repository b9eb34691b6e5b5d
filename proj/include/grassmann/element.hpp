#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "grassmann/monomial.hpp"
#include "grassmann/scalar.hpp"

namespace grassmann {

// A finite Q-linear combination of basis monomials. Zero coefficients are
// never stored, so two elements are equal iff their term maps are equal.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;
  Element(const Scalar& c, Monomial m);
  explicit Element(Monomial m) : Element(Scalar(1), std::move(m)) {}

  static Element zero() { return {}; }
  static Element one() { return Element(Monomial{}); }
  static Element scalar(const Scalar& c) { return Element(c, Monomial{}); }
  static Element generator(Index i) { return Element(Monomial::generator(i)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Coefficient of m, zero when absent.
  Scalar coefficient(const Monomial& m) const;

  // Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& c);

  friend bool operator==(const Element& a, const Element& b) = default;

 private:
  Terms terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(Element a);
Element operator*(const Scalar& c, Element a);
// Product in E.
Element operator*(const Element& a, const Element& b);

inline Element add(const Element& a, const Element& b) { return a + b; }
inline Element scale(const Scalar& c, const Element& a) { return c * a; }
inline Element mul(const Element& a, const Element& b) { return a * b; }

struct ParityParts {
  Element even;
  Element odd;
};

// Splits a into its E_(0) (even length, including 1) and E_(1) parts.
ParityParts parity_split(const Element& a);

// Largest generator index occurring in a; 0 for scalars and for zero.
Index support_bound(const Element& a);

// Renders terms in canonical monomial order: "1 - 2*e1e2 + e2e3e4".
std::string to_string(const Element& a);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Parses the rendering grammar above. Generators may appear in any order
// ("e2e1" is -e1e2), factors may be separated by '*', coefficients may be
// rationals and parentheses group sub-expressions.
Element parse_element(std::string_view text);

}  // namespace grassmann
