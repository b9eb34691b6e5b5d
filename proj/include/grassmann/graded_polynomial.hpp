#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "grassmann/scalar.hpp"

namespace grassmann {

// y_k (degree 0) or z_k (degree 1) of the free superalgebra F<Y u Z>.
struct GradedVariable {
  int degree = 0;
  std::uint32_t index = 1;

  static GradedVariable y(std::uint32_t k) { return {0, k}; }
  static GradedVariable z(std::uint32_t k) { return {1, k}; }
  std::string name() const;

  friend auto operator<=>(const GradedVariable&, const GradedVariable&) = default;
};

// A noncommutative word; the empty word is the unit.
using Word = std::vector<GradedVariable>;

class GradedPolynomial {
 public:
  using Terms = std::map<Word, Scalar>;

  GradedPolynomial() = default;
  static GradedPolynomial constant(const Scalar& c);
  static GradedPolynomial variable(GradedVariable v);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::set<GradedVariable> variables() const;
  void add_term(const Word& w, const Scalar& c);

  GradedPolynomial& operator+=(const GradedPolynomial& o);
  GradedPolynomial& operator-=(const GradedPolynomial& o);
  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
  // Concatenation of words.
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
  friend bool operator==(const GradedPolynomial&, const GradedPolynomial&) = default;

 private:
  Terms terms_;
};

// [a, b] = ab - ba
GradedPolynomial commutator(const GradedPolynomial& a, const GradedPolynomial& b);

std::string to_string(const GradedPolynomial& p);

// Variables y1, y2, ..., z1, z2, ...; operators + - *; integer or rational
// coefficients; parentheses; [a,b] for the commutator. Juxtaposition
// multiplies. Throws ParseError.
GradedPolynomial parse_graded_polynomial(std::string_view text);

}  // namespace grassmann
