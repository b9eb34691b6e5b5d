#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grassmann {

// Subscript i of the generator e_i. Always >= 1.
using Index = std::uint32_t;

struct MonomialProduct;

// A basis monomial e_{i1} e_{i2} ... e_{ik} with i1 < i2 < ... < ik.
// The empty monomial is the unit 1.
class Monomial {
 public:
  Monomial() = default;
  // Throws std::invalid_argument unless the indices are strictly increasing
  // and positive.
  explicit Monomial(std::vector<Index> indices);
  Monomial(std::initializer_list<Index> indices);

  static Monomial generator(Index i) { return Monomial({i}); }
  // e_1 e_2 ... e_n
  static Monomial prefix(Index n);

  std::span<const Index> indices() const { return indices_; }
  std::size_t degree() const { return indices_.size(); }
  bool is_unit() const { return indices_.empty(); }
  bool is_even() const { return indices_.size() % 2 == 0; }
  bool contains(Index i) const;
  // Largest index, 0 for the unit.
  Index max_index() const { return indices_.empty() ? 0 : indices_.back(); }

  // Canonical order: by length, then lexicographically.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  struct Unchecked {};
  Monomial(Unchecked, std::vector<Index> indices)
      : indices_(std::move(indices)) {}

  std::vector<Index> indices_;

  friend std::optional<MonomialProduct> mono_mul(const Monomial& x,
                                                 const Monomial& y);
};

struct MonomialProduct {
  int sign;  // +1 or -1
  Monomial product;
};

// x*y in E. Empty when x and y share an index; otherwise the sorted merge
// together with the sign (-1)^#{(a in x, b in y) : a > b}.
std::optional<MonomialProduct> mono_mul(const Monomial& x, const Monomial& y);

// "1" for the unit, otherwise "e1e2e5".
std::string to_string(const Monomial& m);

}  // namespace grassmann
