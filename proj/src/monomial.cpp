#include "grassmann/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace grassmann {

Monomial::Monomial(std::vector<Index> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] == 0) {
      throw std::invalid_argument("generator index must be >= 1");
    }
    if (k > 0 && indices_[k - 1] >= indices_[k]) {
      throw std::invalid_argument("monomial indices must be strictly increasing");
    }
  }
}

Monomial::Monomial(std::initializer_list<Index> indices)
    : Monomial(std::vector<Index>(indices)) {}

Monomial Monomial::prefix(Index n) {
  std::vector<Index> v(n);
  for (Index i = 0; i < n; ++i) v[i] = i + 1;
  return Monomial(Unchecked{}, std::move(v));
}

bool Monomial::contains(Index i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.indices_.size() <=> b.indices_.size(); c != 0) return c;
  return a.indices_ <=> b.indices_;
}

std::optional<MonomialProduct> mono_mul(const Monomial& x, const Monomial& y) {
  const auto& a = x.indices_;
  const auto& b = y.indices_;
  std::vector<Index> merged;
  merged.reserve(a.size() + b.size());
  // Each time an element of y is emitted before the remaining elements of x,
  // it crosses every one of them.
  std::size_t inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      merged.push_back(a[i++]);
    } else {
      inversions += a.size() - i;
      merged.push_back(b[j++]);
    }
  }
  merged.insert(merged.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  merged.insert(merged.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return MonomialProduct{inversions % 2 == 0 ? 1 : -1,
                         Monomial(Monomial::Unchecked{}, std::move(merged))};
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (Index i : m.indices()) {
    out += 'e';
    out += std::to_string(i);
  }
  return out;
}

}  // namespace grassmann
