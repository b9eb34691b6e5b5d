#include "grassmann/rational_linalg.hpp"

#include <stdexcept>

namespace grassmann {

RowEchelon row_reduce(RationalMatrix m, std::size_t cols) {
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("row_reduce: ragged matrix");
  }
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Scalar inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Scalar f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m, std::size_t cols) {
  return row_reduce(m, cols).pivots.size();
}

std::vector<RationalVector> nullspace(const RationalMatrix& m, std::size_t cols) {
  RowEchelon e = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace grassmann
