#pragma once

#include <cstddef>
#include <vector>

#include "grassmann/scalar.hpp"

namespace grassmann {

using RationalVector = std::vector<Scalar>;
using RationalMatrix = std::vector<RationalVector>;  // row-major, rectangular

struct RowEchelon {
  RationalMatrix rows;              // nonzero rows of the reduced form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
RowEchelon row_reduce(RationalMatrix m, std::size_t cols);

std::size_t rank(const RationalMatrix& m, std::size_t cols);

// Basis of {x : m x = 0}, one vector per free column, with that column set
// to 1. Ordered by free column.
std::vector<RationalVector> nullspace(const RationalMatrix& m, std::size_t cols);

}  // namespace grassmann
