#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace grassmann {

// Exact rationals; mpq_class keeps values in lowest terms after every
// arithmetic operation.
using Scalar = mpq_class;

// Parses "p" or "p/q" with an optional leading sign. Throws
// std::invalid_argument on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);

}  // namespace grassmann
