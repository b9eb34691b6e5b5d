#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "grassmann/automorphism.hpp"

namespace grassmann {

// Degree assignments of the homogeneous gradings. Generators of degree 1 get
// sign -1, generators of degree 0 get sign +1.
struct HomogeneousKind {
  enum class Variant {
    K,          // degree 0 for i <= k, 1 otherwise
    KStar,      // degree 1 for i <= k, 0 otherwise
    Infty,      // degree 0 for even i, 1 for odd i
    Canonical,  // degree 1 everywhere
    Trivial,    // degree 0 everywhere
  };
  Variant variant = Variant::Canonical;
  std::uint32_t k = 0;
};

AutomorphismSpec homogeneous(HomogeneousKind kind);

// A finite or cofinite subset of {1, 2, ...}.
class IndexSet {
 public:
  IndexSet() = default;
  static IndexSet finite(std::set<Index> members);
  static IndexSet cofinite(std::set<Index> excluded);
  // {n, n+1, ...}
  static IndexSet from(Index n);

  bool contains(Index i) const;
  bool is_cofinite() const { return cofinite_; }
  // Members of a finite set, or the excluded indices of a cofinite one.
  const std::set<Index>& listed() const { return listed_; }

 private:
  bool cofinite_ = false;
  std::set<Index> listed_;
};

// I+ and I- are the sign-fixed generators; the keys of d form J, the
// perturbed generators e_j -> -e_j + d_j.
struct MethodAData {
  IndexSet plus;
  IndexSet minus;
  std::map<Index, Element> d;
};

struct MethodBData {
  std::uint32_t k = 0;
  std::uint32_t t = 1;
  Scalar lambda = 1;
  // Per-index lambda_n for n > k + t; other keys are ignored.
  std::map<Index, Scalar> lambda_overrides;
};

class ConstructionError : public std::invalid_argument {
 public:
  enum class Code { InvalidD, InvalidPartition, EvenT, ZeroLambda };

  ConstructionError(Code code, const std::string& what, Index index = 0,
                    int condition = 0)
      : std::invalid_argument(what), code_(code), index_(index), condition_(condition) {}

  Code code() const { return code_; }
  // Offending j for InvalidD, offending n for ZeroLambda.
  Index index() const { return index_; }
  // Violated condition (1, 2 or 3) for InvalidD.
  int condition() const { return condition_; }

 private:
  Code code_;
  Index index_;
  int condition_;
};

// Each d_j must (1) be odd, (2) use only indices from I = I+ u I-, and
// (3) have an even number of I- factors in every monomial. Throws
// ConstructionError naming the first violated condition.
AutomorphismSpec method_a(const MethodAData& data);

// e_n for n <= k, -e_n for k < n <= k+t, -e_n + lambda_n e_1...e_{k+t} e_n
// beyond. Throws ConstructionError for even t or a zero lambda.
AutomorphismSpec method_b(const MethodBData& data);

// The +-1 sequence driving method C: epsilon_{2n} = 1 and
// epsilon_{2n-1} = -1 iff n > 1 and 2^m <= n < 2^m + 2^(m-1) for some m,
// i.e. iff the bit just below the leading bit of n is clear.
int epsilon(std::uint64_t i);

// Holds(nmax) iff epsilon_1 ... epsilon_{2n+1} = -epsilon_n for 1 <= n <= nmax.
Verdict verify_lemma13(std::uint64_t nmax);

// e_i -> epsilon_i e_i + e_1 e_2 ... e_{2i+1}.
AutomorphismSpec method_c();

}  // namespace grassmann
