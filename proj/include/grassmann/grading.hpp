#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "grassmann/automorphism.hpp"
#include "grassmann/graded_polynomial.hpp"

namespace grassmann {

// Basis of {v in span(e_1..e_bound) : phi(v) = sign * v}, by exact
// elimination on the coefficients of phi(e_i) - sign * e_i.
std::vector<Element> fixed_line_kernel(const AutomorphismSpec& spec, Index bound, int sign);

enum class GradingType {
  Type1,           // every generator maps to +-itself
  Type2,           // infinitely many such generators, but not all
  Type3Candidate,  // finitely many, at least one (within the bound)
  Type4Candidate,  // no fixed line within span(e_1..e_bound)
  Undetermined,
};

std::string to_string(GradingType t);

struct TypeReport {
  std::string spec_name;
  Index bound = 0;
  // I_beta intersected with [1, bound].
  std::vector<Index> i_beta;
  std::vector<Element> kernel_plus;
  std::vector<Element> kernel_minus;
  GradingType type = GradingType::Undetermined;
  // Set when the rule itself proves the type beyond the bound.
  std::optional<std::string> structural_certificate;
  std::string reason;
};

// Classifies against the standard basis e_1, e_2, ... without changing
// basis; the kernels record any fixed lines the standard basis misses.
TypeReport classify(const AutomorphismSpec& spec, Index bound);

nlohmann::json to_json(const TypeReport& r);
std::string to_string(const TypeReport& r);

// True iff a lies in the degree-`degree` component of the grading.
bool is_homogeneous(const AutomorphismSpec& grading, const Element& a, int degree);

using Assignment = std::map<GradedVariable, Element>;

class DegreeMismatch : public std::invalid_argument {
 public:
  explicit DegreeMismatch(GradedVariable v)
      : std::invalid_argument("value for " + v.name() + " is not homogeneous of degree " +
                              std::to_string(v.degree)),
        variable_(v) {}
  GradedVariable variable() const { return variable_; }

 private:
  GradedVariable variable_;
};

// Substitutes and multiplies in E. Throws DegreeMismatch when a value is not
// homogeneous of its variable's degree in the grading, and
// std::invalid_argument when a variable has no value.
Element eval_graded_poly(const GradedPolynomial& p, const Assignment& assignment,
                         const AutomorphismSpec& grading);

// Random homogeneous substitutions with support <= bound. A Counterexample
// carries the substitution and the nonzero value; otherwise NotFalsified.
// Deterministic in seed.
Verdict falsify_identity(const GradedPolynomial& p, const AutomorphismSpec& grading,
                         Index bound, std::uint64_t trials, std::uint64_t seed);

// Every substitution whose values are combinations, with coefficients in
// [-coeff_max, coeff_max], of a basis of the homogeneous component of the
// grading inside the span of projected monomials in e_1..e_support.
// For the canonical grading that basis is the monomials of the right parity.
Verdict exhaustive_falsify(const GradedPolynomial& p, const AutomorphismSpec& grading,
                           Index support, int coeff_max);

}  // namespace grassmann
