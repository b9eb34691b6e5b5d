#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>

#include "grassmann/element.hpp"
#include "grassmann/verdict.hpp"

namespace grassmann {

// e_i -> sign(i) e_i. The sign defaults by the parity of i and is overridden
// at finitely many indices.
struct SignRule {
  int odd_default = 1;
  int even_default = 1;
  std::map<Index, int> exceptions;

  static SignRule constant(int sign) { return {sign, sign, {}}; }
  int sign(Index i) const;
};

// e_i -> sign(i) e_i + d_i, with d_i nonzero for finitely many i.
struct PerturbedSignRule {
  SignRule base;
  std::map<Index, Element> perturbations;
};

// e_n -> head.sign(n) e_n for n <= threshold and
// e_n -> tail_sign e_n + lambda_n * prefix * e_n for n > threshold.
// All prefix indices must be <= threshold.
struct TailRule {
  SignRule head;
  Index threshold = 0;
  int tail_sign = -1;
  Monomial prefix;
  Scalar default_lambda = 1;
  std::map<Index, Scalar> lambda_overrides;

  Scalar lambda(Index n) const;
};

// e_i -> epsilon_i e_i + e_1 e_2 ... e_{2i+1}.
struct EpsilonRule {};

// Explicit images at finitely many indices; default_sign * e_i elsewhere.
struct CustomFinite {
  std::map<Index, Element> images;
  int default_sign = 1;
};

struct AutomorphismSpec;

// e_i -> outer(inner(e_i)).
struct ComposedRule {
  std::shared_ptr<const AutomorphismSpec> outer;
  std::shared_ptr<const AutomorphismSpec> inner;
};

using GeneratorRule = std::variant<SignRule, PerturbedSignRule, TailRule,
                                   EpsilonRule, CustomFinite, ComposedRule>;

struct Certification {
  enum class Kind {
    Unverified,
    // Involutivity is known only from bounded checks.
    BoundedEvidence,
    // Involutivity on every generator follows from the construction itself.
    Structural,
  };
  Kind kind = Kind::Unverified;
  std::uint64_t bound = 0;
  std::string justification;
};

std::string to_string(Certification::Kind k);

struct AutomorphismSpec {
  std::string name;
  GeneratorRule rule;
  Certification certified;
};

// Which generators the rule sends to +-e_i far out.
struct TailBehaviour {
  enum class Kind {
    Homogeneous,     // every index > horizon is in I_beta
    NonHomogeneous,  // no index > horizon is in I_beta
    Unknown,
  };
  Kind kind = Kind::Unknown;
  Index horizon = 0;
};

TailBehaviour tail_behaviour(const AutomorphismSpec& spec);
std::string rule_kind(const AutomorphismSpec& spec);

Element image_of_generator(const AutomorphismSpec& spec, Index i);

// Largest index occurring in lambda(e_1), ..., lambda(e_bound).
Index image_support_bound(const AutomorphismSpec& spec, Index bound);

// Linear extension of the generator map: each monomial goes to the ordered
// product of its generator images.
Element apply(const AutomorphismSpec& spec, const Element& a);

// lambda(e_i) lambda(e_j) + lambda(e_j) lambda(e_i)
Element anticommutator(const AutomorphismSpec& spec, Index i, Index j);

// Holds(bound) iff every anticommutator with 1 <= i <= j <= bound vanishes;
// otherwise the lexicographically smallest failing (i, j).
Verdict check_anticommute(const AutomorphismSpec& spec, Index bound);

// Holds(bound) iff phi(phi(e_i)) = e_i for all i <= bound. An endomorphism
// fixing every generator is the identity, so this is phi^2 = id restricted to
// the first `bound` generators. Rejected when anticommutation already fails.
Verdict check_involution(const AutomorphismSpec& spec, Index bound);

Verdict is_canonical_type(const AutomorphismSpec& spec, Index bound);

struct Projection {
  Element a0;  // +1 eigencomponent
  Element a1;  // -1 eigencomponent
};

// ((a + phi(a)) / 2, (a - phi(a)) / 2). Requires phi to be involutive on the
// generators involved.
Projection project(const AutomorphismSpec& spec, const Element& a);

// a_i = (e_i + phi(e_i)) / 2
Element fixed_component(const AutomorphismSpec& spec, Index i);

// image(compose(s1, s2), i) = apply(s1, image(s2, i)).
AutomorphismSpec compose(const AutomorphismSpec& s1, const AutomorphismSpec& s2);

}  // namespace grassmann
