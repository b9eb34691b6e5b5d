#include "grassmann/construction.hpp"

#include <bit>

namespace grassmann {

namespace {

std::string index_list(const IndexSet& s) {
  std::string out;
  for (Index i : s.listed()) out += (out.empty() ? "" : ",") + std::to_string(i);
  return (s.is_cofinite() ? "N\\{" : "{") + out + "}";
}

[[noreturn]] void invalid_partition(const std::string& why) {
  throw ConstructionError(ConstructionError::Code::InvalidPartition,
                          "method A: I+, I-, J do not partition N: " + why);
}

[[noreturn]] void invalid_d(Index j, int condition, const std::string& why) {
  throw ConstructionError(ConstructionError::Code::InvalidD,
                          "method A: d_" + std::to_string(j) + " violates condition (" +
                              std::to_string(condition) + "): " + why,
                          j, condition);
}

}  // namespace

AutomorphismSpec homogeneous(HomogeneousKind kind) {
  using V = HomogeneousKind::Variant;
  AutomorphismSpec spec;
  SignRule rule;
  switch (kind.variant) {
    case V::K:
      rule = SignRule::constant(-1);
      for (Index i = 1; i <= kind.k; ++i) rule.exceptions[i] = 1;
      spec.name = "homogeneous(k=" + std::to_string(kind.k) + ")";
      break;
    case V::KStar:
      rule = SignRule::constant(1);
      for (Index i = 1; i <= kind.k; ++i) rule.exceptions[i] = -1;
      spec.name = "homogeneous(k*=" + std::to_string(kind.k) + ")";
      break;
    case V::Infty:
      rule = SignRule{.odd_default = -1, .even_default = 1, .exceptions = {}};
      spec.name = "homogeneous(infty)";
      break;
    case V::Canonical:
      rule = SignRule::constant(-1);
      spec.name = "canonical";
      break;
    case V::Trivial:
      rule = SignRule::constant(1);
      spec.name = "trivial";
      break;
  }
  spec.rule = std::move(rule);
  spec.certified = {Certification::Kind::Structural, 0,
                    "phi(e_i) = +-e_i, so phi^2(e_i) = e_i for every i"};
  return spec;
}

IndexSet IndexSet::finite(std::set<Index> members) {
  IndexSet s;
  s.listed_ = std::move(members);
  return s;
}

IndexSet IndexSet::cofinite(std::set<Index> excluded) {
  IndexSet s;
  s.cofinite_ = true;
  s.listed_ = std::move(excluded);
  return s;
}

IndexSet IndexSet::from(Index n) {
  std::set<Index> excluded;
  for (Index i = 1; i < n; ++i) excluded.insert(i);
  return cofinite(std::move(excluded));
}

bool IndexSet::contains(Index i) const {
  return i >= 1 && (listed_.count(i) != 0) != cofinite_;
}

AutomorphismSpec method_a(const MethodAData& data) {
  const IndexSet& plus = data.plus;
  const IndexSet& minus = data.minus;
  if (plus.is_cofinite() && minus.is_cofinite()) {
    invalid_partition("I+ and I- are both cofinite, so they intersect");
  }
  if (!plus.is_cofinite() && !minus.is_cofinite()) {
    invalid_partition("I = I+ u I- is finite");
  }
  const bool plus_is_big = plus.is_cofinite();
  const IndexSet& big = plus_is_big ? plus : minus;
  const IndexSet& small = plus_is_big ? minus : plus;

  for (Index i : small.listed()) {
    if (i == 0) invalid_partition("index 0 in " + index_list(small));
    if (big.contains(i)) invalid_partition("I+ and I- share index " + std::to_string(i));
  }
  for (const auto& [j, dj] : data.d) {
    if (j == 0) invalid_partition("d is keyed by index 0");
    if (plus.contains(j) || minus.contains(j)) {
      invalid_partition("perturbed index " + std::to_string(j) + " also lies in I");
    }
  }
  for (Index i : big.listed()) {
    if (i == 0) continue;
    if (!small.contains(i) && data.d.count(i) == 0) {
      invalid_partition("index " + std::to_string(i) + " lies in none of I+, I-, J");
    }
  }
  if (data.d.empty()) invalid_partition("J is empty, so I = N");

  for (const auto& [j, dj] : data.d) {
    for (const auto& [m, c] : dj.terms()) {
      if (m.is_even()) invalid_d(j, 1, "monomial " + to_string(m) + " has even length");
    }
    for (const auto& [m, c] : dj.terms()) {
      for (Index i : m.indices()) {
        if (!plus.contains(i) && !minus.contains(i)) {
          invalid_d(j, 2, "monomial " + to_string(m) + " uses e" + std::to_string(i) + " outside I");
        }
      }
    }
    for (const auto& [m, c] : dj.terms()) {
      std::size_t minus_factors = 0;
      for (Index i : m.indices()) minus_factors += minus.contains(i) ? 1 : 0;
      if (minus_factors % 2 != 0) {
        invalid_d(j, 3, "monomial " + to_string(m) + " has an odd number of I- factors");
      }
    }
  }

  PerturbedSignRule rule;
  const int big_sign = plus_is_big ? 1 : -1;
  rule.base = SignRule::constant(big_sign);
  for (Index i : small.listed()) rule.base.exceptions[i] = -big_sign;
  for (const auto& [j, dj] : data.d) rule.base.exceptions[j] = -1;
  rule.perturbations = data.d;

  std::string name = "methodA(I+=" + index_list(plus) + ", I-=" + index_list(minus) + ", J={";
  bool first = true;
  for (const auto& [j, dj] : data.d) {
    name += (first ? "" : ",") + std::to_string(j);
    first = false;
  }
  AutomorphismSpec spec;
  spec.name = name + "})";
  spec.rule = std::move(rule);
  spec.certified = {Certification::Kind::Structural, 0,
                    "each d_j is odd with an even number of I- factors from I, so "
                    "phi(d_j) = d_j and phi^2(e_j) = -(-e_j + d_j) + d_j = e_j"};
  return spec;
}

AutomorphismSpec method_b(const MethodBData& data) {
  if (data.t % 2 == 0) {
    throw ConstructionError(ConstructionError::Code::EvenT,
                            "method B: t = " + std::to_string(data.t) + " must be odd");
  }
  const Index threshold = data.k + data.t;
  if (data.lambda == 0) {
    throw ConstructionError(ConstructionError::Code::ZeroLambda, "method B: lambda must be nonzero");
  }
  TailRule rule;
  for (const auto& [n, l] : data.lambda_overrides) {
    if (n <= threshold) continue;
    if (l == 0) {
      throw ConstructionError(ConstructionError::Code::ZeroLambda,
                              "method B: lambda_" + std::to_string(n) + " must be nonzero", n);
    }
    rule.lambda_overrides[n] = l;
  }
  rule.head = SignRule::constant(-1);
  for (Index i = 1; i <= data.k; ++i) rule.head.exceptions[i] = 1;
  rule.threshold = threshold;
  rule.tail_sign = -1;
  rule.prefix = Monomial::prefix(threshold);
  rule.default_lambda = data.lambda;

  AutomorphismSpec spec;
  spec.name = "methodB(k=" + std::to_string(data.k) + ", t=" + std::to_string(data.t) +
              ", lambda=" + to_string(data.lambda) + ")";
  spec.rule = std::move(rule);
  spec.certified = {Certification::Kind::Structural, 0,
                    "t odd: phi(e_1...e_{k+t}) = (-1)^t e_1...e_{k+t}, so the tail term "
                    "changes sign under phi and phi^2(e_n) = e_n"};
  return spec;
}

int epsilon(std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("epsilon is indexed from 1");
  if (i % 2 == 0) return 1;
  const std::uint64_t n = (i + 1) / 2;
  if (n < 2) return 1;
  // 2^m <= n < 2^(m+1) fixes m; then n < 2^m + 2^(m-1) iff bit m-1 is clear.
  const int m = std::bit_width(n) - 1;
  return ((n >> (m - 1)) & 1U) == 0 ? -1 : 1;
}

Verdict verify_lemma13(std::uint64_t nmax) {
  if (nmax < 1) throw std::invalid_argument("nmax must be >= 1");
  // product = epsilon_1 ... epsilon_{2n+1}, extended two factors per step.
  int product = epsilon(1);
  for (std::uint64_t n = 1; n <= nmax; ++n) {
    product *= epsilon(2 * n) * epsilon(2 * n + 1);
    if (product != -epsilon(n)) {
      Verdict v = counterexample(
          "lemma13", nmax,
          Counterexample{.indices = {static_cast<Index>(n)}, .residual = Element::scalar(product + epsilon(n))});
      v.note = "epsilon_1...epsilon_{2n+1} = " + std::to_string(product) + " but -epsilon_n = " +
               std::to_string(-epsilon(n));
      return v;
    }
  }
  return holds("lemma13", nmax);
}

AutomorphismSpec method_c() {
  AutomorphismSpec spec;
  spec.name = "methodC";
  spec.rule = EpsilonRule{};
  spec.certified = {Certification::Kind::Structural, 0,
                    "phi(w_i) = epsilon_1...epsilon_{2i+1} w_i = -epsilon_i w_i, so "
                    "phi^2(e_i) = e_i; the w_i are linearly independent, so no nonzero "
                    "v in L has phi(v) = +-v"};
  return spec;
}

}  // namespace grassmann
