#include "grassmann/grading.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "grassmann/rational_linalg.hpp"

namespace grassmann {

std::vector<Element> fixed_line_kernel(const AutomorphismSpec& spec, Index bound, int sign) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  std::vector<Element> columns;
  std::map<Monomial, std::size_t> row_of;
  for (Index i = 1; i <= bound; ++i) {
    Element col = image_of_generator(spec, i) - Scalar(sign) * Element::generator(i);
    for (const auto& [m, c] : col.terms()) row_of.try_emplace(m, row_of.size());
    columns.push_back(std::move(col));
  }
  RationalMatrix matrix(row_of.size(), RationalVector(bound, Scalar(0)));
  for (Index i = 0; i < bound; ++i) {
    for (const auto& [m, c] : columns[i].terms()) matrix[row_of[m]][i] = c;
  }
  std::vector<Element> basis;
  for (const auto& v : nullspace(matrix, bound)) {
    Element e;
    for (Index i = 0; i < bound; ++i) e.add_term(Monomial::generator(i + 1), v[i]);
    basis.push_back(std::move(e));
  }
  return basis;
}

std::string to_string(GradingType t) {
  switch (t) {
    case GradingType::Type1: return "Type1";
    case GradingType::Type2: return "Type2";
    case GradingType::Type3Candidate: return "Type3(candidate)";
    case GradingType::Type4Candidate: return "Type4(candidate)";
    case GradingType::Undetermined: return "Undetermined";
  }
  return "?";
}

TypeReport classify(const AutomorphismSpec& spec, Index bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  TypeReport r;
  r.spec_name = spec.name;
  r.bound = bound;
  for (Index i = 1; i <= bound; ++i) {
    Element img = image_of_generator(spec, i);
    Element ei = Element::generator(i);
    if (img == ei || img == -ei) r.i_beta.push_back(i);
  }
  r.kernel_plus = fixed_line_kernel(spec, bound, 1);
  r.kernel_minus = fixed_line_kernel(spec, bound, -1);
  const bool kernels_empty = r.kernel_plus.empty() && r.kernel_minus.empty();

  using K = TailBehaviour::Kind;
  const TailBehaviour tail = tail_behaviour(spec);
  const bool decided = tail.kind != K::Unknown && bound >= tail.horizon;
  const std::string beyond = "every index > " + std::to_string(tail.horizon);

  if (decided && tail.kind == K::Homogeneous) {
    if (r.i_beta.size() == bound) {
      r.type = GradingType::Type1;
      r.reason = "all of 1.." + std::to_string(bound) + " and, by the rule, " + beyond + " lie in I_beta";
    } else {
      r.type = GradingType::Type2;
      r.reason = "by the rule " + beyond + " lies in I_beta, but some index <= " +
                 std::to_string(bound) + " does not";
    }
  } else if (decided && tail.kind == K::NonHomogeneous) {
    if (!r.i_beta.empty()) {
      r.type = GradingType::Type3Candidate;
      r.reason = "I_beta is finite (by the rule no index > " + std::to_string(tail.horizon) +
                 " lies in it) and nonempty";
    } else if (kernels_empty) {
      r.type = GradingType::Type4Candidate;
      r.reason = "no nonzero v in span(e_1..e_" + std::to_string(bound) + ") has phi(v) = +-v";
    } else {
      r.type = GradingType::Undetermined;
      r.reason = "I_beta is empty in the standard basis but fixed lines exist";
    }
  } else if (kernels_empty) {
    r.type = GradingType::Type4Candidate;
    r.reason = "no nonzero v in span(e_1..e_" + std::to_string(bound) + ") has phi(v) = +-v";
  } else {
    r.type = GradingType::Undetermined;
    r.reason = tail.kind == K::Unknown ? "rule gives no information about large indices"
                                       : "bound does not reach the rule's horizon " +
                                             std::to_string(tail.horizon);
  }
  if (std::holds_alternative<EpsilonRule>(spec.rule)) {
    r.structural_certificate =
        "phi(v) = +-v for v = sum a_k e_{i_k} forces sum a_k w_{i_k} = 0, and the monomials "
        "w_i = e_1...e_{2i+1} are linearly independent, so v = 0 on all of L";
  }
  return r;
}

nlohmann::json to_json(const TypeReport& r) {
  auto render = [](const std::vector<Element>& basis) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : basis) a.push_back(to_string(e));
    return a;
  };
  nlohmann::json j;
  j["check"] = "classify";
  j["spec"] = r.spec_name;
  j["bound"] = r.bound;
  j["type"] = to_string(r.type);
  j["i_beta"] = r.i_beta;
  j["kernel_plus"] = render(r.kernel_plus);
  j["kernel_minus"] = render(r.kernel_minus);
  j["reason"] = r.reason;
  if (r.structural_certificate) j["structural_certificate"] = *r.structural_certificate;
  return j;
}

std::string to_string(const TypeReport& r) {
  std::ostringstream out;
  auto list = [&out](const std::vector<Element>& basis) {
    if (basis.empty()) out << " (empty)";
    for (const auto& e : basis) out << "\n    " << to_string(e);
  };
  out << "spec: " << r.spec_name << "\n";
  out << "I_beta within [1, " << r.bound << "]: {";
  for (std::size_t k = 0; k < r.i_beta.size(); ++k) out << (k ? ", " : "") << r.i_beta[k];
  out << "}\n";
  out << "kernel(+1):";
  list(r.kernel_plus);
  out << "\nkernel(-1):";
  list(r.kernel_minus);
  out << "\ntype: " << to_string(r.type) << " (bound " << r.bound << ")\n";
  out << "reason: " << r.reason;
  if (r.structural_certificate) out << "\ncertificate: " << *r.structural_certificate;
  return out.str();
}

bool is_homogeneous(const AutomorphismSpec& grading, const Element& a, int degree) {
  Projection p = project(grading, a);
  return degree == 0 ? p.a1.is_zero() : p.a0.is_zero();
}

Element eval_graded_poly(const GradedPolynomial& p, const Assignment& assignment,
                         const AutomorphismSpec& grading) {
  for (const GradedVariable& v : p.variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw std::invalid_argument("no value for " + v.name());
    if (!is_homogeneous(grading, it->second, v.degree)) throw DegreeMismatch(v);
  }
  Element out;
  for (const auto& [word, c] : p.terms()) {
    Element prod = Element::scalar(c);
    for (const GradedVariable& v : word) {
      prod = prod * assignment.at(v);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

namespace {

Element random_element(std::mt19937_64& rng, Index bound) {
  std::uniform_int_distribution<int> n_terms(1, 4);
  std::uniform_int_distribution<Index> length(0, std::min<Index>(bound, 4));
  std::uniform_int_distribution<int> coeff(1, 3);
  std::bernoulli_distribution negative(0.5);
  std::vector<Index> pool(bound);
  for (Index i = 0; i < bound; ++i) pool[i] = i + 1;
  Element e;
  for (int t = n_terms(rng); t > 0; --t) {
    // Partial Fisher-Yates: the first `len` entries become a random subset.
    Index len = length(rng);
    for (Index k = 0; k < len; ++k) {
      std::uniform_int_distribution<Index> pick(k, bound - 1);
      std::swap(pool[k], pool[pick(rng)]);
    }
    std::vector<Index> idx(pool.begin(), pool.begin() + len);
    std::sort(idx.begin(), idx.end());
    int c = coeff(rng);
    e.add_term(Monomial(std::move(idx)), Scalar(negative(rng) ? -c : c));
  }
  return e;
}

}  // namespace

Verdict falsify_identity(const GradedPolynomial& p, const AutomorphismSpec& grading,
                         Index bound, std::uint64_t trials, std::uint64_t seed) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  constexpr int kRetries = 16;
  std::mt19937_64 rng(seed);
  const std::set<GradedVariable> vars = p.variables();
  std::uint64_t skipped = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Assignment assignment;
    bool complete = true;
    for (const GradedVariable& v : vars) {
      Element value;
      for (int attempt = 0; attempt < kRetries && value.is_zero(); ++attempt) {
        Projection parts = project(grading, random_element(rng, bound));
        value = v.degree == 0 ? parts.a0 : parts.a1;
      }
      if (value.is_zero()) {
        complete = false;
        break;
      }
      assignment.emplace(v, std::move(value));
    }
    if (!complete) {
      ++skipped;
      continue;
    }
    Element result = eval_graded_poly(p, assignment, grading);
    if (!result.is_zero()) {
      Counterexample cex;
      cex.indices = {static_cast<Index>(trial)};
      cex.residual = std::move(result);
      for (auto& [v, value] : assignment) cex.assignment.emplace_back(v.name(), value);
      Verdict verdict = counterexample("falsify_identity", bound, std::move(cex));
      verdict.trials = trial + 1;
      verdict.seed = seed;
      verdict.note = "found at trial " + std::to_string(trial);
      return verdict;
    }
  }
  Verdict verdict;
  verdict.check = "falsify_identity";
  verdict.status = Status::NotFalsified;
  verdict.bound = bound;
  verdict.trials = trials;
  verdict.seed = seed;
  if (skipped > 0) {
    verdict.note = std::to_string(skipped) + " trials skipped: no nonzero homogeneous value drawn";
  }
  return verdict;
}

}  // namespace grassmann
