#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "grassmann/grading.hpp"
#include "grassmann/rational_linalg.hpp"

namespace grassmann {

namespace {

// Generators e_1..e_16 fit a 16-bit mask; e_i is bit i-1.
constexpr Index kMaxDenseIndex = 16;
constexpr Index kMaxSupport = 10;
constexpr std::uint64_t kMaxCandidates = 5'000'000;
constexpr std::uint64_t kMaxCombinations = 2'000'000'000;

struct SparseInt {
  std::vector<std::uint32_t> masks;
  std::vector<std::int64_t> coefs;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exhaustive_falsify: coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exhaustive_falsify: coefficient overflow");
  return r;
}

// Sign of the product of monomials with disjoint masks a and b: each index
// of b moves past every larger index of a.
int mask_sign(std::uint32_t a, std::uint32_t b) {
  unsigned parity = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    parity += static_cast<unsigned>(std::popcount(a >> (j + 1)));
  }
  return (parity & 1U) ? -1 : 1;
}

// Dense accumulator over the monomials of e_1..e_n.
class DenseBuffer {
 public:
  explicit DenseBuffer(Index n) : values_(std::size_t{1} << n, 0), seen_(std::size_t{1} << n, 0) {}

  void add(std::uint32_t mask, std::int64_t c) {
    if (!seen_[mask]) {
      seen_[mask] = 1;
      touched_.push_back(mask);
    }
    values_[mask] = checked_add(values_[mask], c);
  }

  bool is_zero() const {
    for (std::uint32_t m : touched_) {
      if (values_[m] != 0) return false;
    }
    return true;
  }

  void drain_into(SparseInt& out) {
    out.masks.clear();
    out.coefs.clear();
    for (std::uint32_t m : touched_) {
      if (values_[m] != 0) {
        out.masks.push_back(m);
        out.coefs.push_back(values_[m]);
      }
    }
    clear();
  }

  void clear() {
    for (std::uint32_t m : touched_) {
      values_[m] = 0;
      seen_[m] = 0;
    }
    touched_.clear();
  }

 private:
  std::vector<std::int64_t> values_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint32_t> touched_;
};

class SignTable {
 public:
  explicit SignTable(Index n) : n_(n) {
    if (n_ <= 8) {
      const std::uint32_t size = 1U << n_;
      table_.resize(std::size_t{size} * size);
      for (std::uint32_t a = 0; a < size; ++a) {
        for (std::uint32_t b = 0; b < size; ++b) {
          table_[(a << n_) | b] = static_cast<std::int8_t>((a & b) ? 0 : mask_sign(a, b));
        }
      }
    }
  }

  int operator()(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[(a << n_) | b];
    return (a & b) ? 0 : mask_sign(a, b);
  }

 private:
  Index n_;
  std::vector<std::int8_t> table_;
};

// out += scale * a * b
void multiply_into(const SparseInt& a, const SparseInt& b, std::int64_t scale, const SignTable& sign,
                   DenseBuffer& out) {
  for (std::size_t i = 0; i < a.masks.size(); ++i) {
    const std::int64_t ca = checked_mul(a.coefs[i], scale);
    for (std::size_t j = 0; j < b.masks.size(); ++j) {
      int s = sign(a.masks[i], b.masks[j]);
      if (s == 0) continue;
      std::int64_t c = checked_mul(ca, b.coefs[j]);
      out.add(a.masks[i] | b.masks[j], s > 0 ? c : -c);
    }
  }
}

Monomial monomial_of_mask(std::uint32_t mask) {
  std::vector<Index> idx;
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    idx.push_back(static_cast<Index>(std::countr_zero(rest)) + 1);
  }
  return Monomial(std::move(idx));
}

Element element_of(const SparseInt& s) {
  Element e;
  for (std::size_t k = 0; k < s.masks.size(); ++k) {
    e.add_term(monomial_of_mask(s.masks[k]), Scalar(static_cast<long>(s.coefs[k])));
  }
  return e;
}

// Primitive integer vectors spanning the degree-`degree` component of the
// projections of all monomials in e_1..e_support.
std::vector<Element> homogeneous_basis(const AutomorphismSpec& grading, Index support, int degree) {
  std::vector<Element> parts;
  std::map<Monomial, std::size_t> col_of;
  for (std::uint32_t mask = 0; mask < (1U << support); ++mask) {
    Projection p = project(grading, Element(monomial_of_mask(mask)));
    Element part = degree == 0 ? p.a0 : p.a1;
    for (const auto& [m, c] : part.terms()) col_of.try_emplace(m, 0);
    parts.push_back(std::move(part));
  }
  std::vector<Monomial> cols;
  std::size_t next = 0;
  for (auto& [m, k] : col_of) {
    k = next++;
    cols.push_back(m);
  }
  RationalMatrix rows(parts.size(), RationalVector(cols.size(), Scalar(0)));
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (const auto& [m, c] : parts[r].terms()) rows[r][col_of[m]] = c;
  }
  std::vector<Element> basis;
  for (const RationalVector& row : row_reduce(std::move(rows), cols.size()).rows) {
    mpz_class lcm = 1;
    for (const Scalar& x : row) {
      if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    mpz_class gcd = 0;
    for (const Scalar& x : row) {
      if (x == 0) continue;
      mpz_class v = x.get_num() * (lcm / x.get_den());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
    }
    Element e;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] == 0) continue;
      mpz_class v = row[k].get_num() * (lcm / row[k].get_den()) / gcd;
      e.add_term(cols[k], Scalar(v));
    }
    basis.push_back(std::move(e));
  }
  return basis;
}

SparseInt to_sparse(const Element& e) {
  SparseInt s;
  for (const auto& [m, c] : e.terms()) {
    if (m.max_index() > kMaxDenseIndex) {
      throw std::invalid_argument("exhaustive_falsify: homogeneous basis leaves e_1..e_" +
                                  std::to_string(kMaxDenseIndex));
    }
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
      throw std::overflow_error("exhaustive_falsify: basis coefficient out of range");
    }
    std::uint32_t mask = 0;
    for (Index i : m.indices()) mask |= 1U << (i - 1);
    s.masks.push_back(mask);
    s.coefs.push_back(c.get_num().get_si());
  }
  return s;
}

std::vector<SparseInt> enumerate_candidates(const std::vector<SparseInt>& basis, int coeff_max,
                                            Index dense_n) {
  const std::uint64_t radix = 2 * static_cast<std::uint64_t>(coeff_max) + 1;
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    count *= radix;
    if (count > kMaxCandidates) {
      throw std::invalid_argument("exhaustive_falsify: too many candidate values per variable");
    }
  }
  std::vector<SparseInt> out;
  out.reserve(count);
  std::vector<int> coeffs(basis.size(), -coeff_max);
  DenseBuffer scratch(dense_n);
  for (std::uint64_t n = 0; n < count; ++n) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (coeffs[k] == 0) continue;
      for (std::size_t t = 0; t < basis[k].masks.size(); ++t) {
        scratch.add(basis[k].masks[t], checked_mul(coeffs[k], basis[k].coefs[t]));
      }
    }
    SparseInt value;
    scratch.drain_into(value);
    out.push_back(std::move(value));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (++coeffs[k] <= coeff_max) break;
      coeffs[k] = -coeff_max;
    }
  }
  return out;
}

}  // namespace

Verdict exhaustive_falsify(const GradedPolynomial& p, const AutomorphismSpec& grading, Index support,
                           int coeff_max) {
  if (support < 1 || support > kMaxSupport) {
    throw std::invalid_argument("exhaustive_falsify: support must be in [1, " + std::to_string(kMaxSupport) + "]");
  }
  if (coeff_max < 0) throw std::invalid_argument("exhaustive_falsify: coeff_max must be >= 0");

  const std::set<GradedVariable> var_set = p.variables();
  const std::vector<GradedVariable> vars(var_set.begin(), var_set.end());

  std::map<int, std::vector<SparseInt>> basis_of;
  Index dense_n = support;
  for (const GradedVariable& v : vars) {
    if (basis_of.count(v.degree)) continue;
    std::vector<SparseInt> sparse;
    for (const Element& e : homogeneous_basis(grading, support, v.degree)) {
      dense_n = std::max(dense_n, support_bound(e));
      sparse.push_back(to_sparse(e));
    }
    basis_of[v.degree] = std::move(sparse);
  }
  std::map<int, std::vector<SparseInt>> candidates_of;
  for (const auto& [degree, basis] : basis_of) {
    candidates_of[degree] = enumerate_candidates(basis, coeff_max, dense_n);
  }

  // Clear denominators; scaling by a nonzero integer does not change
  // whether the value vanishes.
  mpz_class lcm = 1;
  for (const auto& [w, c] : p.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  struct IntTerm {
    std::int64_t coef;
    std::vector<std::size_t> slots;
  };
  std::vector<IntTerm> terms;
  for (const auto& [w, c] : p.terms()) {
    mpz_class v = c.get_num() * (lcm / c.get_den());
    if (!v.fits_slong_p()) throw std::overflow_error("exhaustive_falsify: polynomial coefficient out of range");
    IntTerm t{v.get_si(), {}};
    for (const GradedVariable& x : w) {
      t.slots.push_back(static_cast<std::size_t>(std::find(vars.begin(), vars.end(), x) - vars.begin()));
    }
    terms.push_back(std::move(t));
  }

  std::vector<const std::vector<SparseInt>*> slot_candidates;
  std::uint64_t combinations = 1;
  for (const GradedVariable& v : vars) {
    slot_candidates.push_back(&candidates_of[v.degree]);
    const std::uint64_t n = slot_candidates.back()->size();
    if (n == 0) {
      combinations = 0;
      break;
    }
    if (combinations > kMaxCombinations / n) {
      throw std::invalid_argument("exhaustive_falsify: search space too large");
    }
    combinations *= n;
  }

  const SignTable sign(dense_n);
  DenseBuffer acc(dense_n);
  DenseBuffer scratch(dense_n);
  SparseInt prefix;
  const SparseInt unit{{0}, {1}};
  std::vector<std::size_t> choice(vars.size(), 0);

  for (std::uint64_t n = 0; n < combinations; ++n) {
    for (const IntTerm& t : terms) {
      if (t.slots.empty()) {
        acc.add(0, t.coef);
        continue;
      }
      const SparseInt* cur = &unit;
      for (std::size_t k = 0; k + 1 < t.slots.size(); ++k) {
        multiply_into(*cur, (*slot_candidates[t.slots[k]])[choice[t.slots[k]]], 1, sign, scratch);
        scratch.drain_into(prefix);
        cur = &prefix;
      }
      const std::size_t last = t.slots.back();
      multiply_into(*cur, (*slot_candidates[last])[choice[last]], t.coef, sign, acc);
    }
    if (!acc.is_zero()) {
      Assignment assignment;
      Counterexample cex;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        Element value = element_of((*slot_candidates[k])[choice[k]]);
        cex.assignment.emplace_back(vars[k].name(), value);
        assignment.emplace(vars[k], std::move(value));
      }
      cex.residual = eval_graded_poly(p, assignment, grading);
      if (cex.residual.is_zero()) {
        throw std::logic_error("exhaustive_falsify: dense evaluation disagrees with eval_graded_poly");
      }
      Verdict v = counterexample("exhaustive_falsify", support, std::move(cex));
      v.trials = n + 1;
      return v;
    }
    acc.clear();
    for (std::size_t k = vars.size(); k-- > 0;) {
      if (++choice[k] < slot_candidates[k]->size()) break;
      choice[k] = 0;
    }
  }
  Verdict v;
  v.check = "exhaustive_falsify";
  v.status = Status::NotFalsified;
  v.bound = support;
  v.trials = combinations;
  v.note = "exhaustive over homogeneous values in e_1..e_" + std::to_string(support) +
           " with coefficients in [-" + std::to_string(coeff_max) + ", " + std::to_string(coeff_max) + "]";
  return v;
}

}  // namespace grassmann
