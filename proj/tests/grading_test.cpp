#include <gtest/gtest.h>

#include "grassmann/construction.hpp"
#include "grassmann/grading.hpp"
#include "oracles.hpp"

namespace grassmann {
namespace {

using V = HomogeneousKind::Variant;

Element E(const char* text) { return parse_element(text); }
GradedPolynomial P(const char* text) { return parse_graded_polynomial(text); }

const AutomorphismSpec canonical = homogeneous({V::Canonical, 0});

TEST(KernelTest, Examples) {
  auto minus = fixed_line_kernel(canonical, 6, -1);
  ASSERT_EQ(minus.size(), 6U);
  for (Index i = 1; i <= 6; ++i) EXPECT_EQ(minus[i - 1], Element::generator(i));
  EXPECT_TRUE(fixed_line_kernel(canonical, 6, 1).empty());

  EXPECT_TRUE(fixed_line_kernel(method_c(), 12, 1).empty());
  EXPECT_TRUE(fixed_line_kernel(method_c(), 12, -1).empty());

  auto pm = fixed_line_kernel(testing::prop_minus(), 5, -1);
  ASSERT_EQ(pm.size(), 1U);
  EXPECT_EQ(pm[0], E("e1"));
  EXPECT_TRUE(fixed_line_kernel(testing::prop_minus(), 5, 1).empty());

  EXPECT_THROW(fixed_line_kernel(canonical, 3, 2), std::invalid_argument);
}

TEST(KernelTest, FindsNonBasisFixedLines) {
  // e1 -> e2, e2 -> e1 swaps two generators: e1 + e2 is fixed, e1 - e2 negated.
  AutomorphismSpec swap;
  swap.name = "swap";
  swap.rule = CustomFinite{{{1, E("e2")}, {2, E("e1")}}, -1};
  ASSERT_TRUE(check_involution(swap, 4).holds());
  auto plus = fixed_line_kernel(swap, 4, 1);
  ASSERT_EQ(plus.size(), 1U);
  EXPECT_EQ(plus[0], E("e1 + e2"));
  auto minus = fixed_line_kernel(swap, 4, -1);
  ASSERT_EQ(minus.size(), 3U);
  EXPECT_EQ(minus[0], E("-e1 + e2"));

  TypeReport r = classify(swap, 4);
  EXPECT_EQ(r.i_beta, (std::vector<Index>{3, 4}));
  EXPECT_EQ(r.type, GradingType::Type2);
}

TEST(KernelTest, AgreesWithBruteForceOverSmallCoefficients) {
  const Index bound = 4;
  for (const auto& spec : testing::builtin_specs()) {
    for (int sign : {1, -1}) {
      auto basis = fixed_line_kernel(spec, bound, sign);
      std::vector<RationalVector> coords;
      for (const auto& v : basis) {
        ASSERT_EQ(apply(spec, v), Scalar(sign) * v) << spec.name;
        coords.push_back(testing::coordinates(v, bound));
      }
      std::vector<RationalVector> found;
      std::vector<int> c(bound, -1);
      for (int n = 0; n < 81; ++n) {
        Element v;
        for (Index i = 0; i < bound; ++i) v.add_term(Monomial::generator(i + 1), Scalar(c[i]));
        if (apply(spec, v) == Scalar(sign) * v) {
          ASSERT_TRUE(testing::in_span(coords, testing::coordinates(v, bound))) << spec.name << " " << to_string(v);
          found.push_back(testing::coordinates(v, bound));
        }
        for (Index i = 0; i < bound; ++i) {
          if (++c[i] <= 1) break;
          c[i] = -1;
        }
      }
      EXPECT_EQ(testing::oracle_rank(found), basis.size()) << spec.name << " sign " << sign;
    }
  }
}

TEST(ClassifyTest, Examples) {
  TypeReport inf = classify(homogeneous({V::Infty, 0}), 20);
  EXPECT_EQ(inf.type, GradingType::Type1);
  EXPECT_EQ(inf.i_beta.size(), 20U);

  TypeReport a = classify(testing::method_a_example(), 20);
  EXPECT_EQ(a.type, GradingType::Type2);
  ASSERT_EQ(a.i_beta.size(), 19U);
  EXPECT_EQ(a.i_beta.front(), 2U);

  TypeReport c = classify(method_c(), 12);
  EXPECT_EQ(c.type, GradingType::Type4Candidate);
  EXPECT_TRUE(c.i_beta.empty());
  EXPECT_TRUE(c.structural_certificate.has_value());

  TypeReport b = classify(method_b({.k = 1, .t = 1, .lambda = 1, .lambda_overrides = {}}), 20);
  EXPECT_EQ(b.type, GradingType::Type3Candidate);
  EXPECT_EQ(b.i_beta, (std::vector<Index>{1, 2}));

  TypeReport pm = classify(testing::prop_minus(), 10);
  EXPECT_EQ(pm.type, GradingType::Type3Candidate);
  EXPECT_EQ(pm.i_beta, (std::vector<Index>{1}));

  EXPECT_EQ(classify(homogeneous({V::K, 3}), 20).type, GradingType::Type1);
}

TEST(ClassifyTest, BoundBelowHorizonIsUndetermined) {
  AutomorphismSpec spec = method_b({.k = 3, .t = 3, .lambda = 1, .lambda_overrides = {}});
  TypeReport r = classify(spec, 4);
  EXPECT_EQ(r.type, GradingType::Undetermined);
  EXPECT_EQ(classify(spec, 8).type, GradingType::Type3Candidate);
}

TEST(ClassifyTest, ComposedRulesUseKernelEvidence) {
  AutomorphismSpec s = compose(homogeneous({V::Trivial, 0}), method_c());
  TypeReport r = classify(s, 8);
  EXPECT_EQ(r.type, GradingType::Type4Candidate);
  EXPECT_EQ(classify(compose(canonical, canonical), 5).type, GradingType::Undetermined);
}

TEST(ClassifyTest, EmptyKernelsImplyEmptyIBeta) {
  for (const auto& spec : testing::builtin_specs()) {
    TypeReport r = classify(spec, 8);
    if (r.kernel_plus.empty() && r.kernel_minus.empty()) EXPECT_TRUE(r.i_beta.empty()) << spec.name;
    for (Index i : r.i_beta) {
      // Every standard-basis member of I_beta lies in one of the kernels.
      Element ei = Element::generator(i);
      std::vector<RationalVector> plus, minus;
      for (const auto& v : r.kernel_plus) plus.push_back(testing::coordinates(v, 8));
      for (const auto& v : r.kernel_minus) minus.push_back(testing::coordinates(v, 8));
      EXPECT_TRUE(testing::in_span(plus, testing::coordinates(ei, 8)) ||
                  testing::in_span(minus, testing::coordinates(ei, 8)));
    }
  }
}

TEST(ClassifyTest, ReportRendersAsJson) {
  auto j = to_json(classify(testing::prop_minus(), 5));
  EXPECT_EQ(j["type"], "Type3(candidate)");
  EXPECT_EQ(j["kernel_minus"][0], "e1");
  EXPECT_EQ(j["i_beta"], nlohmann::json::array({1}));
}

TEST(GradedPolynomialTest, Parse) {
  GradedPolynomial p = P("[y1,y2]");
  EXPECT_EQ(to_string(p), "y1*y2 - y2*y1");
  EXPECT_EQ(P("z1*z2 + z2*z1"), P("z2 z1 + z1 z2"));
  EXPECT_EQ(P("2*(y1 - 1/2*z3)*z1"), P("2*y1*z1 - z3*z1"));
  EXPECT_EQ(P("[[y1,z1],z2]"), P("y1 z1 z2 - z1 y1 z2 - z2 y1 z1 + z2 z1 y1"));
  EXPECT_EQ(P("[y1,y1]"), GradedPolynomial());
  EXPECT_EQ(p.variables().size(), 2U);
  EXPECT_THROW(P("x1"), ParseError);
  EXPECT_THROW(P("[y1 y2]"), ParseError);
  EXPECT_THROW(P("y0"), ParseError);
  EXPECT_THROW(P("y1 +"), ParseError);
}

TEST(EvalTest, Examples) {
  Assignment ys{{GradedVariable::y(1), E("1 + e1e2")}, {GradedVariable::y(2), E("e3e4 - 2*e1e5")}};
  EXPECT_TRUE(eval_graded_poly(P("[y1,y2]"), ys, canonical).is_zero());

  Assignment zs{{GradedVariable::z(1), E("e1")}, {GradedVariable::z(2), E("e2")}};
  EXPECT_TRUE(eval_graded_poly(P("z1 z2 + z2 z1"), zs, canonical).is_zero());
  EXPECT_EQ(eval_graded_poly(P("[z1,z2]"), zs, canonical), E("2*e1e2"));

  // Under KStar(1) only e_1 has degree 1.
  AutomorphismSpec kstar1 = homogeneous({V::KStar, 1});
  Assignment same{{GradedVariable::z(1), E("e1")}, {GradedVariable::z(2), E("e1")}};
  EXPECT_TRUE(eval_graded_poly(P("z1 z2 + z2 z1"), same, kstar1).is_zero());
  EXPECT_EQ(eval_graded_poly(P("3"), {}, kstar1), E("3"));
}

TEST(EvalTest, RejectsInhomogeneousValues) {
  Assignment bad{{GradedVariable::y(1), E("e1")}, {GradedVariable::y(2), E("1")}};
  try {
    eval_graded_poly(P("[y1,y2]"), bad, canonical);
    FAIL() << "expected DegreeMismatch";
  } catch (const DegreeMismatch& e) {
    EXPECT_EQ(e.variable(), GradedVariable::y(1));
  }
  Assignment mixed{{GradedVariable::z(1), E("e1 + e1e2")}};
  EXPECT_THROW(eval_graded_poly(P("z1"), mixed, canonical), DegreeMismatch);
  EXPECT_THROW(eval_graded_poly(P("z1 z2"), {{GradedVariable::z(1), E("e1")}}, canonical), std::invalid_argument);
  // e1e2 is not homogeneous for prop_minus: phi(e1e2) = e1e2 - 2 e1e1e2 = e1e2, so it is;
  // e2 alone is not.
  EXPECT_NO_THROW(eval_graded_poly(P("y1"), {{GradedVariable::y(1), E("e1e2")}}, testing::prop_minus()));
  EXPECT_THROW(eval_graded_poly(P("z1"), {{GradedVariable::z(1), E("e2")}}, testing::prop_minus()), DegreeMismatch);
}

TEST(HomogeneityTest, MatchesProjection) {
  AutomorphismSpec spec = testing::method_a_example();
  EXPECT_TRUE(is_homogeneous(spec, E("e2e3e4"), 0));
  EXPECT_TRUE(is_homogeneous(spec, E("e1 - 1/2*e2e3e4"), 1));
  EXPECT_FALSE(is_homogeneous(spec, E("e1"), 0));
  EXPECT_FALSE(is_homogeneous(spec, E("e1"), 1));
  EXPECT_TRUE(is_homogeneous(spec, Element::zero(), 0));
  EXPECT_TRUE(is_homogeneous(spec, Element::zero(), 1));
}

TEST(FalsifyTest, Examples) {
  Verdict v = falsify_identity(P("[y1,y2]"), canonical, 6, 100, 0);
  EXPECT_EQ(v.status, Status::NotFalsified);
  EXPECT_EQ(*v.trials, 100U);
  EXPECT_EQ(*v.seed, 0U);

  v = falsify_identity(P("[z1,z2]"), canonical, 4, 20, 0);
  ASSERT_EQ(v.status, Status::Counterexample);
  ASSERT_EQ(v.counterexample->assignment.size(), 2U);

  v = falsify_identity(P("[y1,y2]"), homogeneous({V::Trivial, 0}), 4, 50, 1);
  EXPECT_EQ(v.status, Status::Counterexample);
}

TEST(FalsifyTest, CounterexamplesReevaluateToNonzero) {
  struct Case {
    const char* poly;
    AutomorphismSpec grading;
  };
  std::vector<Case> cases = {{"[z1,z2]", canonical},
                             {"[y1,y2]", homogeneous({V::Trivial, 0})},
                             {"[y1,y2]", testing::method_a_example()},
                             {"z1 z2 + z2 z1", homogeneous({V::K, 3})},
                             {"[y1,z1]", homogeneous({V::Infty, 0})}};
  for (const auto& c : cases) {
    GradedPolynomial p = P(c.poly);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Verdict v = falsify_identity(p, c.grading, 6, 100, seed);
      ASSERT_EQ(v.status, Status::Counterexample) << c.poly << " on " << c.grading.name;
      Assignment a;
      for (const auto& [name, value] : v.counterexample->assignment) {
        a.emplace(GradedVariable{name[0] == 'y' ? 0 : 1, static_cast<std::uint32_t>(std::stoul(name.substr(1)))},
                  value);
      }
      Element again = eval_graded_poly(p, a, c.grading);
      EXPECT_FALSE(again.is_zero());
      EXPECT_EQ(again, v.counterexample->residual);
    }
  }
}

TEST(FalsifyTest, DeterministicInSeed) {
  Verdict a = falsify_identity(P("[z1,z2] + z1 z1"), canonical, 8, 10, 42);
  Verdict b = falsify_identity(P("[z1,z2] + z1 z1"), canonical, 8, 10, 42);
  EXPECT_EQ(to_json(a), to_json(b));
}

TEST(FalsifyTest, DegreeZeroOfPropMinusIsCentral) {
  // The degree-0 component of this grading is the centre of E.
  EXPECT_EQ(falsify_identity(P("[y1,y2]"), testing::prop_minus(), 6, 100, 3).status, Status::NotFalsified);
  EXPECT_EQ(falsify_identity(P("[y1,z1]"), testing::prop_minus(), 6, 100, 3).status, Status::NotFalsified);
}

TEST(ExhaustiveTest, CanonicalGrading) {
  Verdict v = exhaustive_falsify(P("z1*z1"), canonical, 3, 1);
  EXPECT_EQ(v.status, Status::NotFalsified);
  EXPECT_EQ(*v.trials, 81U);  // 3^4 odd values in e1..e3

  v = exhaustive_falsify(P("[z1,z2]"), canonical, 3, 1);
  ASSERT_EQ(v.status, Status::Counterexample);
  EXPECT_FALSE(v.counterexample->residual.is_zero());

  v = exhaustive_falsify(P("[y1,y2]"), canonical, 3, 1);
  EXPECT_EQ(v.status, Status::NotFalsified);
  EXPECT_EQ(*v.trials, 81U * 81U);
}

TEST(ExhaustiveTest, NonHomogeneousGradings) {
  EXPECT_EQ(exhaustive_falsify(P("[y1,y2]"), testing::prop_minus(), 3, 1).status, Status::NotFalsified);
  EXPECT_EQ(exhaustive_falsify(P("[y1,z1]"), testing::prop_minus(), 3, 1).status, Status::NotFalsified);
  Verdict v = exhaustive_falsify(P("[y1,y2]"), testing::method_a_example(), 4, 1);
  EXPECT_EQ(v.status, Status::Counterexample);
}

TEST(ExhaustiveTest, AgreesWithRandomSearchOnMixedPolynomials) {
  // Dense integer evaluation and eval_graded_poly must agree on which
  // polynomials vanish.
  std::vector<const char*> polys = {"[y1,z1]", "z1 z2 z3 + z3 z2 z1", "1/2*[z1,z2] - z1 z2", "y1 z1 - z1 y1 + 2"};
  for (const char* text : polys) {
    GradedPolynomial p = P(text);
    Verdict exhaustive = exhaustive_falsify(p, canonical, 3, 1);
    Verdict random = falsify_identity(p, canonical, 3, 300, 9);
    EXPECT_EQ(exhaustive.status == Status::Counterexample, random.status == Status::Counterexample) << text;
  }
}

TEST(ExhaustiveTest, LimitsAreEnforced) {
  EXPECT_THROW(exhaustive_falsify(P("z1"), canonical, 0, 1), std::invalid_argument);
  EXPECT_THROW(exhaustive_falsify(P("z1"), canonical, 11, 1), std::invalid_argument);
  EXPECT_THROW(exhaustive_falsify(P("z1 z2 z3 z4"), canonical, 6, 1), std::invalid_argument);
}

}  // namespace
}  // namespace grassmann
