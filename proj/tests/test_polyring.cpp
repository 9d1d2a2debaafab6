#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "tbsym/errors.hpp"
#include "tbsym/polyring.hpp"

using namespace tbsym;
using tbsym::testing::cst;
using tbsym::testing::random_poly;

namespace {

VarTablePtr ab_table() { return VarTable::make({"a1", "a0", "b1", "b0"}); }

struct Vars {
  VarTablePtr t = ab_table();
  MultiPoly a1 = MultiPoly::variable(t, "a1");
  MultiPoly a0 = MultiPoly::variable(t, "a0");
  MultiPoly b1 = MultiPoly::variable(t, "b1");
  MultiPoly b0 = MultiPoly::variable(t, "b0");
};

}  // namespace

TEST(VarTable, RejectsDuplicatesAndUnknownNames) {
  EXPECT_THROW(VarTable::make({"x", "x"}), ContextError);
  auto t = VarTable::make({"x", "y"});
  EXPECT_EQ(t->index("y"), 1u);
  EXPECT_THROW(t->index("z"), ContextError);
  EXPECT_FALSE(t->find("z").has_value());
}

TEST(PolyRing, AddExamples) {
  Vars v;
  EXPECT_EQ((v.a0 + v.b0) + (-v.b0), v.a0);
  EXPECT_EQ(v.a0 + MultiPoly(v.t), v.a0);
  EXPECT_EQ((v.a1 * v.b0 + v.a1 * v.b0).to_string(), "2*a1*b0");
}

TEST(PolyRing, MulExamples) {
  Vars v;
  EXPECT_EQ((v.a1 - v.b1) * v.b1, v.a1 * v.b1 - v.b1 * v.b1);
  EXPECT_EQ(v.a0 * cst(v.t, 1), v.a0);
  EXPECT_EQ((v.a0 + v.b0) * (v.a0 - v.b0), v.a0 * v.a0 - v.b0 * v.b0);
}

TEST(PolyRing, MixedTablesRejected) {
  Vars v;
  auto other = VarTable::make({"a1", "a0", "b1", "b0"});
  MultiPoly x = MultiPoly::variable(other, "a1");
  EXPECT_THROW(v.a1 + x, ContextError);
  EXPECT_THROW(v.a1 * x, ContextError);
}

TEST(PolyRing, DerivativeExamples) {
  Vars v;
  EXPECT_EQ(partial_derive(v.a0 * v.b0, "b0"), v.a0);
  EXPECT_EQ(partial_derive(v.a1 + v.b1, "a1"), cst(v.t, 1));
  EXPECT_EQ(partial_derive(pow(v.b0, 3), "b0"), cst(v.t, 3) * v.b0 * v.b0);
  EXPECT_THROW(partial_derive(v.a0, "zz"), ContextError);
}

TEST(PolyRing, EvalOriginExamples) {
  Vars v;
  EXPECT_EQ(eval_origin(v.a0 * v.b0 + cst(v.t, 5)), 5);
  EXPECT_EQ(eval_origin(v.a1 - v.b1), 0);
  EXPECT_EQ(eval_origin(MultiPoly(v.t)), 0);
}

TEST(PolyRing, SubstituteExamples) {
  Vars v;
  const VarIndex a1 = v.t->index("a1");
  const VarIndex a0 = v.t->index("a0");
  EXPECT_EQ(substitute(v.a1 - v.b1, {{a1, v.b0 * v.b0}}), v.b0 * v.b0 - v.b1);
  const MultiPoly p = v.a1 * v.b0 + v.a0 - cst(v.t, 2);
  EXPECT_EQ(substitute(p, {}), p);
  EXPECT_TRUE(substitute(v.a0 * v.b0, {{a0, MultiPoly(v.t)}}).is_zero());
}

TEST(PolyRing, SubstituteAcrossTables) {
  Vars v;
  auto target = VarTable::make({"x", "y"});
  MultiPoly x = MultiPoly::variable(target, "x");
  MultiPoly y = MultiPoly::variable(target, "y");
  Substitution s{{v.t->index("a1"), x + y}, {v.t->index("b0"), x}};
  EXPECT_EQ(substitute(v.a1 * v.b0, s), x * x + x * y);
  // An unmapped variable cannot be carried into a foreign table.
  EXPECT_THROW(substitute(v.a0, s), ContextError);
}

TEST(PolyRing, TruncateJetExamples) {
  Vars v;
  EXPECT_EQ(truncate_jet(v.a0 + v.a0 * v.b0, 1), v.a0);
  const MultiPoly p = v.a0 * v.b1 * v.b1 + v.a1;
  EXPECT_EQ(truncate_jet(p, p.degree()), p);
  EXPECT_EQ(truncate_jet(cst(v.t, 5) + v.a0 * v.a0, 0), cst(v.t, 5));
}

TEST(PolyRing, CanonicalRendering) {
  Vars v;
  const MultiPoly p = v.a1 * v.b0 - v.b0 * v.b0 - Rational(3, 2) * v.a0;
  EXPECT_EQ(p.to_string(), "a1*b0 - b0^2 - 3/2*a0");
  EXPECT_EQ(MultiPoly(v.t).to_string(), "0");
  EXPECT_EQ((-v.a0 + cst(v.t, 1)).to_string(), "-a0 + 1");
}

TEST(PolyRing, Normalization) {
  Vars v;
  const MultiPoly p = Rational(-1, 2) * v.a0 + Rational(1, 3) * v.a1 * v.b0;
  EXPECT_EQ(normalized(p).to_string(), "2*a1*b0 - 3*a0");
  EXPECT_TRUE(normalized(MultiPoly(v.t)).is_zero());
}

TEST(PolyRing, ExactDivision) {
  Vars v;
  const MultiPoly q = v.a0 - v.b1 * v.b0 + cst(v.t, 2);
  const MultiPoly d = v.a1 * v.a1 + v.b0;
  EXPECT_EQ(exact_divide(q * d, d), q);
  EXPECT_THROW(exact_divide(q * d + v.a0, d), InvariantViolation);
}

TEST(PolyRingProperties, RandomizedLaws) {
  Vars v;
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly p = random_poly(v.t, rng);
    const MultiPoly q = random_poly(v.t, rng);
    const VarIndex x = static_cast<VarIndex>(rng() % 4);
    const VarIndex y = static_cast<VarIndex>(rng() % 4);
    EXPECT_EQ(partial_derive(partial_derive(p, x), y), partial_derive(partial_derive(p, y), x));
    EXPECT_EQ(partial_derive(p * q, x), partial_derive(p, x) * q + p * partial_derive(q, x));
    for (int d = 0; d <= 3; ++d) EXPECT_EQ(eval_origin(truncate_jet(p, d)), eval_origin(p));
    Substitution s{{x, random_poly(v.t, rng, 2, 2)}, {y, random_poly(v.t, rng, 2, 2)}};
    EXPECT_EQ(substitute(p + q, s), substitute(p, s) + substitute(q, s));
    EXPECT_EQ(substitute(p * q, s), substitute(p, s) * substitute(q, s));
    EXPECT_EQ(p + q, q + p);
    EXPECT_TRUE((p - p).is_zero());
    // Canonical form: rebuilding from the stored terms changes nothing.
    std::vector<MultiPoly::Term> terms(p.terms().begin(), p.terms().end());
    EXPECT_EQ(MultiPoly::from_terms(v.t, terms), p);
    for (const auto& t : p.terms()) EXPECT_NE(t.coeff, 0);
  }
}

TEST(PolyRingProperties, JetSubstitutionMatchesTruncatedExact) {
  Vars v;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly p = random_poly(v.t, rng, 5, 4);
    Substitution s;
    for (VarIndex k = 0; k < 4; ++k) {
      MultiPoly img = random_poly(v.t, rng, 3, 3);
      s.emplace(k, img - cst(v.t, 1) * MultiPoly::constant(v.t, eval_origin(img)));
    }
    for (int d = 1; d <= 3; ++d) {
      EXPECT_EQ(substitute_jet(p, s, d), truncate_jet(substitute(p, s), d));
    }
  }
}
