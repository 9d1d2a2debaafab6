#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_util.hpp"
#include "tbsym/errors.hpp"
#include "tbsym/linalg.hpp"
#include "tbsym/mulmap.hpp"

using namespace tbsym;
using tbsym::testing::cst;
using tbsym::testing::random_poly;

namespace {

PolyMatrix random_matrix(const VarTablePtr& t, std::size_t n, std::mt19937& rng) {
  PolyMatrix m(t, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(t, rng, 2, 2);
  }
  return m;
}

RatMatrix random_rat(std::size_t rows, std::size_t cols, std::mt19937& rng) {
  RatMatrix m(rows, cols);
  std::uniform_int_distribution<int> v(-2, 2);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(v(rng), 1 + (rng() % 3));
  }
  return m;
}

}  // namespace

TEST(ExactLinalg, EvalOriginExamples) {
  auto t = VarTable::make({"a0", "b0"});
  PolyMatrix m(t, 2, 2);
  m(0, 0) = cst(t, 1);
  m(0, 1) = MultiPoly::variable(t, "a0");
  m(1, 0) = MultiPoly::variable(t, "b0");
  m(1, 1) = cst(t, 1);
  EXPECT_EQ(eval_matrix_origin(m), RatMatrix::identity(2));
  EXPECT_EQ(eval_matrix_origin(PolyMatrix(t, 2, 3)), RatMatrix(2, 3));

  // Sylvester Jacobian of (x + a0)(x + b0): [[1, 1], [b0, a0]] at the origin.
  RatMatrix expect(2, 2);
  expect(0, 0) = 1;
  expect(0, 1) = 1;
  EXPECT_EQ(eval_matrix_origin(sylvester_jacobian(build_context(1, 1))), expect);
}

TEST(ExactLinalg, RankExamples) {
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(rank_rational(RatMatrix::identity(k)), k);
  EXPECT_EQ(rank_rational(RatMatrix(3, 4)), 0u);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      EXPECT_EQ(rank_rational(eval_matrix_origin(sylvester_jacobian(build_context(n, r)))), n);
    }
  }
}

TEST(ExactLinalg, RankInvariantUnderPermutationAndTranspose) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    RatMatrix m = random_rat(rows, cols, rng);
    // Force some dependence.
    if (rows > 2) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 2 - m(1, j);
    }
    const std::size_t rk = rank_rational(m);
    EXPECT_EQ(rank_rational(m.transposed()), rk);
    std::vector<std::size_t> perm(rows);
    for (std::size_t i = 0; i < rows; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    RatMatrix p(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) p(i, j) = m(perm[i], j);
    }
    EXPECT_EQ(rank_rational(p), rk);
  }
}

TEST(ExactLinalg, DeterminantExamples) {
  auto t = VarTable::make({"a0", "b0"});
  const MultiPoly a0 = MultiPoly::variable(t, "a0");
  const MultiPoly b0 = MultiPoly::variable(t, "b0");
  PolyMatrix m(t, 2, 2);
  m(0, 0) = a0;
  m(0, 1) = b0;
  m(1, 0) = b0;
  m(1, 1) = a0;
  EXPECT_EQ(det_poly(m), a0 * a0 - b0 * b0);
  EXPECT_EQ(det_poly(PolyMatrix::identity(t, 5)), cst(t, 1));
  EXPECT_THROW(det_poly(PolyMatrix(t, 2, 3)), ShapeError);
}

TEST(ExactLinalg, FullJacobianDeterminantOfDegreeTwoByOne) {
  // Rows c2, c1, c0; columns a0, a1, b0.
  const MulMapContext ctx = build_context(2, 1);
  const std::vector<VarIndex> cols{ctx.a_vars[0], ctx.a_vars[1], ctx.b_vars[0]};
  const auto rows = ctx.c_descending();
  const MultiPoly det = det_poly(PolyMatrix::jacobian(rows, cols));
  EXPECT_EQ(det.to_string(), "a1*b0 - b0^2 - a0");
}

TEST(ExactLinalg, BareissMatchesCofactorAndIsMultiplicative) {
  auto t = VarTable::make({"x", "y", "z"});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const PolyMatrix m = random_matrix(t, n, rng);
    EXPECT_EQ(det_poly(m), det_cofactor(m));
  }
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const PolyMatrix x = random_matrix(t, n, rng);
    const PolyMatrix y = random_matrix(t, n, rng);
    EXPECT_EQ(det_poly(x * y), det_poly(x) * det_poly(y));
  }
}

TEST(ExactLinalg, BareissHandlesZeroPivots) {
  auto t = VarTable::make({"x"});
  const MultiPoly x = MultiPoly::variable(t, "x");
  PolyMatrix m(t, 4, 4);
  // Anti-diagonal permutation scaled by x, plus a zero-leading block.
  for (std::size_t i = 0; i < 4; ++i) m(i, 3 - i) = x + cst(t, static_cast<long>(i));
  EXPECT_EQ(det_poly(m), det_cofactor(m));
}

TEST(ExactLinalg, MinorExamples) {
  auto t = VarTable::make({"a0"});
  PolyMatrix m(t, 2, 2);
  m(0, 0) = cst(t, 1);
  m(1, 1) = MultiPoly::variable(t, "a0");
  const auto ones = minors(m, 1);
  ASSERT_EQ(ones.size(), 4u);
  EXPECT_EQ(ones[0].value, cst(t, 1));
  EXPECT_TRUE(ones[1].zero);
  EXPECT_TRUE(ones[2].zero);
  EXPECT_EQ(ones[3].value, MultiPoly::variable(t, "a0"));

  const auto full = minors(PolyMatrix::identity(t, 3), 3);
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(full[0].value, cst(t, 1));

  EXPECT_EQ(minors(PolyMatrix(t, 4, 3), 3).size(), 4u);
  EXPECT_THROW(MinorEnumerator(m, 0), ShapeError);
  EXPECT_THROW(MinorEnumerator(m, 3), ShapeError);
}

TEST(ExactLinalg, MinorCountAndOrder) {
  auto t = VarTable::make({"x"});
  for (std::size_t rows = 1; rows <= 5; ++rows) {
    for (std::size_t cols = 1; cols <= 5; ++cols) {
      PolyMatrix m(t, rows, cols);
      for (std::size_t s = 1; s <= std::min(rows, cols); ++s) {
        const auto all = minors(m, s);
        ASSERT_EQ(all.size(), binomial(rows, s) * binomial(cols, s));
        EXPECT_EQ(MinorEnumerator(m, s).count(), all.size());
        for (std::size_t k = 1; k < all.size(); ++k) {
          const auto prev = std::make_pair(all[k - 1].rows, all[k - 1].cols);
          const auto cur = std::make_pair(all[k].rows, all[k].cols);
          EXPECT_LT(prev, cur);
        }
      }
    }
  }
}
