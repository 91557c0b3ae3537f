#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "bridge.hpp"
#include "sgh/bigrading.hpp"
#include "sgh/f2_matrix.hpp"
#include "sgh/poly.hpp"
#include "sgh/poly_matrix.hpp"

using namespace sgh;

namespace {

Poly v(int label) { return Poly::variable(label - 1); }

Poly random_poly(std::mt19937& rng, int vars) {
  Poly p;
  std::uniform_int_distribution<int> terms(0, 3), exp(0, 2);
  for (int t = terms(rng); t > 0; --t) {
    std::vector<std::uint16_t> e(vars);
    for (auto& x : e) x = static_cast<std::uint16_t>(exp(rng));
    p.add(Monomial::from_exponents(e));
  }
  return p;
}

PolyMatrix random_poly_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  PolyMatrix m(rows, cols);
  std::bernoulli_distribution fill(0.4);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (fill(rng)) m.add(r, c, random_poly(rng, 3));
  return m;
}

F2Matrix random_f2(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
  F2Matrix m(rows, cols);
  std::bernoulli_distribution fill(density);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (fill(rng)) m.flip(r, c);
  return m;
}

}  // namespace

TEST(Monomial, MultiplicationAddsExponents) {
  const Monomial a = Monomial::variable(0) * Monomial::variable(2);
  const Monomial b = Monomial::variable(2);
  const Monomial ab = a * b;
  EXPECT_EQ(ab.exponent(0), 1u);
  EXPECT_EQ(ab.exponent(2), 2u);
  EXPECT_EQ(ab.total_degree(), 3u);
  EXPECT_EQ(ab.to_string(), "V1V3^2");
  EXPECT_EQ(Monomial{}.to_string(), "1");
}

TEST(Monomial, BidegreeCountsEachVariable) {
  EXPECT_EQ(Monomial{}.bidegree(), (Bigrading{0, 0}));
  EXPECT_EQ(Monomial::variable(4).bidegree(), (Bigrading{-2, -1}));
  EXPECT_EQ((Monomial::variable(0) * Monomial::variable(0) * Monomial::variable(1)).bidegree(), (Bigrading{-6, -3}));
}

TEST(Monomial, TrailingZerosDoNotMatter) {
  EXPECT_EQ(Monomial::from_exponents({1, 0, 0}), Monomial::variable(0));
  EXPECT_TRUE(Monomial::from_exponents({0, 0}).is_one());
}

TEST(Poly, AdditionIsSymmetricDifference) {
  const Poly p = v(1) + v(2);
  EXPECT_EQ(p + v(2), v(1));
  EXPECT_TRUE((p + p).is_zero());
  EXPECT_EQ((Poly::one() + v(1)).to_string(), "1 + V1");
}

TEST(Poly, ProductsCancelInPairs) {
  // (V1 + V2)^2 = V1^2 + V2^2 over F2.
  const Poly s = v(1) + v(2);
  EXPECT_EQ(s * s, v(1) * v(1) + v(2) * v(2));
}

TEST(Poly, RingLawsOnRandomTriples) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * Poly::one(), a);
  }
}

TEST(Poly, ConstantTermAndZeroing) {
  const Poly p = Poly::one() + v(1) * v(3) + v(2);
  EXPECT_TRUE(p.constant_term());
  EXPECT_FALSE(v(1).constant_term());
  EXPECT_EQ(p.with_zero_variables({false, true}), Poly::one() + v(1) * v(3));
  EXPECT_EQ(p.with_zero_variables({true, true, true}), Poly::one());
}

TEST(Poly, RelabelRenamesVariables) {
  const Poly p = v(1) * v(2) + v(3);
  EXPECT_EQ(relabel(p, {2, 0, 1}), v(3) * v(1) + v(2));
}

TEST(PolyMatrix, ScalarAndIdentityProducts) {
  std::mt19937 rng(11);
  const PolyMatrix m = random_poly_matrix(rng, 4, 5);
  EXPECT_EQ(PolyMatrix::scalar(4, Poly::one()) * m, m);
  EXPECT_EQ(m * PolyMatrix::scalar(5, Poly::one()), m);
  EXPECT_TRUE((m + m).is_zero());
  EXPECT_TRUE(PolyMatrix::scalar(3, Poly{}).is_zero());
}

TEST(PolyMatrix, ProductIsAssociative) {
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    const PolyMatrix a = random_poly_matrix(rng, 3, 4);
    const PolyMatrix b = random_poly_matrix(rng, 4, 2);
    const PolyMatrix c = random_poly_matrix(rng, 2, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(PolyMatrix, SpecializationIsMultiplicative) {
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const PolyMatrix a = random_poly_matrix(rng, 4, 4);
    const PolyMatrix b = random_poly_matrix(rng, 4, 3);
    EXPECT_EQ((a * b).specialize_at_zero(), a.specialize_at_zero() * b.specialize_at_zero());
  }
}

TEST(PolyMatrix, BlockAndFirstDifference) {
  PolyMatrix m(3, 3);
  m.add(0, 1, v(1));
  m.add(2, 2, Poly::one());
  const PolyMatrix b = m.block({0, 2}, {1, 2});
  EXPECT_EQ(b.at(0, 0), v(1));
  EXPECT_EQ(b.at(1, 1), Poly::one());
  EXPECT_TRUE(b.at(1, 0).is_zero());

  PolyMatrix other = m;
  EXPECT_FALSE(m.first_difference(other).has_value());
  other.add(1, 2, v(2));
  EXPECT_EQ(m.first_difference(other), (std::pair<std::size_t, std::size_t>{2, 1}));
}

TEST(PolyMatrix, DimensionMismatchThrows) {
  EXPECT_THROW(PolyMatrix(2, 3) * PolyMatrix(2, 3), std::invalid_argument);
  EXPECT_THROW(PolyMatrix(2, 3) + PolyMatrix(3, 3), std::invalid_argument);
}

TEST(MapDegree, HomogeneousAndWitness) {
  // Generator gradings: source (0,0), (1,1); target (-1,0), (-2,-1).
  PolyMatrix m(2, 2);
  m.add(0, 0, Poly::one());  // (-1,0) - (0,0) = (-1,0)
  m.add(0, 1, v(1));         // (-1,0) + (-2,-1) - (1,1) = (-4,-2)
  auto deg = map_degree(m, {{0, 0}, {1, 1}}, {{-1, 0}, {-2, -1}});
  EXPECT_FALSE(deg.homogeneous);
  EXPECT_FALSE(deg.witness.empty());

  PolyMatrix h(2, 2);
  h.add(0, 0, Poly::one());
  h.add(1, 1, Poly::one());  // (-2,-1) - (1,1) = (-3,-2)? not equal to (-1,0)
  EXPECT_FALSE(map_degree(h, {{0, 0}, {1, 1}}, {{-1, 0}, {-2, -1}}).homogeneous);

  PolyMatrix g(2, 2);
  g.add(0, 0, Poly::one());
  g.add(1, 1, Poly::one());
  deg = map_degree(g, {{0, 0}, {1, 1}}, {{-1, 0}, {0, 1}});
  EXPECT_TRUE(deg.homogeneous);
  EXPECT_EQ(deg.degree, (Bigrading{-1, 0}));

  EXPECT_FALSE(map_degree(PolyMatrix(2, 2), {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}).degree.has_value());
}

TEST(BitVector, Basics) {
  BitVector b(130);
  EXPECT_TRUE(b.none());
  EXPECT_EQ(b.lowest(), 130u);
  b.set(129);
  b.set(64);
  EXPECT_EQ(b.count(), 2u);
  EXPECT_EQ(b.lowest(), 64u);
  EXPECT_EQ(b.support(), (std::vector<std::uint32_t>{64, 129}));
  BitVector c(130);
  c.set(64);
  b ^= c;
  EXPECT_EQ(b.lowest(), 129u);
}

TEST(F2Rank, TrivialCases) {
  EXPECT_EQ(f2_rank(F2Matrix(2, 2)), 0u);
  EXPECT_EQ(f2_rank(F2Matrix::identity(6)), 6u);
  EXPECT_EQ(f2_rank(F2Matrix(0, 0)), 0u);
}

TEST(F2Rank, AgreesWithDenseEliminationOnRandomMatrices) {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<int> dim(1, 70);
    const F2Matrix m = random_f2(rng, dim(rng), dim(rng), 0.1 + 0.05 * (i % 6));
    EXPECT_EQ(static_cast<int>(f2_rank(m)), oracle::rank(oracle::from_library(m)));
  }
}

TEST(F2Matrix, ProductAndSetColumnReduceModTwo) {
  F2Matrix m(3, 2);
  m.set_column(0, {2, 0, 2});
  EXPECT_TRUE(m.get(0, 0));
  EXPECT_FALSE(m.get(2, 0));
  const F2Matrix id = F2Matrix::identity(3);
  EXPECT_EQ(id * m, m);
  EXPECT_TRUE((m + m).is_zero());
  EXPECT_THROW(m * m, std::invalid_argument);
}

TEST(Bigraded, WTensorAndDivision) {
  const BigradedDims point{{{0, 0}, 1}};
  const BigradedDims w = tensor_w(point, 1);
  EXPECT_EQ(w, (BigradedDims{{{0, 0}, 1}, {{-1, -1}, 1}}));
  EXPECT_EQ(tensor_w(point, 2), (BigradedDims{{{0, 0}, 1}, {{-1, -1}, 2}, {{-2, -2}, 1}}));
  EXPECT_EQ(divide_by_w(w, 1), point);
  EXPECT_EQ(divide_by_w(tensor_w(w, 3), 4), point);
}

TEST(Bigraded, DivisionReportsRemainders) {
  EXPECT_FALSE(divide_by_w(BigradedDims{{{0, 0}, 1}}, 1).has_value());
  EXPECT_FALSE(divide_by_w(BigradedDims{{{0, 0}, 1}, {{-1, -1}, 2}}, 1).has_value());
  // Off-diagonal entries divide independently.
  const BigradedDims t{{{0, 0}, 1}, {{-1, -1}, 1}, {{3, 1}, 2}, {{2, 0}, 2}};
  EXPECT_EQ(divide_by_w(t, 1), (BigradedDims{{{0, 0}, 1}, {{3, 1}, 2}}));
}

TEST(Bigraded, DivisionInvertsTensorOnRandomTables) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coord(-4, 4), dim(1, 3);
  for (int i = 0; i < 100; ++i) {
    BigradedDims t;
    for (int k = 0; k < 4; ++k) t[{coord(rng), coord(rng)}] = dim(rng);
    for (int p = 0; p < 4; ++p) EXPECT_EQ(divide_by_w(tensor_w(t, p), p), t);
  }
}

TEST(Bigraded, EqualUpToShift) {
  const BigradedDims a{{{0, 0}, 1}, {{1, 1}, 2}};
  EXPECT_TRUE(equal_up_to_shift(a, shifted(a, {5, -3})));
  EXPECT_FALSE(equal_up_to_shift(a, BigradedDims{{{0, 0}, 2}, {{1, 1}, 1}}));
  EXPECT_TRUE(equal_up_to_shift(BigradedDims{}, BigradedDims{}));
  EXPECT_EQ(total_dimension(a), 3u);
}
