#include <random>

#include <gtest/gtest.h>

#include <hfsplit/qlinalg.hpp>
#include <hfsplit/rational.hpp>

#include "oracles.hpp"

using namespace hfsplit;

namespace {

Matrix col(std::initializer_list<Rational> v) { return Matrix::column(std::vector<Rational>(v)); }

Matrix random_matrix(std::mt19937_64& g, std::size_t r, std::size_t c, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(g);
  return m;
}

// Low-rank product so kernels and images are nontrivial.
Matrix random_low_rank(std::mt19937_64& g, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<std::size_t> k(0, std::min(r, c));
  std::size_t inner = k(g);
  return random_matrix(g, r, inner, 2) * random_matrix(g, inner, c, 2);
}

}  // namespace

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational("+7/-14"), Rational(-1, 2));
  EXPECT_EQ(to_string(Rational(-3, 9)), "-1/3");
  EXPECT_EQ(to_string(Rational(10, 5)), "2");
  EXPECT_EQ(parse_rational("123456789012345678901234567890/3"),
            Rational(Integer("41152263004115226300411522630")));
}

TEST(Rational, RejectsMalformed) {
  for (const char* s : {"", "1/0", "a", "1/2/3", "1.5", "/3", "3/", " 1"})
    EXPECT_THROW(parse_rational(s), Error) << s;
}

TEST(Rational, StaysCanonical) {
  Rational r = Rational(6, 4) + Rational(1, 4);
  EXPECT_EQ(numerator(r), 7);
  EXPECT_EQ(denominator(r), 4);
  EXPECT_TRUE(is_integral(Rational(8, 4)));
  EXPECT_FALSE(fits_int64(Rational(Integer("100000000000000000000"))));
}

TEST(Rref, Identity) {
  auto r = rref(Matrix::identity(3));
  EXPECT_EQ(r.echelon, Matrix::identity(3));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.rank, 3u);
}

TEST(Rref, Zero) {
  auto r = rref(Matrix(2, 2));
  EXPECT_TRUE(r.echelon.is_zero());
  EXPECT_TRUE(r.pivots.empty());
  EXPECT_EQ(r.rank, 0u);
}

TEST(Rref, RankOne) {
  auto r = rref(Matrix::from_rows({{1, 2}, {2, 4}}));
  EXPECT_EQ(r.echelon, Matrix::from_rows({{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, EmptyShapes) {
  EXPECT_EQ(rank(Matrix(0, 4)), 0u);
  EXPECT_EQ(rank(Matrix(3, 0)), 0u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(Matrix::identity(2)).dim(), 0u);
  EXPECT_EQ(kernel_basis(Matrix(1, 3)), Subspace::full(3));
  Subspace k = kernel_basis(Matrix::from_rows({{1, 2}}));
  EXPECT_EQ(k, Subspace::span(col({-2, 1})));
  EXPECT_EQ(k.dim(), 1u);
}

TEST(Image, Examples) {
  EXPECT_EQ(image_basis(Matrix::identity(2)), Subspace::full(2));
  EXPECT_EQ(image_basis(Matrix(3, 2)).dim(), 0u);
  EXPECT_EQ(image_basis(Matrix::from_rows({{1, 2}, {1, 2}})), Subspace::span(col({1, 1})));
}

TEST(Intersect, Examples) {
  Subspace b = Subspace::span(col({1, 2, 3}));
  EXPECT_EQ(intersect(Subspace::full(3), b), b);
  EXPECT_EQ(intersect(Subspace::span(col({1, 0})), Subspace::span(col({1, 1}))).dim(), 0u);
  Subspace e12 = Subspace::span(Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}, {0, 0}}));
  Subspace e23 = Subspace::span(Matrix::from_rows({{0, 0}, {1, 0}, {0, 1}, {0, 0}}));
  EXPECT_EQ(intersect(e12, e23), Subspace::span(col({0, 1, 0, 0})));
}

TEST(Intersect, AmbientMismatchThrows) {
  EXPECT_THROW(intersect(Subspace::full(2), Subspace::full(3)), Error);
}

TEST(Quotient, Examples) {
  auto q0 = quotient(3, Subspace::zero(3));
  EXPECT_EQ(q0.projection, Matrix::identity(3));
  EXPECT_EQ(quotient(3, Subspace::full(3)).dim(), 0u);
  Subspace e13 = Subspace::span(Matrix::from_rows({{1, 0}, {0, 0}, {0, 1}, {0, 0}}));
  auto q = quotient(4, e13);
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_EQ(q.section, Matrix::from_rows({{0, 0}, {1, 0}, {0, 0}, {0, 1}}));
}

TEST(Restrict, Examples) {
  Subspace s = Subspace::span(col({1, 1, 0}));
  EXPECT_EQ(restrict(Matrix::identity(3), s), Matrix::identity(1));
  EXPECT_EQ(restrict(Matrix::scalar(3, 2), Subspace::span(col({1, 0, 0}))),
            Matrix::from_rows({{2}}));
  EXPECT_EQ(restrict(Matrix::from_rows({{1, 1}, {0, 1}}), Subspace::span(col({1, 0}))),
            Matrix::from_rows({{1}}));
}

TEST(Restrict, NonInvariantThrows) {
  try {
    restrict(Matrix::from_rows({{1, 1}, {0, 1}}), Subspace::span(col({0, 1})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvarianceViolation);
  }
}

TEST(InducedOnQuotient, Examples) {
  auto q = quotient(2, Subspace::span(col({1, 0})));
  EXPECT_EQ(induced_on_quotient(Matrix::identity(2), q), Matrix::identity(1));
  EXPECT_EQ(induced_on_quotient(Matrix::scalar(2, -1), q), Matrix::from_rows({{-1}}));
  auto swap_q = quotient(2, Subspace::span(col({1, 1})));
  EXPECT_EQ(induced_on_quotient(Matrix::from_rows({{0, 1}, {1, 0}}), swap_q),
            Matrix::from_rows({{-1}}));
}

TEST(InducedOnQuotient, NonInvariantThrows) {
  auto q = quotient(2, Subspace::span(col({1, 0})));
  EXPECT_THROW(induced_on_quotient(Matrix::from_rows({{0, 1}, {1, 0}}), q), Error);
}

TEST(Trace, Examples) {
  EXPECT_EQ(trace(Matrix::identity(5)), 5);
  EXPECT_EQ(trace(Matrix(0, 0)), 0);
  EXPECT_EQ(trace(Matrix::from_rows({{1, 5}, {7, 3}})), 4);
  EXPECT_THROW(trace(Matrix(2, 3)), Error);
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW(Matrix(2, 2) * Matrix(3, 1), Error);
  EXPECT_THROW(Matrix(2, 2) + Matrix(2, 1), Error);
  EXPECT_THROW(Matrix(2, 2, {1, 2, 3}), Error);
}

TEST(Matrix, EmptyProducts) {
  Matrix p = Matrix(3, 0) * Matrix(0, 2);
  EXPECT_EQ(p.rows(), 3u);
  EXPECT_EQ(p.cols(), 2u);
  EXPECT_TRUE(p.is_zero());
}

TEST(SolveAndInverse, Basic) {
  Matrix a = Matrix::from_rows({{2, 1}, {1, 1}});
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, Matrix::identity(2));
  EXPECT_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})));
  EXPECT_FALSE(solve_particular(Matrix::from_rows({{1}, {1}}), col({1, 2})));
}

TEST(QlinalgProperty, AgreesWithOracle) {
  std::mt19937_64 g(2024);
  for (int iter = 0; iter < 300; ++iter) {
    std::size_t r = g() % 6, c = g() % 6;
    Matrix m = random_low_rank(g, r, c);
    std::size_t rk = oracle::rank(m);
    EXPECT_EQ(rank(m), rk);
    Subspace k = kernel_basis(m);
    EXPECT_EQ(k.dim(), c - rk);
    EXPECT_TRUE((m * k.basis()).is_zero());
    Subspace im = image_basis(m);
    EXPECT_EQ(im.dim(), rk);
    EXPECT_TRUE(oracle::in_column_span(m, im.basis()));
    EXPECT_TRUE(im.contains(m));

    // intersection dimension by inclusion-exclusion
    Matrix a = random_low_rank(g, r, 1 + g() % 4), b = random_low_rank(g, r, 1 + g() % 4);
    Subspace sa = Subspace::span(a), sb = Subspace::span(b);
    Subspace meet = intersect(sa, sb);
    std::size_t expect = oracle::rank(a) + oracle::rank(b) - oracle::rank(hstack(a, b));
    EXPECT_EQ(meet.dim(), expect);
    EXPECT_TRUE(oracle::in_column_span(a, meet.basis()));
    EXPECT_TRUE(oracle::in_column_span(b, meet.basis()));
    EXPECT_EQ(sum(sa, sb).dim(), oracle::rank(hstack(a, b)));

    // quotient: projection kills s, projection o section = id
    auto q = quotient(r, sa);
    EXPECT_EQ(q.dim(), r - sa.dim());
    EXPECT_TRUE((q.projection * sa.basis()).is_zero());
    EXPECT_EQ(q.projection * q.section, Matrix::identity(q.dim()));

    // solve_particular yields a genuine solution exactly when the oracle does
    Matrix rhs = random_matrix(g, r, 1);
    auto x = solve_particular(m, rhs);
    EXPECT_EQ(x.has_value(), oracle::solve(m, rhs).has_value());
    if (x) EXPECT_EQ(m * *x, rhs);
  }
}

TEST(QlinalgProperty, RestrictionTraceMatchesInvariantSplitting) {
  // f = P diag(D1, D2) P^-1 leaves span(first cols of P) invariant; the
  // restricted trace is Tr D1 and the quotient trace is Tr D2.
  std::mt19937_64 g(77);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t n = 1 + g() % 5, k = g() % (n + 1);
    Matrix p = random_matrix(g, n, n);
    auto pinv = inverse(p);
    if (!pinv) continue;
    Matrix blk = random_matrix(g, n, n);
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) blk(i, j) = 0;  // block upper triangular
    Matrix f = p * blk * *pinv;
    Matrix first(n, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) first(i, j) = p(i, j);
    Subspace s = Subspace::span(first);
    Rational t1 = 0, t2 = 0;
    for (std::size_t i = 0; i < k; ++i) t1 += blk(i, i);
    for (std::size_t i = k; i < n; ++i) t2 += blk(i, i);
    EXPECT_EQ(trace(restrict(f, s)), t1);
    EXPECT_EQ(trace(induced_on_quotient(f, quotient(n, s))), t2);
  }
}
