#include <gtest/gtest.h>

#include <hfsplit/froyshov.hpp>

#include "oracles.hpp"

using namespace hfsplit;

namespace {

Matrix unit_row(std::size_t n, std::size_t i) {
  Matrix m(1, n);
  m(0, i) = 1;
  return m;
}

Matrix column(std::initializer_list<Rational> v) { return Matrix::column(std::vector<Rational>(v)); }

// Floer cohomology of the Sigma(2,7,13) fixture, cohomology grading.
GradedSpace sigma_h() { return GradedSpace{{4, 0, 2, 0, 4, 0, 2, 0}}; }

SpecialPair sigma_pair() {
  GradedSpace h = sigma_h();
  std::vector<Matrix> d{unit_row(4, 0), unit_row(4, 0), unit_row(4, 1), unit_row(4, 1)};
  std::vector<Matrix> p(4, Matrix(0, 1));
  return SpecialPair(h, d, p);
}

SpecialPair delta_prime_pair(const GradedSpace& h, std::vector<Matrix> primes) {
  std::vector<Matrix> d;
  for (std::size_t n = 0; n < primes.size(); ++n) d.emplace_back(1, h[delta_degree(int(n))]);
  return SpecialPair(h, d, std::move(primes));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::IoError;
}

}  // namespace

TEST(Degrees, FamiliesAlternate) {
  EXPECT_EQ(delta_degree(0), 4);
  EXPECT_EQ(delta_degree(1), 0);
  EXPECT_EQ(delta_prime_degree(0), 1);
  EXPECT_EQ(delta_prime_degree(3), 5);
}

TEST(SpecialPairTest, Classifies) {
  EXPECT_EQ(sigma_pair().kind(), SpecialCase::delta_side);
  GradedSpace h{{0, 1, 0, 0, 0, 0, 0, 0}};
  EXPECT_EQ(delta_prime_pair(h, {column({1}), Matrix(0, 1)}).kind(), SpecialCase::delta_prime_side);
  EXPECT_EQ(SpecialPair::zero(h, 3).kind(), SpecialCase::both_zero);
}

TEST(SpecialPairTest, DichotomyEnforced) {
  GradedSpace h{{0, 1, 0, 0, 1, 0, 0, 0}};
  EXPECT_EQ(kind_of([&] { SpecialPair(h, {unit_row(1, 0)}, {column({1})}); }),
            ErrorKind::DichotomyViolation);
  // a later member cannot be nonzero once its family's first member vanishes
  GradedSpace h2{{1, 0, 0, 0, 1, 0, 0, 0}};
  EXPECT_EQ(kind_of([&] {
              SpecialPair(h2, {Matrix(1, 1), unit_row(1, 0)}, {Matrix(0, 1), Matrix(0, 1)});
            }),
            ErrorKind::DichotomyViolation);
}

TEST(SpecialPairTest, ShapesChecked) {
  GradedSpace h = sigma_h();
  EXPECT_EQ(kind_of([&] { SpecialPair(h, {unit_row(3, 0)}, {Matrix(0, 1)}); }),
            ErrorKind::ShapeMismatch);
  EXPECT_EQ(kind_of([&] { SpecialPair(h, {unit_row(4, 0)}, {}); }), ErrorKind::ShapeMismatch);
}

TEST(Subspaces, BothZeroIsEverything) {
  GradedSpace h{{1, 2, 3, 1, 2, 3, 1, 2}};
  SpecialPair sp = SpecialPair::zero(h, 4);
  auto z = z_subspaces(h, sp);
  auto b = b_subspaces(h, sp);
  for (int q = 0; q < 8; ++q) {
    EXPECT_EQ(z[q], Subspace::full(h[q]));
    EXPECT_EQ(b[q].dim(), 0u);
  }
  EXPECT_EQ(reduced(h, sp).hf_red, h);
}

TEST(Subspaces, SigmaFixtureKernels) {
  auto z = z_subspaces(sigma_h(), sigma_pair());
  Matrix e34 = Matrix::from_rows({{0, 0}, {0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(z[0], Subspace::span(e34));
  EXPECT_EQ(z[4], Subspace::span(e34));
  EXPECT_EQ(z[2], Subspace::full(2));
}

TEST(Subspaces, SingleFunctionalOnLine) {
  GradedSpace h{{0, 0, 0, 0, 1, 0, 0, 0}};
  SpecialPair sp(h, {unit_row(1, 0)}, {Matrix(0, 1)});
  EXPECT_EQ(z_subspaces(h, sp)[4].dim(), 0u);
}

TEST(Subspaces, BoundaryImages) {
  GradedSpace h1{{0, 1, 0, 0, 0, 0, 0, 0}};
  EXPECT_EQ(b_subspaces(h1, delta_prime_pair(h1, {column({1})}))[1], Subspace::full(1));
  GradedSpace h3{{0, 3, 0, 0, 0, 0, 0, 0}};
  auto sp = delta_prime_pair(h3, {column({1, 0, 0}), Matrix(0, 1), column({1, 1, 0})});
  EXPECT_EQ(b_subspaces(h3, sp)[1].dim(), 2u);
}

TEST(Reduced, SigmaFixture) {
  auto r = reduced(sigma_h(), sigma_pair());
  EXPECT_EQ(r.hf_red, (GradedSpace{{2, 0, 2, 0, 2, 0, 2, 0}}));
  EXPECT_EQ(froyshov_h(sigma_h(), r, Convention::cohomology), 2);
  EXPECT_EQ(froyshov_h(regrade(sigma_h()), regrade(r.hf_red), Convention::homology), 2);
}

TEST(Reduced, FullRankFamilyKillsDegrees) {
  GradedSpace h{{2, 1, 0, 0, 2, 0, 0, 0}};
  SpecialPair sp(h, {unit_row(2, 0), unit_row(2, 0), unit_row(2, 1), unit_row(2, 1)},
                 std::vector<Matrix>{Matrix(1, 1), Matrix(0, 1), Matrix(1, 1), Matrix(0, 1)});
  auto r = reduced(h, sp);
  EXPECT_EQ(r.hf_red[0], 0u);
  EXPECT_EQ(r.hf_red[4], 0u);
  EXPECT_EQ(r.hf_red[1], 1u);
  EXPECT_EQ(froyshov_h(h, r, Convention::cohomology), 2);
}

TEST(Reduced, DeltaPrimeSideNegative) {
  GradedSpace h{{0, 2, 0, 0, 0, 1, 0, 0}};
  auto sp = delta_prime_pair(h, {column({1, 0}), column({1})});
  auto r = reduced(h, sp);
  EXPECT_EQ(r.hf_red, (GradedSpace{{0, 1, 0, 0, 0, 0, 0, 0}}));
  // -(dim B^1 + dim B^5)/2
  EXPECT_EQ(froyshov_h(h, r, Convention::cohomology), -1);
}

TEST(Froyshov, ZeroForBothZero) {
  GradedSpace cork = regrade(GradedSpace{{0, 1, 0, 1, 0, 1, 0, 1}});
  auto r = reduced(cork, SpecialPair::zero(cork, 1));
  EXPECT_EQ(froyshov_h(cork, r, Convention::cohomology), 0);
  EXPECT_EQ(froyshov_h(regrade(cork), regrade(r.hf_red), Convention::homology), 0);
}

TEST(Froyshov, HalfIntegersStayExact) {
  GradedSpace h{{1, 0, 0, 0, 0, 0, 0, 0}};
  GradedSpace red{};
  EXPECT_EQ(froyshov_h(h, red, Convention::cohomology), Rational(1, 2));
}

TEST(Periodicity, Examples) {
  auto r = reduced(sigma_h(), sigma_pair());
  EXPECT_TRUE(check_periodicity(sigma_h(), r).both());
  GradedSpace lone{{1, 0, 0, 0, 0, 0, 0, 0}};
  EXPECT_FALSE(check_periodicity(lone, reduced(lone, SpecialPair::zero(lone, 1))).hf);
  GradedSpace cork = regrade(GradedSpace{{0, 1, 0, 1, 0, 1, 0, 1}});
  EXPECT_TRUE(is_four_periodic(cork));
}

TEST(Stabilization, SigmaFixture) {
  Stabilization s = stabilization(sigma_pair());
  EXPECT_EQ(s.z0, 3);
  EXPECT_EQ(s.z4, 2);
}

// Chain level -----------------------------------------------------------------

namespace {

CochainComplex zero_complex(const GradedSpace& s) { return CochainComplex(GradedMap(s, s, 1)); }

}  // namespace

TEST(InduceSpecial, AllZero) {
  GradedSpace s{{1, 1, 1, 1, 1, 1, 1, 1}};
  CochainComplex c = zero_complex(s);
  ChainSpecial cs{Matrix(1, 1), Matrix(1, 1), GradedMap(s, s, 4)};
  auto sp = induce_special(cs, c, cohomology(c), 3);
  EXPECT_EQ(sp.kind(), SpecialCase::both_zero);
  EXPECT_GE(sp.n_max(), 3u);
}

TEST(InduceSpecial, VanishingV) {
  GradedSpace s{{1, 1, 1, 1, 1, 1, 1, 1}};
  CochainComplex c = zero_complex(s);
  ChainSpecial cs{Matrix::from_rows({{2}}), Matrix(1, 1), GradedMap(s, s, 4)};
  auto sp = induce_special(cs, c, cohomology(c), 4);
  EXPECT_EQ(sp.kind(), SpecialCase::delta_side);
  EXPECT_EQ(sp.delta(0), Matrix::from_rows({{2}}));
  for (std::size_t n = 1; n <= sp.n_max(); ++n) EXPECT_TRUE(sp.delta(n).is_zero());
}

TEST(InduceSpecial, IdentityVOnOneDimensional) {
  // v = Id on degrees 0 and 4 gives delta_n = delta for every n.
  GradedSpace s{{1, 0, 0, 0, 1, 0, 0, 0}};
  CochainComplex c = zero_complex(s);
  std::array<Matrix, 8> vb;
  for (int q = 0; q < 8; ++q) vb[q] = Matrix(s[q + 4], s[q]);
  vb[0] = Matrix::identity(1);
  vb[4] = Matrix::identity(1);
  ChainSpecial cs{Matrix::from_rows({{1}}), Matrix(0, 1), GradedMap(s, s, 4, vb)};
  auto sp = induce_special(cs, c, cohomology(c), 2);
  for (std::size_t n = 0; n <= sp.n_max(); ++n) EXPECT_EQ(sp.delta(n), Matrix::from_rows({{1}}));
  EXPECT_EQ(reduced(sp.space(), sp).hf_red, GradedSpace{});
}

TEST(ChainSpecialTest, ConditionsChecked) {
  // C^3 -> C^4 nonzero, so delta must kill its image.
  GradedSpace s{{0, 1, 1, 1, 1, 0, 0, 0}};
  std::array<Matrix, 8> db;
  for (int q = 0; q < 8; ++q) db[q] = Matrix(s[q + 1], s[q]);
  db[3] = Matrix::from_rows({{1}});
  db[1] = Matrix::from_rows({{1}});
  CochainComplex c(GradedMap(s, s, 1, db));
  ChainSpecial bad_delta{Matrix::from_rows({{1}}), Matrix(1, 1), GradedMap(s, s, 4)};
  EXPECT_EQ(kind_of([&] { bad_delta.validate(c); }), ErrorKind::SpecialConditionViolation);
  ChainSpecial bad_prime{Matrix(1, 1), Matrix::from_rows({{1}}), GradedMap(s, s, 4)};
  EXPECT_EQ(kind_of([&] { bad_prime.validate(c); }), ErrorKind::SpecialConditionViolation);
  ChainSpecial bad_shape{Matrix(1, 2), Matrix(1, 1), GradedMap(s, s, 4)};
  EXPECT_EQ(kind_of([&] { bad_shape.validate(c); }), ErrorKind::ShapeMismatch);
}

TEST(ChainSpecialTest, VMustCommuteWithD) {
  GradedSpace s{{0, 1, 1, 0, 0, 1, 1, 0}};
  std::array<Matrix, 8> db;
  for (int q = 0; q < 8; ++q) db[q] = Matrix(s[q + 1], s[q]);
  db[1] = Matrix::from_rows({{1}});
  db[5] = Matrix::from_rows({{1}});
  CochainComplex c(GradedMap(s, s, 1, db));
  std::array<Matrix, 8> vb;
  for (int q = 0; q < 8; ++q) vb[q] = Matrix(s[q + 4], s[q]);
  vb[1] = Matrix::from_rows({{1}});  // d v != 0 on C^1 while v d = 0
  ChainSpecial cs{Matrix(1, 0), Matrix(1, 1), GradedMap(s, s, 4, vb)};
  EXPECT_EQ(kind_of([&] { cs.validate(c); }), ErrorKind::NotAChainMap);
}
