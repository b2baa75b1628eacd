#include <gtest/gtest.h>

#include <hfsplit/catalog.hpp>
#include <hfsplit/gen.hpp>
#include <hfsplit/tracer.hpp>

using namespace hfsplit;

namespace {

Matrix unit_row(std::size_t n, std::size_t i) {
  Matrix m(1, n);
  m(0, i) = 1;
  return m;
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

const Instance& sigma() { return catalog_entry("sigma_2_7_13_mapping_torus").instance; }

}  // namespace

TEST(TraceCase1, SigmaDegreeZero) {
  auto logs = trace_case1(sigma());
  const TowerLog& t0 = logs[0];
  EXPECT_EQ(t0.degree, 0);
  ASSERT_EQ(t0.steps.size(), 2u);
  EXPECT_EQ(t0.steps[0].k, 1u);
  EXPECT_EQ(t0.steps[1].k, 3u);
  for (const auto& s : t0.steps) {
    EXPECT_TRUE(s.active);
    EXPECT_EQ(s.step, 1);
  }
  EXPECT_EQ(t0.ambient_dim - t0.final_dim, 2u);
  EXPECT_EQ(t0.step_sum(), 2);
  EXPECT_EQ(logs[1].degree, 4);
  EXPECT_EQ(logs[1].step_sum(), 2);
}

TEST(TraceCase1, RepeatedFunctionalIsInactive) {
  GradedSpace h{{2, 0, 0, 0, 1, 0, 0, 0}};
  SpecialPair sp(h, {unit_row(1, 0), unit_row(2, 0), unit_row(1, 0), unit_row(2, 0)},
                 std::vector<Matrix>(4, Matrix(0, 1)));
  Instance inst = make_instance(h, sp, GradedMap::identity(h));
  auto logs = trace_case1(inst);
  ASSERT_EQ(logs[0].steps.size(), 2u);
  EXPECT_TRUE(logs[0].steps[0].active);
  EXPECT_FALSE(logs[0].steps[1].active);  // delta_3 vanishes on Z(1)
  EXPECT_EQ(logs[0].steps[1].step, 0);
}

TEST(TraceCase1, BothZeroIsFlat) {
  const Instance& cork = catalog_entry("akbulut_cork_mapping_torus").instance;
  for (const auto& t : trace_towers(cork)) {
    for (const auto& s : t.steps) EXPECT_EQ(s.step, 0);
    EXPECT_EQ(t.full_trace, t.reduced_trace);
  }
}

TEST(TraceCase1, WrongCase) {
  GradedSpace h{{0, 1, 0, 0, 0, 0, 0, 0}};
  SpecialPair sp(h, {Matrix(1, 0)}, {Matrix::from_rows({{1}})});
  Instance inst = make_instance(h, sp, GradedMap::identity(h));
  EXPECT_EQ(kind_of([&] { trace_case1(inst); }), ErrorKind::CaseMismatch);
  EXPECT_EQ(kind_of([&] { trace_case2(sigma()); }), ErrorKind::CaseMismatch);
}

TEST(TraceCase1, ScaledWIsCaught) {
  // 2 W keeps every Z(k) invariant but the steps are no longer 0 or 1.
  Instance inst = sigma();
  inst.cobordism.w = inst.cobordism.w + inst.cobordism.w;
  try {
    trace_case1(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StepMismatch);
    EXPECT_NE(std::string(e.what()).find("k = 1"), std::string::npos) << e.what();
  }
}

TEST(TraceCase2, OneStepTower) {
  GradedSpace h{{0, 1, 0, 0, 0, 0, 0, 0}};
  SpecialPair sp(h, {Matrix(1, 0)}, {Matrix::from_rows({{1}})});
  Instance inst = make_instance(h, sp, GradedMap::identity(h));
  auto logs = trace_case2(inst);
  EXPECT_EQ(logs[0].degree, 1);
  EXPECT_EQ(logs[0].full_trace - logs[0].reduced_trace, 1);
  EXPECT_EQ(logs[0].final_dim, 1u);
  EXPECT_EQ(logs[1].degree, 5);
  EXPECT_TRUE(logs[1].steps.empty());
}

TEST(Tracer, GeneratedInstancesTelescope) {
  int z_towers = 0, b_towers = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    Instance inst = gen_instance(cfg).instance;
    Analysis a = analyze(inst);
    DegreeRefinement r = degree_refinement(inst, a);
    for (const auto& t : trace_towers(inst)) {
      for (const auto& s : t.steps) {
        EXPECT_TRUE(s.step == 0 || s.step == 1);
        EXPECT_EQ(s.step == 1, s.active);
      }
      EXPECT_EQ(t.step_sum(), r.trace_drop[t.degree]) << "seed " << seed;
      (t.quotient_tower ? b_towers : z_towers)++;
    }
  }
  EXPECT_GT(z_towers, 0);
  EXPECT_GT(b_towers, 0);
}
