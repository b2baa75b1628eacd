#include <set>

#include <gtest/gtest.h>

#include <hfsplit/document.hpp>
#include <hfsplit/gen.hpp>
#include <hfsplit/tracer.hpp>

#include "chain_oracle.hpp"
#include "oracles.hpp"

using namespace hfsplit;

namespace {

GenConfig config(std::uint64_t seed) {
  GenConfig c;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(Generator, EmptyInstance) {
  GenConfig c = config(1);
  c.max_dim = 0;
  Instance inst = gen_instance(c).instance;
  EXPECT_EQ(inst.hf, GradedSpace{});
  EXPECT_TRUE(verify_splitting(inst).passes());
  EXPECT_EQ(product_cobordism(inst).hf, GradedSpace{});
}

TEST(Generator, BothZeroReducesToLefschetz) {
  GenConfig c = config(3);
  c.case_mix = {0, 0, 1};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    c.seed = seed;
    Instance inst = gen_instance(c).instance;
    ASSERT_EQ(inst.kind(), SpecialCase::both_zero);
    auto v = verify_splitting(inst);
    EXPECT_EQ(v.h_y, 0);
    EXPECT_EQ(v.lef_w, v.lef_w_hat);
    EXPECT_EQ(v.lambda_fo, -v.lef_w_hat / 2);
  }
}

TEST(Generator, Seed42RoundTripsCoefficients) {
  Generated g = gen_instance(config(42));
  auto r = validate_relations(g.instance.cobordism, g.instance.special);
  ASSERT_TRUE(r.ok);
  for (const auto& c : g.planted.a)
    if (r.unique_a) EXPECT_EQ(r.coefficient_a(c.i, c.n), c.value);
  for (const auto& c : g.planted.b)
    if (r.unique_b) EXPECT_EQ(r.coefficient_b(c.i, c.n), c.value);
}

TEST(Generator, PlantedCoefficientsRecovered) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Generated g = gen_instance(config(seed));
    auto r = validate_relations(g.instance.cobordism, g.instance.special);
    ASSERT_TRUE(r.ok);
    if (r.unique_a)
      for (const auto& c : g.planted.a) {
        EXPECT_EQ(r.coefficient_a(c.i, c.n), c.value) << seed;
        ++checked;
      }
    if (r.unique_b)
      for (const auto& c : g.planted.b) {
        EXPECT_EQ(r.coefficient_b(c.i, c.n), c.value) << seed;
        ++checked;
      }
  }
  EXPECT_GT(checked, 50);
}

TEST(Generator, Deterministic) {
  for (std::uint64_t seed : {1u, 7u, 99u}) {
    EXPECT_EQ(gen_instance(config(seed)).instance, gen_instance(config(seed)).instance);
    GenConfig c = config(seed);
    c.chain_level = true;
    EXPECT_EQ(gen_instance(c).instance, gen_instance(c).instance);
  }
  EXPECT_FALSE(gen_instance(config(1)).instance == gen_instance(config(2)).instance);
}

TEST(Generator, Coverage) {
  std::set<SpecialCase> seen;
  int deep = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Instance inst = gen_instance(config(seed)).instance;
    seen.insert(inst.kind());
    for (const auto& t : trace_towers(inst)) {
      int active = 0;
      for (const auto& s : t.steps) active += s.active;
      if (active >= 2) ++deep;
    }
  }
  EXPECT_EQ(seen.size(), 3u);
  EXPECT_GT(deep, 0);
}

TEST(Generator, DimensionBound) {
  GenConfig c = config(0);
  c.max_dim = 3;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    c.seed = seed;
    for (auto d : gen_instance(c).instance.hf.dims) EXPECT_LE(d, 3u);
  }
}

TEST(Generator, PeriodicMode) {
  GenConfig c = config(0);
  c.periodic = true;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    c.seed = seed;
    Instance inst = gen_instance(c).instance;
    Analysis a = analyze(inst);
    EXPECT_TRUE(check_periodicity(inst.hf, a.reduced).both()) << seed;
    EXPECT_TRUE(verify_splitting(inst, a).passes());
  }
}

TEST(Generator, InfeasibleConfigs) {
  GenConfig c = config(1);
  c.n_max = 0;
  EXPECT_THROW(gen_instance(c), Error);
  c = config(1);
  c.case_mix = {0, 0, 0};
  EXPECT_THROW(gen_instance(c), Error);
}

TEST(Generator, ResampledCobordismsAreValid) {
  Instance base = gen_instance(config(5)).instance;
  std::set<std::string> distinct;
  for (std::uint64_t s = 1; s <= 5; ++s) {
    Generated g = resample_cobordism(base, s);
    EXPECT_EQ(g.instance.special, base.special);
    EXPECT_TRUE(verify_splitting(g.instance).passes());
    distinct.insert(export_document(g.instance)["cobordism"].dump());
  }
  EXPECT_GT(distinct.size(), 1u);
}

TEST(ChainGenerator, Seed7PlantedDims) {
  GenConfig c = config(7);
  c.chain_level = true;
  Generated g = gen_instance(c);
  ASSERT_TRUE(g.planted.h_dims);
  EXPECT_EQ(*g.planted.h_dims, g.instance.hf);
  EXPECT_EQ(oracle::cohomology_dims(g.instance.chain->complex.d()), g.instance.hf.dims);
}

TEST(ChainGenerator, BruteForceOracle) {
  GenConfig c = config(0);
  c.chain_level = true;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    c.seed = seed;
    Generated g = gen_instance(c);
    EXPECT_EQ(oracle::check_chain_instance(g, seed), "") << "seed " << seed;
    EXPECT_TRUE(verify_splitting(g.instance).passes());
  }
}

TEST(ChainGenerator, ZeroDifferentialUsesDrawnData) {
  // With d = 0 the classes are the cochains, so the pair is delta v^n itself.
  GradedSpace s{{1, 1, 0, 0, 2, 1, 0, 0}};
  CochainComplex cx{GradedMap(s, s, 1)};
  std::array<Matrix, 8> vb;
  for (int q = 0; q < 8; ++q) vb[q] = Matrix(s[q + 4], s[q]);
  vb[0] = Matrix::from_rows({{1}, {2}});
  vb[4] = Matrix::from_rows({{3, 1}});
  vb[1] = Matrix::from_rows({{5}});
  vb[5] = Matrix::from_rows({{1}});
  ChainSpecial cs{Matrix::from_rows({{1, -1}}), Matrix::from_rows({{0}}), GradedMap(s, s, 4, vb)};
  ChainLevelData ch{cx, cs, GradedMap::identity(s), 2};
  Instance inst = make_chain_instance(ch);
  EXPECT_EQ(inst.hf, s);
  EXPECT_EQ(inst.special.delta(0), Matrix::from_rows({{1, -1}}));
  EXPECT_EQ(inst.special.delta(1), Matrix::from_rows({{-1}}));            // delta v_0
  EXPECT_EQ(inst.special.delta(2), Matrix::from_rows({{-3, -1}}));        // delta v_0 v_4
}

TEST(ChainGenerator, OracleRejectsCorruptedData) {
  GenConfig c = config(0);
  c.chain_level = true;
  int corrupted = 0;
  for (std::uint64_t seed = 1; seed <= 40 && corrupted < 5; ++seed) {
    c.seed = seed;
    Generated g = gen_instance(c);
    int q = -1;
    for (int k : {4, 0, 1, 5})
      if (g.instance.hf[k] > 0) q = k;
    if (q < 0) continue;
    std::array<Matrix, 8> b;
    for (int k = 0; k < 8; ++k) b[k] = g.instance.cobordism.w.block(k);
    b[q](0, 0) += 1;
    g.instance.cobordism.w = GradedMap(g.instance.hf, g.instance.hf, 0, b);
    EXPECT_NE(oracle::check_chain_instance(g, seed), "") << seed;
    ++corrupted;
  }
  EXPECT_EQ(corrupted, 5);
}
