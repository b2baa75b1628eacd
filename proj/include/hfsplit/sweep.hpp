#pragma once

// Property sweep: generate, validate and verify a range of seeds.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cobordism.hpp"
#include "document.hpp"
#include "gen.hpp"
#include "tracer.hpp"

namespace hfsplit {

struct InstanceCheck {
  std::uint64_t seed = 0;
  SpecialCase kind = SpecialCase::both_zero;
  bool pass = false;
  std::string failure;
  SplittingVerdict verdict;
  bool refinement_ok = false;
  bool towers_ok = false;
  bool planted_dims_ok = true;
  std::size_t deepest_tower = 0;  // most active steps in one tower
  nlohmann::json document;        // filled only on failure, for replay
};

inline InstanceCheck check_instance(const Generated& g, std::uint64_t seed) {
  InstanceCheck c;
  c.seed = seed;
  const Instance& inst = g.instance;
  c.kind = inst.kind();
  try {
    Analysis a = analyze(inst);
    c.verdict = verify_splitting(inst, a);
    DegreeRefinement r = degree_refinement(inst, a);
    c.refinement_ok = r.ok;
    c.towers_ok = true;
    for (const TowerLog& log : trace_towers(inst)) {
      std::size_t active = 0;
      for (const auto& st : log.steps) active += st.active ? 1 : 0;
      c.deepest_tower = std::max(c.deepest_tower, active);
      if (log.step_sum() != r.trace_drop[log.degree]) c.towers_ok = false;
    }
    if (g.planted.h_dims) c.planted_dims_ok = *g.planted.h_dims == inst.hf;
    c.pass = c.verdict.passes() && c.refinement_ok && c.towers_ok && c.planted_dims_ok;
    if (!c.pass) {
      c.failure = !c.verdict.passes()  ? "splitting verdict failed"
                  : !c.refinement_ok   ? "degree-wise trace refinement failed"
                  : !c.towers_ok       ? "tower steps do not telescope to the trace drop"
                                       : "cohomology dims differ from planted dims";
    }
  } catch (const Error& e) {
    c.pass = false;
    c.failure = e.what();
  }
  if (!c.pass) c.document = export_document(inst);
  return c;
}

struct SweepOptions {
  std::uint64_t first = 1;
  std::uint64_t last = 1;
  GenConfig config;  // seed is overwritten per instance
  unsigned jobs = 1;
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::array<std::size_t, 3> per_case{};  // delta, delta_prime, both_zero
  std::size_t deep_towers = 0;            // instances with a tower of depth >= 2
  std::vector<InstanceCheck> failures;

  bool ok() const noexcept { return failures.empty() && passed == total; }
};

inline InstanceCheck sweep_one(const SweepOptions& opts, std::uint64_t seed) {
  GenConfig cfg = opts.config;
  cfg.seed = seed;
  try {
    return check_instance(gen_instance(cfg), seed);
  } catch (const Error& e) {
    InstanceCheck c;
    c.seed = seed;
    c.failure = std::string("generation failed: ") + e.what();
    return c;
  }
}

inline SweepSummary run_sweep(const SweepOptions& opts) {
  if (opts.last < opts.first) throw Error(ErrorKind::ParseError, "empty seed range");
  const std::size_t count = static_cast<std::size_t>(opts.last - opts.first + 1);
  std::vector<InstanceCheck> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) results[i] = sweep_one(opts, opts.first + i);
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepSummary s;
  s.total = count;
  for (auto& r : results) {
    ++s.per_case[static_cast<std::size_t>(r.kind)];
    if (r.deepest_tower >= 2) ++s.deep_towers;
    if (r.pass)
      ++s.passed;
    else
      s.failures.push_back(std::move(r));
  }
  return s;
}

}  // namespace hfsplit
