#pragma once

// A complete verification problem. The cohomology-level fields (hf, special,
// cobordism) are always populated and always in cohomology grading; when the
// instance came from chain-level data they are derived from `chain`.

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "froyshov.hpp"
#include "graded.hpp"

namespace hfsplit {

struct CobordismMap {
  GradedMap w;  // degree-preserving self map of HF^*
  std::string label;

  friend bool operator==(const CobordismMap&, const CobordismMap&) = default;
};

struct ChainLevelData {
  CochainComplex complex;
  ChainSpecial special;
  GradedMap w;  // chain map of degree 0
  std::size_t n_max = 4;

  friend bool operator==(const ChainLevelData&, const ChainLevelData&) = default;
};

struct Instance {
  std::string name;
  Convention convention = Convention::cohomology;  // grading the instance was stated in
  GradedSpace hf;
  SpecialPair special;
  CobordismMap cobordism;
  std::optional<ChainLevelData> chain;
  nlohmann::json metadata = nlohmann::json::object();

  SpecialCase kind() const noexcept { return special.kind(); }
  bool chain_level() const noexcept { return chain.has_value(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

inline Instance make_instance(GradedSpace hf, SpecialPair special, GradedMap w,
                              std::string label = "W") {
  if (!(special.space() == hf))
    throw Error(ErrorKind::ShapeMismatch, "special pair does not live on HF");
  if (!w.is_endomorphism() || !(w.source() == hf))
    throw Error(ErrorKind::ShapeMismatch, "cobordism map must be a degree-0 self map of HF");
  Instance inst;
  inst.hf = hf;
  inst.special = std::move(special);
  inst.cobordism = {std::move(w), std::move(label)};
  return inst;
}

// Cohomology, induced special pair and induced W from chain data.
inline Instance make_chain_instance(ChainLevelData chain, std::string label = "W") {
  const CochainComplex& c = chain.complex;
  if (!chain.w.is_endomorphism() || !(chain.w.source() == c.space()))
    throw Error(ErrorKind::ShapeMismatch, "chain-level W must be a degree-0 self map of CF");
  CohomologyResult coh = cohomology(c);
  SpecialPair sp = induce_special(chain.special, c, coh, chain.n_max);
  GradedMap w = induced_map(chain.w, c, coh, c, coh);
  Instance inst = make_instance(coh.h_space, std::move(sp), std::move(w), std::move(label));
  inst.chain = std::move(chain);
  return inst;
}

// Drops chain data, keeping the derived cohomology-level problem.
inline Instance at_cohomology_level(Instance inst) {
  inst.chain.reset();
  return inst;
}

}  // namespace hfsplit
