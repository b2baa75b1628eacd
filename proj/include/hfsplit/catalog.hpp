#pragma once

// Built-in fixtures. Published values (ranks, h, lambda_FO, Lefschetz
// numbers) are stored under metadata.expected with provenance "published";
// values that follow from them by arithmetic carry "derived", and the
// identity-cobordism demo carries "trivial".
//
// The Sigma(2,7,13) fixture needs delta-family data that is not published:
// only the ranks and h = 2 are. The planted families are
//     degree 0 (HF_5, rank 4):  delta_1 = e1*, delta_3 = e2*
//     degree 4 (HF_1, rank 4):  delta_0 = e1*, delta_2 = e2*
// so both common kernels have codimension 2, matching the reduced ranks.
// W is +Id on those degrees, hence every relation holds with zero
// coefficients.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "graded.hpp"
#include "instance.hpp"

namespace hfsplit {

struct CatalogEntry {
  std::string name;
  std::string summary;
  Instance instance;

  const nlohmann::json& expected() const { return instance.metadata.at("expected"); }
};

namespace detail {

inline nlohmann::json expect(const std::string& value, const char* provenance) {
  return {{"value", value}, {"provenance", provenance}};
}

inline Matrix unit_functional(std::size_t dim, std::size_t i) {
  Matrix m(1, dim);
  m(0, i) = 1;
  return m;
}

// Homology grading, converted to the internal cohomology grading.
inline GradedMap homology_signed_identity(const GradedSpace& hom,
                                          const std::array<int, kDegrees>& sign) {
  std::array<Matrix, kDegrees> b;
  for (int q = 0; q < kDegrees; ++q) b[q] = Matrix::scalar(hom[q], sign[q]);
  return regrade(GradedMap(hom, hom, 0, std::move(b)));
}

inline Instance sigma_2_7_13(bool identity_w) {
  GradedSpace hom{{0, 4, 0, 2, 0, 4, 0, 2}};
  GradedSpace h = regrade(hom);  // (4,0,2,0,4,0,2,0)
  std::vector<Matrix> deltas{unit_functional(4, 0), unit_functional(4, 0), unit_functional(4, 1),
                             unit_functional(4, 1)};
  std::vector<Matrix> primes;
  for (int n = 0; n < 4; ++n) primes.emplace_back(h[delta_prime_degree(n)], 1);
  GradedMap w = identity_w ? GradedMap::identity(h)
                           : homology_signed_identity(hom, {1, 1, 1, -1, 1, 1, 1, -1});
  Instance inst = make_instance(h, SpecialPair(h, std::move(deltas), std::move(primes)),
                                std::move(w), identity_w ? "product" : "tau");
  inst.convention = Convention::homology;
  return inst;
}

inline CatalogEntry sigma_entry() {
  CatalogEntry e{"sigma_2_7_13_mapping_torus",
                 "Mapping torus of complex conjugation on Sigma(2,7,13); W_* = +Id on HF_1, HF_5 "
                 "and -Id on HF_3, HF_7",
                 sigma_2_7_13(false)};
  e.instance.name = e.name;
  e.instance.metadata = {
      {"description", e.summary},
      {"hf_homology", {0, 4, 0, 2, 0, 4, 0, 2}},
      {"hf_reduced_homology", {0, 2, 0, 2, 0, 2, 0, 2}},
      {"notes",
       "delta family is synthetic: delta_1 = e1*, delta_3 = e2* on HF_5 and delta_0 = e1*, "
       "delta_2 = e2* on HF_1 give codimension-2 kernels, reproducing the reduced ranks; W is "
       "the identity there, so all relation coefficients vanish"},
      {"expected",
       {{"lef_w", expect("-4", "published")},
        {"lef_w_hat", expect("0", "published")},
        {"lambda_fo", expect("-2", "published")},
        {"h_x", expect("2", "published")},
        {"h_y", expect("2", "published")},
        {"euler_hf", expect("-12", "derived")},
        {"euler_hf_reduced", expect("-8", "derived")},
        {"special_data", expect("delta_1=e1*, delta_3=e2* on HF^0; delta_0=e1*, delta_2=e2* on HF^4",
                                "derived")}}}};
  return e;
}

inline CatalogEntry cork_entry() {
  GradedSpace hom{{0, 1, 0, 1, 0, 1, 0, 1}};
  GradedSpace h = regrade(hom);
  GradedMap w = homology_signed_identity(hom, {-1, -1, -1, -1, -1, -1, -1, -1});
  CatalogEntry e{"akbulut_cork_mapping_torus",
                 "Mapping torus of the cork involution; HF_* = (0,Z,0,Z,0,Z,0,Z), W_* = -Id, "
                 "reduced equals unreduced",
                 make_instance(h, SpecialPair::zero(h, 1), std::move(w), "tau")};
  e.instance.name = e.name;
  e.instance.convention = Convention::homology;
  e.instance.metadata = {{"description", e.summary},
                         {"hf_homology", {0, 1, 0, 1, 0, 1, 0, 1}},
                         {"expected",
                          {{"lambda_fo", expect("2", "published")},
                           {"h_x", expect("0", "published")},
                           {"h_y", expect("0", "published")},
                           {"lef_w", expect("4", "derived")},
                           {"lef_w_hat", expect("4", "derived")}}}};
  return e;
}

inline CatalogEntry product_entry() {
  CatalogEntry e{"product_cobordism_demo",
                 "Sigma(2,7,13) Floer data with the product cobordism: W_* and W^_* are identities",
                 sigma_2_7_13(true)};
  e.instance.name = e.name;
  e.instance.metadata = {{"description", e.summary},
                         {"expected",
                          {{"lef_w", expect("-12", "trivial")},
                           {"lef_w_hat", expect("-8", "trivial")},
                           {"lambda_fo", expect("-6", "trivial")},
                           {"h_x", expect("2", "trivial")},
                           {"h_y", expect("2", "trivial")}}}};
  return e;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{detail::sigma_entry(), detail::cork_entry(),
                                                 detail::product_entry()};
  return entries;
}

// Exact name, short alias, or a unique prefix of a name.
inline const CatalogEntry& catalog_entry(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 3> aliases{{
      {"sigma_2_7_13", "sigma_2_7_13_mapping_torus"},
      {"akbulut_cork", "akbulut_cork_mapping_torus"},
      {"product_demo", "product_cobordism_demo"},
  }};
  for (const auto& [alias, full] : aliases)
    if (name == alias) name = full;
  const CatalogEntry* match = nullptr;
  int prefix_hits = 0;
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
    if (e.name.starts_with(name)) {
      match = &e;
      ++prefix_hits;
    }
  }
  if (prefix_hits == 1) return *match;
  throw Error(ErrorKind::UnknownEntry, "no catalog entry '" + std::string(name) + "'");
}

}  // namespace hfsplit
