#pragma once

// Instance documents (JSON). See docs/instance-format.md for the schema.
//
// Documents may be stated in homology or cohomology grading. Homology
// documents are regraded on load by q -> 5 - q; every block keeps its matrix.
// Rationals are written as JSON integers when they fit in 64 bits and as
// "p/q" (or "p") strings otherwise; floats are rejected.

#include <array>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cobordism.hpp"
#include "error.hpp"
#include "graded.hpp"
#include "instance.hpp"
#include "rational.hpp"

namespace hfsplit {

inline constexpr const char* kSchemaVersion = "1";

namespace detail {

using nlohmann::json;

[[noreturn]] inline void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

// Well-formed JSON whose matrix sizes disagree with the declared dimensions.
[[noreturn]] inline void shape_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ShapeMismatch, where + ": " + what);
}

inline json rational_to_json(const Rational& r) {
  if (fits_int64(r)) return json(numerator(r).convert_to<std::int64_t>());
  return json(to_string(r));
}

inline Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(j.get<std::uint64_t>()));
    return Rational(Integer(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      parse_error(where, e.what());
    }
  }
  parse_error(where, "expected an integer or a \"p/q\" string, got " + std::string(j.type_name()));
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Shape comes from the surrounding dimensions; `[]` stands for any empty
// matrix.
inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                               const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an array of rows");
  if (j.empty() && rows * cols == 0) return Matrix(rows, cols);
  if (j.size() != rows)
    shape_error(where, "expected " + std::to_string(rows) + " rows, got " +
                           std::to_string(j.size()));
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    std::string rw = where + "[" + std::to_string(i) + "]";
    if (!row.is_array()) parse_error(rw, "expected a row array");
    if (row.size() != cols)
      shape_error(rw, "expected " + std::to_string(cols) + " entries, got " +
                          std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = rational_from_json(row[c], rw + "[" + std::to_string(c) + "]");
  }
  return m;
}

inline const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_error(where, std::string("missing field '") + key + "'");
  return *it;
}

inline GradedSpace dims_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != kDegrees) parse_error(where, "expected 8 dimensions");
  GradedSpace s;
  for (int q = 0; q < kDegrees; ++q) {
    if (!j[q].is_number_integer() || j[q].get<long long>() < 0)
      parse_error(where + "[" + std::to_string(q) + "]", "expected a nonnegative integer");
    s.dims[q] = j[q].get<std::size_t>();
  }
  return s;
}

inline json map_to_json(const GradedMap& f) {
  json blocks = json::array();
  for (int q = 0; q < kDegrees; ++q) blocks.push_back(matrix_to_json(f.block(q)));
  return blocks;
}

// Map of the given shift on `space`, both in the document's grading.
inline GradedMap map_from_json(const json& j, const GradedSpace& space, int shift,
                               const std::string& where) {
  if (!j.is_array() || j.size() != kDegrees) parse_error(where, "expected 8 blocks");
  std::array<Matrix, kDegrees> b;
  for (int q = 0; q < kDegrees; ++q)
    b[q] = matrix_from_json(j[q], space[q + shift], space[q], where + "[" + std::to_string(q) + "]");
  return GradedMap(space, space, shift, std::move(b));
}

inline Convention convention_from_json(const json& j, const std::string& where) {
  if (j == "homology") return Convention::homology;
  if (j == "cohomology") return Convention::cohomology;
  parse_error(where, "convention must be \"homology\" or \"cohomology\"");
}

// Degree shifts of d and v as stated in a document of the given grading.
inline int doc_shift(int cohomology_shift, Convention c) {
  return c == Convention::homology ? mod8(-cohomology_shift) : cohomology_shift;
}

inline int doc_degree(int cohomology_degree, Convention c) {
  return c == Convention::homology ? regrade_degree(cohomology_degree) : cohomology_degree;
}

}  // namespace detail

inline nlohmann::json export_document(const Instance& inst) {
  using nlohmann::json;
  using namespace detail;
  const Convention c = inst.convention;
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["name"] = inst.name;
  doc["convention"] = to_string(c);
  doc["level"] = inst.chain ? "chain-level" : "cohomology-level";
  if (inst.chain) {
    const ChainLevelData& ch = *inst.chain;
    doc["spaces"] = {{"dims", in_convention(ch.complex.space(), c).dims}};
    doc["differential"] = {{"blocks", map_to_json(in_convention(ch.complex.d(), c))}};
    doc["v"] = {{"blocks", map_to_json(in_convention(ch.special.v, c))}};
    doc["delta"] = matrix_to_json(ch.special.delta);
    doc["delta_prime"] = matrix_to_json(ch.special.delta_prime);
    doc["n_max"] = ch.n_max;
    doc["cobordism"] = {{"label", inst.cobordism.label},
                        {"blocks", map_to_json(in_convention(ch.w, c))}};
  } else {
    doc["spaces"] = {{"dims", in_convention(inst.hf, c).dims}};
    json deltas = json::array(), primes = json::array();
    for (const auto& m : inst.special.deltas()) deltas.push_back(matrix_to_json(m));
    for (const auto& m : inst.special.deltas_prime()) primes.push_back(matrix_to_json(m));
    doc["special"] = {{"case", to_string(inst.kind())},
                      {"deltas", std::move(deltas)},
                      {"deltas_prime", std::move(primes)}};
    doc["cobordism"] = {{"label", inst.cobordism.label},
                        {"blocks", map_to_json(in_convention(inst.cobordism.w, c))}};
  }
  doc["metadata"] = inst.metadata;
  return doc;
}

// Builds the instance; with `validate`, also requires the cobordism
// relations and the invariance of Z and B.
inline Instance instance_from_json(const nlohmann::json& doc, bool validate = true) {
  using namespace detail;
  const std::string root = "document";
  const json& version = field(doc, "schema_version", root);
  if (version != kSchemaVersion)
    parse_error("schema_version", "unsupported version " + version.dump());
  Instance inst;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) parse_error("name", "expected a string");
    inst.name = it->get<std::string>();
  }
  inst.convention = convention_from_json(field(doc, "convention", root), "convention");
  const Convention c = inst.convention;
  const json& level = field(doc, "level", root);
  if (level != "chain-level" && level != "cohomology-level")
    parse_error("level", "must be \"chain-level\" or \"cohomology-level\"");
  GradedSpace doc_space = dims_from_json(field(field(doc, "spaces", root), "dims", "spaces"),
                                         "spaces.dims");
  const json& cob = field(doc, "cobordism", root);
  std::string label = "W";
  if (auto it = cob.find("label"); it != cob.end()) {
    if (!it->is_string()) parse_error("cobordism.label", "expected a string");
    label = it->get<std::string>();
  }
  auto to_internal = [c](const GradedMap& f) { return in_convention(f, c); };
  GradedMap w_doc = map_from_json(field(cob, "blocks", "cobordism"), doc_space, 0,
                                  "cobordism.blocks");

  if (level == "chain-level") {
    GradedMap d_doc = map_from_json(field(field(doc, "differential", root), "blocks", "differential"),
                                    doc_space, doc_shift(1, c), "differential.blocks");
    GradedMap v_doc = map_from_json(field(field(doc, "v", root), "blocks", "v"), doc_space,
                                    doc_shift(4, c), "v.blocks");
    Matrix delta = matrix_from_json(field(doc, "delta", root), 1, doc_space[doc_degree(4, c)],
                                    "delta");
    Matrix delta_prime = matrix_from_json(field(doc, "delta_prime", root),
                                          doc_space[doc_degree(1, c)], 1, "delta_prime");
    const json& nm = field(doc, "n_max", root);
    if (!nm.is_number_integer() || nm.get<long long>() < 1)
      parse_error("n_max", "expected a positive integer");
    ChainLevelData chain{CochainComplex(to_internal(d_doc)),
                         ChainSpecial{std::move(delta), std::move(delta_prime), to_internal(v_doc)},
                         to_internal(w_doc), nm.get<std::size_t>()};
    Instance derived = make_chain_instance(std::move(chain), label);
    derived.name = inst.name;
    derived.convention = c;
    inst = std::move(derived);
  } else {
    const json& sp = field(doc, "special", root);
    const json& dj = field(sp, "deltas", "special");
    const json& pj = field(sp, "deltas_prime", "special");
    if (!dj.is_array() || !pj.is_array()) parse_error("special", "families must be arrays");
    GradedSpace h = in_convention(doc_space, c);
    std::vector<Matrix> deltas, primes;
    for (std::size_t n = 0; n < dj.size(); ++n)
      deltas.push_back(matrix_from_json(dj[n], 1, h[delta_degree(static_cast<int>(n))],
                                        "special.deltas[" + std::to_string(n) + "]"));
    for (std::size_t n = 0; n < pj.size(); ++n)
      primes.push_back(matrix_from_json(pj[n], h[delta_prime_degree(static_cast<int>(n))], 1,
                                        "special.deltas_prime[" + std::to_string(n) + "]"));
    SpecialPair pair(h, std::move(deltas), std::move(primes));
    if (auto it = sp.find("case"); it != sp.end() && *it != to_string(pair.kind()))
      throw Error(ErrorKind::CaseMismatch,
                  "declared case " + it->dump() + " but the families give " + to_string(pair.kind()));
    Instance built = make_instance(h, std::move(pair), to_internal(w_doc), label);
    built.name = inst.name;
    built.convention = c;
    inst = std::move(built);
  }
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) parse_error("metadata", "expected an object");
    inst.metadata = *it;
  }
  if (validate) analyze(inst);
  return inst;
}

inline Instance parse_document(const std::string& text, bool validate = true) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return instance_from_json(doc, validate);
}

inline Instance load(const std::string& path, bool validate = true) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), validate);
}

inline void save(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << export_document(inst).dump(2) << "\n";
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

}  // namespace hfsplit
