#pragma once

// Mod-8 graded vector spaces, degree-shifting maps, cochain complexes and
// their cohomology.
//
// Lefschetz numbers use the alternating convention
//     Lef(f) = sum_q (-1)^q Tr(f_q),
// which is the only sign choice that reproduces Lef(W_*) = -4 and
// Lef(W^_*) = 0 for the Sigma(2,7,13) mapping torus, where W_* is +Id on
// HF_1, HF_5 (rank 4) and -Id on HF_3, HF_7 (rank 2). An unsigned sum would
// give 4 and 0 for the reduced map, not -4 and 0.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "qlinalg.hpp"

namespace hfsplit {

inline constexpr int kDegrees = 8;

inline constexpr int mod8(int q) noexcept { return ((q % kDegrees) + kDegrees) % kDegrees; }

inline constexpr int parity_sign(int q) noexcept { return mod8(q) % 2 == 0 ? 1 : -1; }

enum class Convention { homology, cohomology };

inline std::string to_string(Convention c) {
  return c == Convention::homology ? "homology" : "cohomology";
}

// Homology degree q corresponds to cohomology degree 5 - q and vice versa.
inline constexpr int regrade_degree(int q) noexcept { return mod8(5 - q); }

struct GradedSpace {
  std::array<std::size_t, kDegrees> dims{};

  std::size_t operator[](int q) const { return dims[static_cast<std::size_t>(mod8(q))]; }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto d : dims) t += d;
    return t;
  }
  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;
};

class GradedMap {
 public:
  GradedMap() : GradedMap(GradedSpace{}, GradedSpace{}, 0) {}

  // Zero map of the given shift.
  GradedMap(GradedSpace source, GradedSpace target, int shift)
      : source_(source), target_(target), shift_(mod8(shift)) {
    for (int q = 0; q < kDegrees; ++q) blocks_[q] = Matrix(target_[q + shift_], source_[q]);
  }

  GradedMap(GradedSpace source, GradedSpace target, int shift, std::array<Matrix, kDegrees> blocks)
      : source_(source), target_(target), shift_(mod8(shift)), blocks_(std::move(blocks)) {
    for (int q = 0; q < kDegrees; ++q) {
      const Matrix& b = blocks_[q];
      if (b.cols() != source_[q] || b.rows() != target_[q + shift_])
        throw Error(ErrorKind::ShapeMismatch,
                    "block in degree " + std::to_string(q) + " is " + b.shape() + ", expected " +
                        std::to_string(target_[q + shift_]) + "x" + std::to_string(source_[q]));
    }
  }

  static GradedMap identity(const GradedSpace& s) {
    std::array<Matrix, kDegrees> b;
    for (int q = 0; q < kDegrees; ++q) b[q] = Matrix::identity(s[q]);
    return GradedMap(s, s, 0, std::move(b));
  }

  const GradedSpace& source() const noexcept { return source_; }
  const GradedSpace& target() const noexcept { return target_; }
  int shift() const noexcept { return shift_; }
  const Matrix& block(int q) const { return blocks_[static_cast<std::size_t>(mod8(q))]; }
  const std::array<Matrix, kDegrees>& blocks() const noexcept { return blocks_; }

  bool is_endomorphism() const { return shift_ == 0 && source_ == target_; }

  bool is_zero() const {
    for (const auto& b : blocks_)
      if (!b.is_zero()) return false;
    return true;
  }

  friend bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.shift_ == b.shift_ && a.source_ == b.source_ && a.target_ == b.target_ &&
           a.blocks_ == b.blocks_;
  }

  // (g after f): degree q goes through f.block(q) then g.block(q + f.shift).
  friend GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (!(f.target_ == g.source_))
      throw Error(ErrorKind::DimensionMismatch, "compose: target of f is not the source of g");
    std::array<Matrix, kDegrees> b;
    for (int q = 0; q < kDegrees; ++q) b[q] = g.block(q + f.shift_) * f.block(q);
    return GradedMap(f.source_, g.target_, f.shift_ + g.shift_, std::move(b));
  }

  friend GradedMap operator+(const GradedMap& a, const GradedMap& b) {
    a.require_compatible(b);
    std::array<Matrix, kDegrees> out;
    for (int q = 0; q < kDegrees; ++q) out[q] = a.blocks_[q] + b.blocks_[q];
    return GradedMap(a.source_, a.target_, a.shift_, std::move(out));
  }

  friend GradedMap operator-(const GradedMap& a, const GradedMap& b) {
    a.require_compatible(b);
    std::array<Matrix, kDegrees> out;
    for (int q = 0; q < kDegrees; ++q) out[q] = a.blocks_[q] - b.blocks_[q];
    return GradedMap(a.source_, a.target_, a.shift_, std::move(out));
  }

 private:
  void require_compatible(const GradedMap& b) const {
    if (!(source_ == b.source_ && target_ == b.target_ && shift_ == b.shift_))
      throw Error(ErrorKind::DimensionMismatch, "graded maps of different type");
  }

  GradedSpace source_;
  GradedSpace target_;
  int shift_ = 0;
  std::array<Matrix, kDegrees> blocks_;
};

class CochainComplex {
 public:
  CochainComplex() : CochainComplex(GradedMap(GradedSpace{}, GradedSpace{}, 1)) {}

  explicit CochainComplex(GradedMap d) : d_(std::move(d)) {
    if (d_.shift() != 1) throw Error(ErrorKind::ShapeMismatch, "differential must have degree +1");
    if (!(d_.source() == d_.target()))
      throw Error(ErrorKind::ShapeMismatch, "differential must be an endomorphism of one space");
    for (int q = 0; q < kDegrees; ++q)
      if (!(d_.block(q + 1) * d_.block(q)).is_zero())
        throw Error(ErrorKind::DSquaredNonzero, "d o d != 0 out of degree " + std::to_string(q));
  }

  const GradedSpace& space() const noexcept { return d_.source(); }
  const GradedMap& d() const noexcept { return d_; }

  friend bool operator==(const CochainComplex&, const CochainComplex&) = default;

 private:
  GradedMap d_;
};

struct DegreeCohomology {
  Subspace cocycles;       // in CF^q
  Subspace coboundaries;   // in CF^q
  QuotientSpace classes;   // cocycle coordinates / coboundary coordinates
  Matrix rep_section;      // H^q -> CF^q, cocycle representatives
  Matrix class_projection; // cocycle coordinates -> H^q

  // Cohomology classes of cocycles given as columns in CF^q coordinates.
  Matrix class_of(const Matrix& cocycle_vectors) const {
    if (!cocycles.contains(cocycle_vectors))
      throw Error(ErrorKind::InvarianceViolation, "vector is not a cocycle");
    return class_projection * cocycles.coordinates(cocycle_vectors);
  }
};

struct CohomologyResult {
  GradedSpace h_space;
  std::array<DegreeCohomology, kDegrees> degrees;

  const DegreeCohomology& operator[](int q) const {
    return degrees[static_cast<std::size_t>(mod8(q))];
  }
};

inline CohomologyResult cohomology(const CochainComplex& c) {
  CohomologyResult out;
  for (int q = 0; q < kDegrees; ++q) {
    DegreeCohomology& h = out.degrees[q];
    h.cocycles = kernel_basis(c.d().block(q));
    h.coboundaries = image_basis(c.d().block(q - 1));
    // coboundaries lie in the cocycles because d o d = 0
    Subspace inner = Subspace::span(h.cocycles.coordinates(h.coboundaries.basis()));
    h.classes = quotient(h.cocycles.dim(), inner);
    h.class_projection = h.classes.projection;
    h.rep_section = h.cocycles.basis() * h.classes.section;
    out.h_space.dims[q] = h.classes.dim();
  }
  return out;
}

namespace detail {

inline void require_chain_map(const GradedMap& f, const CochainComplex& c1,
                              const CochainComplex& c2) {
  if (!(f.source() == c1.space()) || !(f.target() == c2.space()))
    throw Error(ErrorKind::DimensionMismatch, "chain map spaces do not match the complexes");
  for (int q = 0; q < kDegrees; ++q) {
    const Matrix lhs = f.block(q + 1) * c1.d().block(q);
    const Matrix rhs = c2.d().block(q + f.shift()) * f.block(q);
    if (!(lhs == rhs))
      throw Error(ErrorKind::NotAChainMap, "f d != d f out of degree " + std::to_string(q));
  }
}

}  // namespace detail

// Map induced on cohomology by a chain map of any shift; `sections` overrides
// the representative choice of the source (used to test independence).
inline GradedMap induced_map(const GradedMap& f, const CochainComplex& c1,
                             const CohomologyResult& h1, const CochainComplex& c2,
                             const CohomologyResult& h2,
                             const std::array<Matrix, kDegrees>* sections = nullptr) {
  detail::require_chain_map(f, c1, c2);
  std::array<Matrix, kDegrees> b;
  for (int q = 0; q < kDegrees; ++q) {
    const Matrix& rep = sections ? (*sections)[q] : h1[q].rep_section;
    b[q] = h2[q + f.shift()].class_of(f.block(q) * rep);
  }
  return GradedMap(h1.h_space, h2.h_space, f.shift(), std::move(b));
}

inline GradedMap induced_map(const GradedMap& f, const CochainComplex& c1,
                             const CochainComplex& c2) {
  return induced_map(f, c1, cohomology(c1), c2, cohomology(c2));
}

inline Rational lefschetz(const GradedMap& f) {
  if (!f.is_endomorphism())
    throw Error(ErrorKind::NonSquare, "Lefschetz number needs a degree-0 self map");
  Rational sum = 0;
  for (int q = 0; q < kDegrees; ++q) sum += parity_sign(q) * trace(f.block(q));
  return sum;
}

inline long long euler(const GradedSpace& s) {
  long long chi = 0;
  for (int q = 0; q < kDegrees; ++q) chi += parity_sign(q) * static_cast<long long>(s[q]);
  return chi;
}

// q -> 5 - q. Blocks travel unchanged; a map of shift s becomes one of
// shift -s.
inline GradedSpace regrade(const GradedSpace& s) {
  GradedSpace out;
  for (int q = 0; q < kDegrees; ++q) out.dims[regrade_degree(q)] = s[q];
  return out;
}

inline GradedMap regrade(const GradedMap& f) {
  std::array<Matrix, kDegrees> b;
  for (int q = 0; q < kDegrees; ++q) b[regrade_degree(q)] = f.block(q);
  return GradedMap(regrade(f.source()), regrade(f.target()), -f.shift(), std::move(b));
}

}  // namespace hfsplit
