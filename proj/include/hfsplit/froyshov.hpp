#pragma once

// Special boundary structure and reduced Floer cohomology.
//
// Everything here is in cohomology grading. The families are
//     delta_n       : H^{4-4n} -> Q   (degree 4 for even n, degree 0 for odd n)
//     delta'_n(1)   in H^{1+4n}       (degree 1 for even n, degree 5 for odd n)
// and the reduced groups are Z^q / B^q with
//     Z^0 = intersection of ker delta_n over odd n,  Z^4 over even n,
//     B^1 = span of delta'_n(1) over even n,          B^5 over odd n,
// Z^q = H^q and B^q = 0 in every other degree.
//
// At most one of the two families is nonzero. This is enforced when a
// SpecialPair is built rather than derived: the statement that a vanishing
// delta_0 forces every delta_n to vanish relies on a cochain homotopy formula
// that is not reproduced here.
//
// At chain level, v is required to be a strict chain map (v d = d v). That is
// the minimal condition making [delta v^n] and [v^n delta'] well defined on
// cohomology; it stands in for the homotopy identity satisfied by the
// instanton v, which is not transcribed.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "graded.hpp"
#include "qlinalg.hpp"

namespace hfsplit {

enum class SpecialCase {
  delta_side,        // delta'_0 = 0; the delta family may be nonzero
  delta_prime_side,  // delta_0 = 0; the delta' family may be nonzero
  both_zero,
};

inline std::string to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::delta_side: return "delta";
    case SpecialCase::delta_prime_side: return "delta_prime";
    case SpecialCase::both_zero: return "both_zero";
  }
  return "?";
}

inline constexpr int delta_degree(int n) noexcept { return n % 2 == 0 ? 4 : 0; }
inline constexpr int delta_prime_degree(int n) noexcept { return n % 2 == 0 ? 1 : 5; }

class SpecialPair {
 public:
  SpecialPair() = default;

  // Both families must have the same length n_max + 1.
  SpecialPair(const GradedSpace& h, std::vector<Matrix> deltas, std::vector<Matrix> deltas_prime)
      : h_(h), deltas_(std::move(deltas)), deltas_prime_(std::move(deltas_prime)) {
    if (deltas_.empty() || deltas_.size() != deltas_prime_.size())
      throw Error(ErrorKind::ShapeMismatch,
                  "delta families must be nonempty and of equal length (got " +
                      std::to_string(deltas_.size()) + " and " +
                      std::to_string(deltas_prime_.size()) + ")");
    for (std::size_t n = 0; n < deltas_.size(); ++n) {
      int q = delta_degree(static_cast<int>(n));
      if (deltas_[n].rows() != 1 || deltas_[n].cols() != h_[q])
        throw Error(ErrorKind::ShapeMismatch, "delta_" + std::to_string(n) + " is " +
                                                  deltas_[n].shape() + ", expected 1x" +
                                                  std::to_string(h_[q]));
      int p = delta_prime_degree(static_cast<int>(n));
      if (deltas_prime_[n].cols() != 1 || deltas_prime_[n].rows() != h_[p])
        throw Error(ErrorKind::ShapeMismatch, "delta'_" + std::to_string(n) + " is " +
                                                  deltas_prime_[n].shape() + ", expected " +
                                                  std::to_string(h_[p]) + "x1");
    }
    classify();
  }

  static SpecialPair zero(const GradedSpace& h, std::size_t n_max) {
    std::vector<Matrix> d, dp;
    for (std::size_t n = 0; n <= n_max; ++n) {
      d.emplace_back(1, h[delta_degree(static_cast<int>(n))]);
      dp.emplace_back(h[delta_prime_degree(static_cast<int>(n))], 1);
    }
    return SpecialPair(h, std::move(d), std::move(dp));
  }

  const GradedSpace& space() const noexcept { return h_; }
  std::size_t n_max() const noexcept { return deltas_.size() - 1; }
  SpecialCase kind() const noexcept { return kind_; }
  const std::vector<Matrix>& deltas() const noexcept { return deltas_; }
  const std::vector<Matrix>& deltas_prime() const noexcept { return deltas_prime_; }
  const Matrix& delta(std::size_t n) const { return deltas_.at(n); }
  const Matrix& delta_prime(std::size_t n) const { return deltas_prime_.at(n); }

  friend bool operator==(const SpecialPair&, const SpecialPair&) = default;

 private:
  void classify() {
    bool d0 = !deltas_[0].is_zero();
    bool p0 = !deltas_prime_[0].is_zero();
    if (d0 && p0)
      throw Error(ErrorKind::DichotomyViolation, "delta_0 and delta'_0 are both nonzero");
    auto all_zero = [](const std::vector<Matrix>& fam) {
      for (const auto& m : fam)
        if (!m.is_zero()) return false;
      return true;
    };
    if (!d0 && !all_zero(deltas_))
      throw Error(ErrorKind::DichotomyViolation, "delta_0 = 0 but a later delta_n is nonzero");
    if (!p0 && !all_zero(deltas_prime_))
      throw Error(ErrorKind::DichotomyViolation, "delta'_0 = 0 but a later delta'_n is nonzero");
    kind_ = d0 ? SpecialCase::delta_side
               : (p0 ? SpecialCase::delta_prime_side : SpecialCase::both_zero);
  }

  GradedSpace h_;
  std::vector<Matrix> deltas_;
  std::vector<Matrix> deltas_prime_;
  SpecialCase kind_ = SpecialCase::both_zero;
};

// Chain-level data: delta on CF^4, delta'(1) in CF^1, v of degree +4.
struct ChainSpecial {
  Matrix delta;        // 1 x dim CF^4
  Matrix delta_prime;  // dim CF^1 x 1
  GradedMap v;

  void validate(const CochainComplex& c) const {
    const GradedSpace& s = c.space();
    if (delta.rows() != 1 || delta.cols() != s[4])
      throw Error(ErrorKind::ShapeMismatch, "chain delta is " + delta.shape());
    if (delta_prime.cols() != 1 || delta_prime.rows() != s[1])
      throw Error(ErrorKind::ShapeMismatch, "chain delta' is " + delta_prime.shape());
    if (v.shift() != 4 || !(v.source() == s) || !(v.target() == s))
      throw Error(ErrorKind::ShapeMismatch, "v must be a degree +4 self map of the complex");
    if (!(delta * c.d().block(3)).is_zero())
      throw Error(ErrorKind::SpecialConditionViolation, "delta does not vanish on coboundaries (d delta != 0)");
    if (!(c.d().block(1) * delta_prime).is_zero())
      throw Error(ErrorKind::SpecialConditionViolation, "delta'(1) is not a cocycle (d delta' != 0)");
    detail::require_chain_map(v, c, c);
  }

  friend bool operator==(const ChainSpecial&, const ChainSpecial&) = default;
};

namespace detail {

// Member j of a tower is "settled" once it lies in the span of the earlier
// members; v^2 then keeps every later member in that span as well.
inline bool in_span_of_rows(const std::vector<Matrix>& rows, const Matrix& r) {
  if (r.is_zero()) return true;
  if (rows.empty()) return false;
  Matrix stack = rows.front();
  for (std::size_t i = 1; i < rows.size(); ++i) stack = vstack(stack, rows[i]);
  return Subspace::span(stack.transpose()).contains(r.transpose());
}

}  // namespace detail

// Evaluates delta v^n and v^n delta' on cohomology. The families are computed
// up to at least n_max and then extended until each of the four towers
// (delta even/odd, delta' even/odd) has produced a member dependent on its
// predecessors, after which Z and B no longer change.
inline SpecialPair induce_special(const ChainSpecial& cs, const CochainComplex& c,
                                  const CohomologyResult& coh, std::size_t n_max) {
  cs.validate(c);
  std::vector<Matrix> deltas, primes;
  std::array<std::vector<Matrix>, 4> towers;  // delta even, delta odd, delta' even, delta' odd
  std::array<bool, 4> settled{};
  Matrix chain_delta = cs.delta;       // delta v^n on CF^{4-4n}
  Matrix chain_prime = cs.delta_prime;  // v^n delta'(1) in CF^{1+4n}
  const std::size_t hard_cap = 4 * (c.space().total() + 2) + n_max;
  for (std::size_t n = 0;; ++n) {
    int dq = delta_degree(static_cast<int>(n));
    int pq = delta_prime_degree(static_cast<int>(n));
    if (n > 0) {
      chain_delta = chain_delta * cs.v.block(dq);
      chain_prime = cs.v.block(delta_prime_degree(static_cast<int>(n - 1))) * chain_prime;
    }
    Matrix dn = chain_delta * coh[dq].rep_section;
    Matrix pn = coh[pq].class_of(chain_prime);
    std::size_t par = n % 2;
    if (!settled[par]) settled[par] = detail::in_span_of_rows(towers[par], dn);
    if (!settled[2 + par])
      settled[2 + par] = detail::in_span_of_rows(towers[2 + par], pn.transpose());
    towers[par].push_back(dn);
    towers[2 + par].push_back(pn.transpose());
    deltas.push_back(std::move(dn));
    primes.push_back(std::move(pn));
    bool all = settled[0] && settled[1] && settled[2] && settled[3];
    if (n >= n_max && all) break;
    if (n >= hard_cap)
      throw Error(ErrorKind::Infeasible, "special families failed to stabilize");
  }
  return SpecialPair(coh.h_space, std::move(deltas), std::move(primes));
}

inline std::array<Subspace, kDegrees> z_subspaces(const GradedSpace& h, const SpecialPair& sp) {
  if (!(sp.space() == h))
    throw Error(ErrorKind::DimensionMismatch, "special pair lives on a different space");
  std::array<Subspace, kDegrees> z;
  for (int q = 0; q < kDegrees; ++q) z[q] = Subspace::full(h[q]);
  for (int q : {0, 4}) {
    Matrix stacked(0, h[q]);
    for (std::size_t n = 0; n <= sp.n_max(); ++n)
      if (delta_degree(static_cast<int>(n)) == q) stacked = vstack(stacked, sp.delta(n));
    z[q] = kernel_basis(stacked);
  }
  return z;
}

inline std::array<Subspace, kDegrees> b_subspaces(const GradedSpace& h, const SpecialPair& sp) {
  if (!(sp.space() == h))
    throw Error(ErrorKind::DimensionMismatch, "special pair lives on a different space");
  std::array<Subspace, kDegrees> b;
  for (int q = 0; q < kDegrees; ++q) b[q] = Subspace::zero(h[q]);
  for (int q : {1, 5}) {
    Matrix cols(h[q], 0);
    for (std::size_t n = 0; n <= sp.n_max(); ++n)
      if (delta_prime_degree(static_cast<int>(n)) == q) cols = hstack(cols, sp.delta_prime(n));
    b[q] = Subspace::span(cols);
  }
  return b;
}

struct ReducedResult {
  std::array<Subspace, kDegrees> z;
  std::array<Subspace, kDegrees> b;
  GradedSpace hf_red;
  // Z^q / B^q, with both expressed in the canonical coordinates of Z^q.
  std::array<QuotientSpace, kDegrees> quotients;
};

inline ReducedResult reduced(const GradedSpace& h, const SpecialPair& sp) {
  ReducedResult r;
  r.z = z_subspaces(h, sp);
  r.b = b_subspaces(h, sp);
  for (int q = 0; q < kDegrees; ++q) {
    if (!r.z[q].contains(r.b[q]))
      throw Error(ErrorKind::InclusionViolation, "B is not contained in Z in degree " +
                                                     std::to_string(q));
    Subspace b_in_z = Subspace::span(r.z[q].coordinates(r.b[q].basis()));
    r.quotients[q] = quotient(r.z[q].dim(), b_in_z);
    r.hf_red.dims[q] = r.quotients[q].dim();
  }
  return r;
}

// Half the Euler characteristic difference, with `h` and `red` graded in
// `convention`. The result is exact; integrality is not enforced.
inline Rational froyshov_h(const GradedSpace& h, const GradedSpace& red, Convention convention) {
  long long diff = convention == Convention::cohomology ? euler(h) - euler(red)
                                                        : euler(red) - euler(h);
  return Rational(diff, 2);
}

inline Rational froyshov_h(const GradedSpace& h, const ReducedResult& red, Convention convention) {
  return froyshov_h(h, red.hf_red, convention);
}

struct PeriodicityReport {
  bool hf = false;
  bool reduced = false;
  bool both() const noexcept { return hf && reduced; }
};

inline bool is_four_periodic(const GradedSpace& s) {
  for (int q = 0; q < 4; ++q)
    if (s[q] != s[q + 4]) return false;
  return true;
}

inline PeriodicityReport check_periodicity(const GradedSpace& h, const ReducedResult& red) {
  return {is_four_periodic(h), is_four_periodic(red.hf_red)};
}

// Family index at which each tower's subspace reaches its final value, or -1
// for a tower with no members.
struct Stabilization {
  int z0 = -1;
  int z4 = -1;
  int b1 = -1;
  int b5 = -1;
};

inline Stabilization stabilization(const SpecialPair& sp) {
  Stabilization out;
  const GradedSpace& h = sp.space();
  auto z_tower = [&](int q) {
    int idx = -1;
    Matrix stacked(0, h[q]);
    std::size_t final_dim = h[q];
    std::vector<std::pair<int, std::size_t>> dims;
    for (std::size_t n = 0; n <= sp.n_max(); ++n) {
      if (delta_degree(static_cast<int>(n)) != q) continue;
      stacked = vstack(stacked, sp.delta(n));
      final_dim = h[q] - rank(stacked);
      dims.emplace_back(static_cast<int>(n), final_dim);
    }
    for (auto it = dims.rbegin(); it != dims.rend() && it->second == final_dim; ++it)
      idx = it->first;
    return idx;
  };
  auto b_tower = [&](int q) {
    int idx = -1;
    Matrix cols(h[q], 0);
    std::size_t final_dim = 0;
    std::vector<std::pair<int, std::size_t>> dims;
    for (std::size_t n = 0; n <= sp.n_max(); ++n) {
      if (delta_prime_degree(static_cast<int>(n)) != q) continue;
      cols = hstack(cols, sp.delta_prime(n));
      final_dim = rank(cols);
      dims.emplace_back(static_cast<int>(n), final_dim);
    }
    for (auto it = dims.rbegin(); it != dims.rend() && it->second == final_dim; ++it)
      idx = it->first;
    return idx;
  };
  out.z0 = z_tower(0);
  out.z4 = z_tower(4);
  out.b1 = b_tower(1);
  out.b5 = b_tower(5);
  return out;
}

}  // namespace hfsplit
