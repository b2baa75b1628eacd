#pragma once

// Seeded generator of structurally valid instances.
//
// The cobordism relations delta_n W = delta_n + sum a_in delta_i are affine in
// W, so coefficients are planted first and W is solved for. Members of a
// tower that are linearly dependent on earlier ones get their target forced
// by linearity, which keeps the system consistent; their planted
// coefficients are then one valid choice, not the only one.
//
// Chain-level complexes are built in split form CF^q = A_q + B_q + H_q with d
// mapping A_q identically onto B_{q+1}, then hidden behind a random
// unimodular change of basis per degree. Every complex over a field is
// isomorphic to one of this shape.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cobordism.hpp"
#include "error.hpp"
#include "froyshov.hpp"
#include "graded.hpp"
#include "instance.hpp"
#include "qlinalg.hpp"

namespace hfsplit {

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_dim = 6;
  std::size_t n_max = 4;
  // Relative weights of delta_side, delta_prime_side, both_zero.
  std::array<unsigned, 3> case_mix{1, 1, 1};
  bool periodic = false;     // homology level only
  bool chain_level = false;
  int entry_bound = 3;

  void validate() const {
    if (n_max < 1) throw Error(ErrorKind::Infeasible, "n_max must be at least 1");
    if (case_mix[0] + case_mix[1] + case_mix[2] == 0)
      throw Error(ErrorKind::Infeasible, "case weights are all zero");
    if (entry_bound < 1) throw Error(ErrorKind::Infeasible, "entry bound must be positive");
  }
};

struct Planted {
  SpecialCase kind = SpecialCase::both_zero;
  std::vector<Coefficient> a;
  std::vector<Coefficient> b;
  // Chain level: planted cohomology dimensions and, per degree, cocycles whose
  // classes form a basis of H^q.
  std::optional<GradedSpace> h_dims;
  std::array<Matrix, kDegrees> h_basis;
};

struct Generated {
  Instance instance;
  Planted planted;
};

// Small deterministic RNG front end; std distributions are not portable
// across standard libraries, so bounded draws are done by rejection here.
class GenRng {
 public:
  explicit GenRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return x % n;
  }

  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool one_in(std::uint64_t n) { return below(n) == 0; }

  Matrix matrix(std::size_t rows, std::size_t cols, int bound) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = range(-bound, bound);
    return m;
  }

  Matrix nonzero_matrix(std::size_t rows, std::size_t cols, int bound) {
    while (true) {
      Matrix m = matrix(rows, cols, bound);
      if (!m.is_zero() || rows * cols == 0) return m;
    }
  }

  SpecialCase pick_case(const std::array<unsigned, 3>& w) {
    std::uint64_t r = below(std::uint64_t{w[0]} + w[1] + w[2]);
    if (r < w[0]) return SpecialCase::delta_side;
    if (r < std::uint64_t{w[0]} + w[1]) return SpecialCase::delta_prime_side;
    return SpecialCase::both_zero;
  }

 private:
  std::mt19937_64 eng_;
};

namespace detail {

struct TowerSolution {
  Matrix w;
  std::vector<Coefficient> coefficients;
};

// Functionals `members[j]` (1 x dim) carry family indices `indices[j]`.
// Returns W with members[j] W = members[j] + sum_{i<j} a_ij members[i].
inline TowerSolution solve_tower(const std::vector<Matrix>& members,
                                 const std::vector<std::size_t>& indices, std::size_t dim,
                                 GenRng& rng, int bound) {
  const std::size_t m = members.size();
  std::vector<std::vector<Rational>> coef(m);  // coef[j][i], i < j
  std::vector<Matrix> targets(m);
  std::vector<std::size_t> basis;  // positions of independent members
  for (std::size_t j = 0; j < m; ++j) {
    coef[j].assign(j, Rational(0));
    Matrix basis_cols(dim, 0);
    for (auto b : basis) basis_cols = hstack(basis_cols, members[b].transpose());
    auto c = solve_particular(basis_cols, members[j].transpose());
    if (c) {
      targets[j] = Matrix(1, dim);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        const Rational& cb = (*c)(t, 0);
        if (cb == 0) continue;
        targets[j] = targets[j] + cb * targets[basis[t]];
        for (std::size_t i = 0; i < basis[t]; ++i) coef[j][i] += cb * coef[basis[t]][i];
      }
    } else {
      targets[j] = members[j];
      for (std::size_t i = 0; i < j; ++i) {
        if (rng.one_in(3)) continue;
        coef[j][i] = rng.range(-bound, bound);
        targets[j] = targets[j] + coef[j][i] * members[i];
      }
      basis.push_back(j);
    }
  }
  Matrix lhs(0, dim), rhs(0, dim);
  for (auto b : basis) {
    lhs = vstack(lhs, members[b]);
    rhs = vstack(rhs, targets[b]);
  }
  auto particular = solve_particular(lhs, rhs);
  if (!particular) throw Error(ErrorKind::Infeasible, "cobordism constraint system unsolvable");
  Subspace null = kernel_basis(lhs);
  Matrix w = *particular + null.basis() * rng.matrix(null.dim(), dim, 2);

  TowerSolution out{std::move(w), {}};
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i)
      out.coefficients.push_back({indices[i], indices[j], coef[j][i]});
  return out;
}

// Draws functional members for one tower. The first member of the whole
// family (n = 0) is forced nonzero.
inline std::vector<Matrix> draw_tower(const std::vector<std::size_t>& indices, std::size_t dim,
                                      GenRng& rng, int bound) {
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] == 0) {
      out.push_back(rng.nonzero_matrix(1, dim, bound));
      continue;
    }
    std::uint64_t r = rng.below(8);
    if (r == 0) {
      out.emplace_back(1, dim);
    } else if (r <= 2 && !out.empty()) {
      Matrix combo(1, dim);
      for (const auto& prev : out) combo = combo + Rational(rng.range(-2, 2)) * prev;
      out.push_back(std::move(combo));
    } else {
      out.push_back(rng.matrix(1, dim, bound));
    }
  }
  return out;
}

inline std::vector<std::size_t> tower_indices(std::size_t parity, std::size_t n_max) {
  std::vector<std::size_t> idx;
  for (std::size_t n = parity; n <= n_max; n += 2) idx.push_back(n);
  return idx;
}

// Degree of the tower with the given parity on the active side.
inline int tower_degree(SpecialCase side, std::size_t parity) {
  int n = static_cast<int>(parity);
  return side == SpecialCase::delta_side ? delta_degree(n) : delta_prime_degree(n);
}

// Solves both towers of the active family for W. `families[par]` holds the
// members as row functionals (delta_n, or delta'_n transposed).
inline void solve_active_side(SpecialCase side, const std::array<std::vector<Matrix>, 2>& families,
                              const std::array<std::vector<std::size_t>, 2>& indices,
                              const GradedSpace& h, bool periodic, GenRng& rng, int bound,
                              std::array<Matrix, kDegrees>& w_blocks,
                              std::vector<Coefficient>& coefficients) {
  for (std::size_t par = 0; par < 2; ++par) {
    int q = tower_degree(side, par);
    if (periodic && par == 1) {
      // odd tower mirrors the even one
      int q_even = tower_degree(side, 0);
      w_blocks[q] = w_blocks[q_even];
      std::vector<Coefficient> shifted;
      for (const auto& c : coefficients)
        if (c.n % 2 == 0) shifted.push_back({c.i + 1, c.n + 1, c.value});
      coefficients.insert(coefficients.end(), shifted.begin(), shifted.end());
      continue;
    }
    TowerSolution sol = solve_tower(families[par], indices[par], h[q], rng, bound);
    Matrix wq = side == SpecialCase::delta_side ? sol.w : sol.w.transpose();
    w_blocks[q] = std::move(wq);
    coefficients.insert(coefficients.end(), sol.coefficients.begin(), sol.coefficients.end());
  }
}

inline nlohmann::json config_metadata(const GenConfig& cfg) {
  return {{"seed", cfg.seed},
          {"max_dim", cfg.max_dim},
          {"n_max", cfg.n_max},
          {"case_mix", cfg.case_mix},
          {"periodic", cfg.periodic},
          {"chain_level", cfg.chain_level},
          {"entry_bound", cfg.entry_bound}};
}

inline Generated gen_instance_once(const GenConfig& cfg, GenRng& rng) {
  const int bound = cfg.entry_bound;
  SpecialCase side = rng.pick_case(cfg.case_mix);
  if (cfg.max_dim == 0) side = SpecialCase::both_zero;
  std::size_t n_max = cfg.n_max;
  if (cfg.periodic && n_max % 2 == 0) ++n_max;

  GradedSpace h;
  for (int q = 0; q < kDegrees; ++q) {
    if (cfg.periodic && q >= 4) {
      h.dims[q] = h.dims[q - 4];
      continue;
    }
    h.dims[q] = rng.below(cfg.max_dim + 1);
  }
  if (side != SpecialCase::both_zero) {
    int anchor = side == SpecialCase::delta_side ? 4 : 1;
    if (h[anchor] == 0) {
      std::size_t d = 1 + rng.below(cfg.max_dim);
      h.dims[anchor] = d;
      if (cfg.periodic) h.dims[mod8(anchor + 4)] = d;
    }
  }

  std::array<std::vector<std::size_t>, 2> indices{tower_indices(0, n_max), tower_indices(1, n_max)};
  std::array<std::vector<Matrix>, 2> families;
  std::vector<Matrix> deltas(n_max + 1), primes(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    deltas[n] = Matrix(1, h[delta_degree(static_cast<int>(n))]);
    primes[n] = Matrix(h[delta_prime_degree(static_cast<int>(n))], 1);
  }
  if (side != SpecialCase::both_zero) {
    for (std::size_t par = 0; par < 2; ++par) {
      if (cfg.periodic && par == 1) {
        families[1] = families[0];
        families[1].resize(indices[1].size());
        continue;
      }
      families[par] = draw_tower(indices[par], h[tower_degree(side, par)], rng, bound);
    }
    for (std::size_t par = 0; par < 2; ++par)
      for (std::size_t j = 0; j < indices[par].size(); ++j) {
        std::size_t n = indices[par][j];
        if (side == SpecialCase::delta_side)
          deltas[n] = families[par][j];
        else
          primes[n] = families[par][j].transpose();
      }
  }

  std::array<Matrix, kDegrees> w_blocks;
  for (int q = 0; q < kDegrees; ++q) {
    if (cfg.periodic && q >= 4) {
      w_blocks[q] = w_blocks[q - 4];
      continue;
    }
    w_blocks[q] = rng.matrix(h[q], h[q], bound);
  }
  Planted planted;
  planted.kind = side;
  if (side != SpecialCase::both_zero) {
    std::vector<Coefficient>& coeffs = side == SpecialCase::delta_side ? planted.a : planted.b;
    solve_active_side(side, families, indices, h, cfg.periodic, rng, bound, w_blocks, coeffs);
  }

  Instance inst = make_instance(h, SpecialPair(h, std::move(deltas), std::move(primes)),
                                GradedMap(h, h, 0, std::move(w_blocks)));
  inst.name = "gen-" + std::to_string(cfg.seed);
  inst.metadata["generator"] = config_metadata(cfg);
  return {std::move(inst), std::move(planted)};
}

// Split-form layout of one degree: A, then B, then H.
struct SplitDims {
  std::array<std::size_t, kDegrees> a{}, h{};
  std::size_t b(int q) const { return a[static_cast<std::size_t>(mod8(q - 1))]; }
  std::size_t total(int q) const { return a[mod8(q)] + b(q) + h[mod8(q)]; }
  std::size_t off_b(int q) const { return a[mod8(q)]; }
  std::size_t off_h(int q) const { return a[mod8(q)] + b(q); }
  GradedSpace space() const {
    GradedSpace s;
    for (int q = 0; q < kDegrees; ++q) s.dims[q] = total(q);
    return s;
  }
};

inline void place(Matrix& dst, std::size_t r0, std::size_t c0, const Matrix& src) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) dst(r0 + i, c0 + j) = src(i, j);
}

// Chain map of the given shift in split form: H blocks as given, A_q -> A_{q+s}
// by `acyclic[q]`, B_{q+1} -> B_{q+s+1} by the same matrix, plus d K + K d.
inline GradedMap split_chain_map(const SplitDims& sd, const GradedMap& d, int shift,
                                 const std::array<Matrix, kDegrees>& h_blocks, GenRng& rng) {
  GradedSpace s = sd.space();
  std::array<Matrix, kDegrees> blocks;
  for (int q = 0; q < kDegrees; ++q) {
    int t = mod8(q + shift);
    Matrix m(s[t], s[q]);
    place(m, sd.off_h(t), sd.off_h(q), h_blocks[q]);
    blocks[q] = std::move(m);
  }
  for (int q = 0; q < kDegrees; ++q) {
    int t = mod8(q + shift);
    Matrix acyc = rng.matrix(sd.a[t], sd.a[q], 2);
    place(blocks[q], 0, 0, acyc);
    place(blocks[mod8(q + 1)], sd.off_b(t + 1), sd.off_b(q + 1), acyc);
  }
  // null-homotopic correction, sparse small entries
  std::array<Matrix, kDegrees> k;
  for (int q = 0; q < kDegrees; ++q) {
    Matrix kq(s[q + shift - 1], s[q]);
    for (std::size_t i = 0; i < kq.rows(); ++i)
      for (std::size_t j = 0; j < kq.cols(); ++j)
        if (rng.one_in(3)) kq(i, j) = rng.range(-1, 1);
    k[q] = std::move(kq);
  }
  GradedMap kmap(s, s, shift - 1, std::move(k));
  GradedMap base(s, s, shift, std::move(blocks));
  return base + compose(d, kmap) + compose(kmap, d);
}

inline Matrix unimodular(std::size_t n, GenRng& rng) {
  Matrix g = Matrix::identity(n);
  if (n < 2) return n == 1 && rng.one_in(2) ? Matrix::scalar(1, -1) : g;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    std::size_t i = rng.below(n), j = rng.below(n);
    if (i == j) continue;
    Rational c = rng.range(-1, 1);
    for (std::size_t col = 0; col < n; ++col) g(i, col) += c * g(j, col);
  }
  return g;
}

inline Generated gen_chain_instance_once(const GenConfig& cfg, GenRng& rng) {
  const int bound = cfg.entry_bound;
  SpecialCase side = rng.pick_case(cfg.case_mix);
  const std::size_t a_max = cfg.max_dim / 4;
  const std::size_t h_max = cfg.max_dim - 2 * a_max;
  if (h_max == 0) side = SpecialCase::both_zero;

  SplitDims sd;
  for (int q = 0; q < kDegrees; ++q) {
    sd.a[q] = rng.below(a_max + 1);
    sd.h[q] = rng.below(h_max + 1);
  }
  if (side == SpecialCase::delta_side && sd.h[4] == 0) sd.h[4] = 1 + rng.below(h_max);
  if (side == SpecialCase::delta_prime_side && sd.h[1] == 0) sd.h[1] = 1 + rng.below(h_max);
  GradedSpace s = sd.space();
  GradedSpace h_dims;
  for (int q = 0; q < kDegrees; ++q) h_dims.dims[q] = sd.h[q];

  std::array<Matrix, kDegrees> d_blocks;
  for (int q = 0; q < kDegrees; ++q) {
    Matrix m(s[q + 1], s[q]);
    for (std::size_t i = 0; i < sd.a[q]; ++i) m(sd.off_b(q + 1) + i, i) = 1;
    d_blocks[q] = std::move(m);
  }
  GradedMap d(s, s, 1, std::move(d_blocks));

  std::array<Matrix, kDegrees> v_h;
  for (int q = 0; q < kDegrees; ++q) v_h[q] = rng.matrix(sd.h[mod8(q + 4)], sd.h[q], 2);
  GradedMap v = split_chain_map(sd, d, 4, v_h, rng);

  Matrix delta(1, s[4]);
  Matrix delta_prime(s[1], 1);
  if (side == SpecialCase::delta_side) {
    place(delta, 0, 0, rng.matrix(1, sd.a[4], bound));
    place(delta, 0, sd.off_h(4), rng.nonzero_matrix(1, sd.h[4], bound));
  } else if (side == SpecialCase::delta_prime_side) {
    place(delta_prime, sd.off_b(1), 0, rng.matrix(sd.b(1), 1, bound));
    place(delta_prime, sd.off_h(1), 0, rng.nonzero_matrix(sd.h[1], 1, bound));
  }

  // Families in planted H coordinates, extended by the same stabilization
  // rule induce_special uses.
  auto h_cols = [&](const Matrix& row, int q) {
    Matrix r(1, sd.h[q]);
    for (std::size_t j = 0; j < sd.h[q]; ++j) r(0, j) = row(0, sd.off_h(q) + j);
    return r;
  };
  auto h_rows = [&](const Matrix& col, int q) {
    Matrix c(sd.h[q], 1);
    for (std::size_t i = 0; i < sd.h[q]; ++i) c(i, 0) = col(sd.off_h(q) + i, 0);
    return c;
  };
  std::array<std::vector<Matrix>, 2> d_fam, p_fam;  // row functionals per parity
  std::array<std::vector<std::size_t>, 2> idx;
  std::array<bool, 4> settled{};
  Matrix chain_delta = delta, chain_prime = delta_prime;
  const std::size_t hard_cap = 4 * (s.total() + 2) + cfg.n_max;
  for (std::size_t n = 0;; ++n) {
    int dq = delta_degree(static_cast<int>(n));
    if (n > 0) {
      chain_delta = chain_delta * v.block(dq);
      chain_prime = v.block(delta_prime_degree(static_cast<int>(n - 1))) * chain_prime;
    }
    std::size_t par = n % 2;
    Matrix dn = h_cols(chain_delta, dq);
    Matrix pn = h_rows(chain_prime, delta_prime_degree(static_cast<int>(n))).transpose();
    if (!settled[par]) settled[par] = in_span_of_rows(d_fam[par], dn);
    if (!settled[2 + par]) settled[2 + par] = in_span_of_rows(p_fam[par], pn);
    d_fam[par].push_back(std::move(dn));
    p_fam[par].push_back(std::move(pn));
    idx[par].push_back(n);
    if (n >= cfg.n_max && settled[0] && settled[1] && settled[2] && settled[3]) break;
    if (n >= hard_cap) throw Error(ErrorKind::Infeasible, "planted families did not stabilize");
  }

  std::array<Matrix, kDegrees> w_h;
  for (int q = 0; q < kDegrees; ++q) w_h[q] = rng.matrix(sd.h[q], sd.h[q], bound);
  Planted planted;
  planted.kind = side;
  planted.h_dims = h_dims;
  if (side == SpecialCase::delta_side)
    solve_active_side(side, d_fam, idx, h_dims, false, rng, bound, w_h, planted.a);
  else if (side == SpecialCase::delta_prime_side)
    solve_active_side(side, p_fam, idx, h_dims, false, rng, bound, w_h, planted.b);
  GradedMap w = split_chain_map(sd, d, 0, w_h, rng);

  // Hide the split form.
  std::array<Matrix, kDegrees> g, g_inv;
  for (int q = 0; q < kDegrees; ++q) {
    g[q] = unimodular(s[q], rng);
    g_inv[q] = *inverse(g[q]);
  }
  auto conj = [&](const GradedMap& f) {
    std::array<Matrix, kDegrees> b;
    for (int q = 0; q < kDegrees; ++q) b[q] = g[mod8(q + f.shift())] * f.block(q) * g_inv[q];
    return GradedMap(s, s, f.shift(), std::move(b));
  };
  for (int q = 0; q < kDegrees; ++q) {
    Matrix basis(s[q], sd.h[q]);
    for (std::size_t j = 0; j < sd.h[q]; ++j) basis(sd.off_h(q) + j, j) = 1;
    planted.h_basis[q] = g[q] * basis;
  }

  ChainLevelData chain{CochainComplex(conj(d)),
                       ChainSpecial{delta * g_inv[4], g[1] * delta_prime, conj(v)}, conj(w),
                       cfg.n_max};
  Instance inst = make_chain_instance(std::move(chain));
  inst.name = "gen-chain-" + std::to_string(cfg.seed);
  inst.metadata["generator"] = config_metadata(cfg);
  inst.metadata["planted_h_dims"] = h_dims.dims;
  return {std::move(inst), std::move(planted)};
}

template <typename Once>
Generated generate_with_retries(const GenConfig& cfg, Once once) {
  cfg.validate();
  GenRng rng(cfg.seed);
  constexpr int kRetries = 16;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    try {
      Generated g = once(cfg, rng);
      analyze(g.instance);  // generation is always followed by validation
      return g;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Infeasible && e.kind() != ErrorKind::NoSolution) throw;
    }
  }
  throw Error(ErrorKind::Infeasible, "no valid instance after retries, seed " +
                                         std::to_string(cfg.seed));
}

}  // namespace detail

inline Generated gen_instance(const GenConfig& cfg) {
  if (cfg.chain_level)
    return detail::generate_with_retries(cfg, detail::gen_chain_instance_once);
  return detail::generate_with_retries(cfg, detail::gen_instance_once);
}

inline Generated gen_chain_instance(GenConfig cfg) {
  cfg.chain_level = true;
  return gen_instance(cfg);
}

// Same spaces and special pair, W replaced by the identity (also at chain
// level).
inline Instance product_cobordism(Instance inst) {
  inst.cobordism = {GradedMap::identity(inst.hf), "product"};
  if (inst.chain) inst.chain->w = GradedMap::identity(inst.chain->complex.space());
  inst.name = inst.name.empty() ? "product" : inst.name + "-product";
  return inst;
}

// A fresh valid W for the same cohomology-level data, with newly planted
// coefficients. Chain data, if any, is dropped.
inline Generated resample_cobordism(const Instance& base, std::uint64_t seed, int bound = 3) {
  GenRng rng(seed);
  Instance inst = at_cohomology_level(base);
  const GradedSpace& h = inst.hf;
  std::array<Matrix, kDegrees> w_blocks;
  for (int q = 0; q < kDegrees; ++q) w_blocks[q] = rng.matrix(h[q], h[q], bound);
  Planted planted;
  planted.kind = inst.kind();
  std::array<std::vector<Matrix>, 2> d_fam, p_fam;
  std::array<std::vector<std::size_t>, 2> idx;
  for (std::size_t n = 0; n <= inst.special.n_max(); ++n) {
    d_fam[n % 2].push_back(inst.special.delta(n));
    p_fam[n % 2].push_back(inst.special.delta_prime(n).transpose());
    idx[n % 2].push_back(n);
  }
  if (inst.kind() == SpecialCase::delta_side)
    detail::solve_active_side(SpecialCase::delta_side, d_fam, idx, h, false, rng, bound, w_blocks,
                              planted.a);
  else if (inst.kind() == SpecialCase::delta_prime_side)
    detail::solve_active_side(SpecialCase::delta_prime_side, p_fam, idx, h, false, rng, bound,
                              w_blocks, planted.b);
  inst.cobordism = {GradedMap(h, h, 0, std::move(w_blocks)), "W-" + std::to_string(seed)};
  analyze(inst);
  return {std::move(inst), std::move(planted)};
}

}  // namespace hfsplit
