#pragma once

// Step-by-step replay of the trace inductions behind h(X) = h(Y).
//
// delta side (delta'_0 = 0), towers in degrees 0 (odd k) and 4 (even k):
//     Z(k) = Z(k-2) ∩ ker delta_k,   Z(first-2) = H^q,
//     Tr(W|Z(k-2)) - Tr(W|Z(k)) = 1 iff delta_k is nonzero on Z(k-2), else 0,
//     Tr(W_q) = dim(H^q / Z) + Tr(W^_q).
// delta' side (delta_0 = 0), towers in degrees 1 (even k) and 5 (odd k):
//     B(k) = B(k-2) + span delta'_k(1),   B(first-2) = 0,
//     Tr(W on H/B(k-2)) - Tr(W on H/B(k)) = 1 iff delta'_k(1) is not in B(k-2),
//     Tr(W on H/B(first)) = dim(B / B(first)) + Tr(W^_q)
//                         = Tr(W_q) - dim B(first),
//     Tr(W_q) - Tr(W^_q) = dim B.
// "Active" is judged on Z(k-2) (resp. modulo B(k-2)), not on all of H^q.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobordism.hpp"
#include "error.hpp"
#include "froyshov.hpp"
#include "qlinalg.hpp"

namespace hfsplit {

struct TowerStep {
  std::size_t k = 0;
  std::size_t dim = 0;  // dim Z(k), or dim B(k)
  Rational trace;       // Tr(W|Z(k)), or Tr(W on H/B(k))
  bool active = false;
  Rational step;        // previous trace minus this trace
};

struct TowerLog {
  int degree = 0;
  bool quotient_tower = false;  // false: Z-tower (delta side); true: B-tower (delta' side)
  std::size_t ambient_dim = 0;
  Rational full_trace;     // Tr(W_q) on H^q
  Rational reduced_trace;  // Tr(W^_q)
  std::vector<TowerStep> steps;
  std::size_t final_dim = 0;  // dim Z, or dim B
  std::vector<std::string> identities;

  Rational step_sum() const {
    Rational s = 0;
    for (const auto& st : steps) s += st.step;
    return s;
  }
};

namespace detail {

[[noreturn]] inline void step_mismatch(int degree, std::size_t k, const std::string& what) {
  throw Error(ErrorKind::StepMismatch,
              "degree " + std::to_string(degree) + ", k = " + std::to_string(k) + ": " + what);
}

inline void check_step(const TowerStep& st, int degree) {
  if (st.step != 0 && st.step != 1)
    step_mismatch(degree, st.k, "trace step " + to_string(st.step) + " is not 0 or 1");
  if ((st.step == 1) != st.active)
    step_mismatch(degree, st.k,
                  std::string("trace step ") + to_string(st.step) + " but member is " +
                      (st.active ? "active" : "inactive"));
}

inline TowerLog z_tower(const Instance& inst, const Analysis& a, int q) {
  TowerLog log;
  log.degree = q;
  log.ambient_dim = inst.hf[q];
  const Matrix& wq = inst.cobordism.w.block(q);
  log.full_trace = trace(wq);
  log.reduced_trace = trace(a.w_hat.block(q));
  Subspace z = Subspace::full(inst.hf[q]);
  Rational prev = log.full_trace;
  for (std::size_t k = (q == 4 ? 0 : 1); k <= inst.special.n_max(); k += 2) {
    const Matrix& dk = inst.special.delta(k);
    TowerStep st;
    st.k = k;
    st.active = !(dk * z.basis()).is_zero();
    z = intersect(z, kernel_basis(dk));
    st.dim = z.dim();
    try {
      st.trace = trace(restrict(wq, z));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvarianceViolation) throw;
      step_mismatch(q, k, "Z(k) is not W-invariant");
    }
    st.step = prev - st.trace;
    prev = st.trace;
    check_step(st, q);
    log.steps.push_back(st);
  }
  log.final_dim = z.dim();
  if (!(z == a.reduced.z[q])) step_mismatch(q, inst.special.n_max(), "tower does not end at Z");
  Rational codim(inst.hf[q] - z.dim());
  if (log.full_trace != codim + log.reduced_trace)
    step_mismatch(q, inst.special.n_max(), "Tr(W) != dim(H/Z) + Tr(W^)");
  log.identities.push_back("Tr(W) = " + to_string(log.full_trace) + " = dim(H/Z) + Tr(W^) = " +
                           to_string(codim) + " + " + to_string(log.reduced_trace));
  return log;
}

inline TowerLog b_tower(const Instance& inst, const Analysis& a, int q) {
  TowerLog log;
  log.degree = q;
  log.quotient_tower = true;
  log.ambient_dim = inst.hf[q];
  const Matrix& wq = inst.cobordism.w.block(q);
  log.full_trace = trace(wq);
  log.reduced_trace = trace(a.w_hat.block(q));
  Subspace b = Subspace::zero(inst.hf[q]);
  Rational prev = log.full_trace;
  std::optional<std::pair<std::size_t, Rational>> first;  // dim B(first), Tr(W on H/B(first))
  for (std::size_t k = (q == 1 ? 0 : 1); k <= inst.special.n_max(); k += 2) {
    const Matrix& pk = inst.special.delta_prime(k);
    TowerStep st;
    st.k = k;
    st.active = !b.contains(pk);
    b = sum(b, Subspace::span(pk));
    st.dim = b.dim();
    try {
      st.trace = trace(induced_on_quotient(wq, quotient(inst.hf[q], b)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvarianceViolation) throw;
      step_mismatch(q, k, "B(k) is not W-invariant");
    }
    st.step = prev - st.trace;
    prev = st.trace;
    check_step(st, q);
    if (!first) first.emplace(st.dim, st.trace);
    log.steps.push_back(st);
  }
  log.final_dim = b.dim();
  const std::size_t last_k = inst.special.n_max();
  if (!(b == a.reduced.b[q])) step_mismatch(q, last_k, "tower does not end at B");
  Rational dim_b(b.dim());
  if (first) {
    Rational first_dim(first->first);
    Rational rel_dim = dim_b - first_dim;
    if (first->second != rel_dim + log.reduced_trace)
      step_mismatch(q, last_k, "Tr(W on H/B_first) != dim(B/B_first) + Tr(W^)");
    if (first->second != log.full_trace - first_dim)
      step_mismatch(q, last_k, "Tr(W on H/B_first) != Tr(W) - dim B_first");
    log.identities.push_back("Tr(W on H/B_first) = " + to_string(first->second) +
                             " = dim(B/B_first) + Tr(W^) = " + to_string(rel_dim) + " + " +
                             to_string(log.reduced_trace));
    log.identities.push_back("Tr(W on H/B_first) = Tr(W) - dim B_first = " +
                             to_string(log.full_trace) + " - " + to_string(first_dim));
  }
  if (log.full_trace - log.reduced_trace != dim_b)
    step_mismatch(q, last_k, "Tr(W) - Tr(W^) != dim B");
  log.identities.push_back("Tr(W) - Tr(W^) = " + to_string(log.full_trace) + " - " +
                           to_string(log.reduced_trace) + " = dim B = " + to_string(dim_b));
  return log;
}

// Reduced data only: the tracer must also see (and reject) instances whose
// relations were never validated.
inline Analysis tracer_analysis(const Instance& inst) {
  Analysis a;
  a.reduced = reduced(inst.hf, inst.special);
  try {
    a.w_hat = reduced_induced(inst.cobordism, a.reduced);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvarianceViolation) throw;
    throw Error(ErrorKind::StepMismatch, std::string("W^ undefined: ") + e.what());
  }
  return a;
}

}  // namespace detail

// Z-towers in degrees 0 and 4.
inline std::array<TowerLog, 2> trace_case1(const Instance& inst) {
  if (inst.kind() == SpecialCase::delta_prime_side)
    throw Error(ErrorKind::CaseMismatch, "Z-tower replay needs delta'_0 = 0");
  Analysis a = detail::tracer_analysis(inst);
  return {detail::z_tower(inst, a, 0), detail::z_tower(inst, a, 4)};
}

// B-towers in degrees 1 and 5.
inline std::array<TowerLog, 2> trace_case2(const Instance& inst) {
  if (inst.kind() == SpecialCase::delta_side)
    throw Error(ErrorKind::CaseMismatch, "B-tower replay needs delta_0 = 0");
  Analysis a = detail::tracer_analysis(inst);
  return {detail::b_tower(inst, a, 1), detail::b_tower(inst, a, 5)};
}

// The towers matching the instance's case (both families for both_zero).
inline std::vector<TowerLog> trace_towers(const Instance& inst) {
  std::vector<TowerLog> out;
  if (inst.kind() != SpecialCase::delta_prime_side)
    for (auto& t : trace_case1(inst)) out.push_back(std::move(t));
  if (inst.kind() != SpecialCase::delta_side)
    for (auto& t : trace_case2(inst)) out.push_back(std::move(t));
  return out;
}

}  // namespace hfsplit
