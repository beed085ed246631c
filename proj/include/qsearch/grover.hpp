// grover.hpp
// Generalized Grover search with an arbitrary preparation unitary U:
// selective inversions, Q = -I_i U^-1 I_f U, traced iteration and the
// ray-return (slippage) detector.

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsearch/corevec.hpp"
#include "qsearch/geometry.hpp"

namespace qsearch {

// Problem instance: find basis state `target` given preparation U and
// initial state psi_i. psi_f' = U^-1 |target> is the state iteration chases.
class SearchSpec {
 public:
  SearchSpec(int n_qubits, std::size_t target, UnitaryOp prep, StateVector initial, double p = 1.0)
      : n_qubits_(n_qubits),
        target_(target),
        prep_(std::move(prep)),
        initial_(std::move(initial)),
        p_(p),
        target_state_(StateVector::basis(n_qubits, target)),
        pulled_back_(apply(prep_.adjoint(), target_state_)) {
    detail::require_exponent(p);
    if (initial_.n_qubits() != n_qubits) throw InvalidArgument("initial state has the wrong number of qubits");
    if (auto d = prep_.dim(); d && *d != initial_.dim()) throw InvalidArgument("prep unitary has the wrong dimension");
    overlap_c_ = inner_product(initial_, pulled_back_);
  }

  // Exhaustive search: U = Walsh-Hadamard, psi_i = |0>.
  static SearchSpec exhaustive(int n_qubits, std::size_t target, double p = 1.0) {
    return SearchSpec(n_qubits, target, UnitaryOp::walsh_hadamard(n_qubits), StateVector::basis(n_qubits, 0), p);
  }

  // Generic search: U Haar-random with the given seed, psi_i = |0>.
  static SearchSpec haar(int n_qubits, std::size_t target, std::uint64_t seed, double p = 1.0) {
    return SearchSpec(n_qubits, target, haar_random_unitary(std::size_t{1} << n_qubits, seed),
                      StateVector::basis(n_qubits, 0), p);
  }

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  std::size_t target() const { return target_; }
  const UnitaryOp& prep() const { return prep_; }
  const StateVector& initial() const { return initial_; }
  double p() const { return p_; }
  const StateVector& target_state() const { return target_state_; }
  const StateVector& pulled_back_target() const { return pulled_back_; }
  // <psi_i|psi_f'> = conj(<target|U|psi_i>)
  Complex overlap_c() const { return overlap_c_; }
  // |U_if|
  OverlapMagnitude coupling() const { return OverlapMagnitude(std::min(1.0, std::abs(overlap_c_))); }

  SearchSpec with_p(double p) const { return SearchSpec(n_qubits_, target_, prep_, initial_, p); }

 private:
  int n_qubits_;
  std::size_t target_;
  UnitaryOp prep_;
  StateVector initial_;
  double p_;
  StateVector target_state_;
  StateVector pulled_back_;
  Complex overlap_c_;
};

struct IterationRecord {
  int step;
  double overlap_with_target;   // |<psi_f'|psi^(s)>|
  double success_prob;          // overlap_with_target^2
  double overlap_with_initial;  // |<psi_i|psi^(s)>|
  double fs_from_initial;
  double bargmann_from_initial;
  double elapsed_seconds;
};

struct IterationTrace {
  std::vector<IterationRecord> records;
  bool reached_threshold = false;
  std::optional<int> first_passage;

  // Last recorded state; the ray-return detector only needs the records.
  std::optional<StateVector> final_state;

  // Highest success probability among steps 0..upto (inclusive).
  double best_success(int upto) const {
    double best = 0.0;
    for (const auto& r : records)
      if (r.step <= upto) best = std::max(best, r.success_prob);
    return best;
  }

  // First step whose success probability is not exceeded by the next one.
  std::optional<int> first_local_maximum() const {
    for (std::size_t k = 0; k + 1 < records.size(); ++k)
      if (records[k + 1].success_prob < records[k].success_prob) return records[k].step;
    return std::nullopt;
  }
};

// |<psi_f'|state>|^2
inline double success_probability(const StateVector& state, const SearchSpec& spec) {
  return std::norm(inner_product(spec.pulled_back_target(), state));
}

namespace detail {

inline IterationRecord make_record(int step, const StateVector& psi, const StateVector& psi_i,
                                   const StateVector& psi_f_prime, double elapsed) {
  const double ov_t = std::min(1.0, std::abs(inner_product(psi_f_prime, psi)));
  const double ov_i = std::min(1.0, std::abs(inner_product(psi_i, psi)));
  return IterationRecord{step,
                         ov_t,
                         ov_t * ov_t,
                         ov_i,
                         2.0 * std::sqrt(std::max(0.0, 1.0 - ov_i * ov_i)),
                         2.0 * std::acos(ov_i),
                         elapsed};
}

// Applies `op` repeatedly to psi_i, stopping at the first success probability
// >= threshold or after max_steps applications. Step 0 is always recorded.
inline IterationTrace iterate(const UnitaryOp& op, const StateVector& psi_i, const StateVector& psi_f_prime,
                              int max_steps, double threshold) {
  if (max_steps < 1) throw InvalidArgument("max_steps must be >= 1");
  if (!(threshold > 0.0)) throw InvalidArgument("stop_threshold must be positive");
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  IterationTrace trace;
  trace.records.reserve(static_cast<std::size_t>(max_steps) + 1);
  StateVector psi = psi_i;
  trace.records.push_back(make_record(0, psi, psi_i, psi_f_prime, 0.0));
  if (trace.records.back().success_prob >= threshold) {
    trace.reached_threshold = true;
    trace.first_passage = 0;
  }
  for (int s = 1; s <= max_steps && !trace.reached_threshold; ++s) {
    psi = apply(op, psi);
    trace.records.push_back(make_record(s, psi, psi_i, psi_f_prime, elapsed()));
    if (trace.records.back().success_prob >= threshold) {
      trace.reached_threshold = true;
      trace.first_passage = s;
    }
  }
  trace.final_state = std::move(psi);
  return trace;
}

}  // namespace detail

// Q = -I_i U^-1 I_f U, kept as the literal five-factor product.
inline UnitaryOp grover_operator(const SearchSpec& spec) {
  return UnitaryOp::composition({
      UnitaryOp::scalar(Complex(-1.0, 0.0)),
      UnitaryOp::selective_inversion(spec.initial()),
      spec.prep().adjoint(),
      UnitaryOp::selective_inversion(spec.target_state()),
      spec.prep(),
  });
}

inline constexpr double kNoCouplingTolerance = 1e-14;

inline IterationTrace run_grover(const SearchSpec& spec, int max_steps, double stop_threshold = 0.5) {
  if (!(stop_threshold > 0.0)) throw InvalidArgument("stop_threshold must be positive");
  if (spec.coupling().value() <= kNoCouplingTolerance) {
    throw DegenerateProblem("|U_if| = 0: Q leaves the ray of psi_i fixed, target unreachable");
  }
  return detail::iterate(grover_operator(spec), spec.initial(), spec.pulled_back_target(), max_steps, stop_threshold);
}

inline constexpr double kDefaultSlippageTolerance = 1e-9;

// Smallest step s >= 1 at which the state is back on the initial ray.
inline std::optional<int> detect_slippage(const IterationTrace& trace, double tol = kDefaultSlippageTolerance) {
  if (trace.records.empty()) throw InvalidArgument("empty trace");
  if (!(tol > 0.0 && tol <= 1e-6)) throw InvalidArgument("slippage tolerance must lie in (0, 1e-6]");
  for (const auto& r : trace.records) {
    if (r.step >= 1 && r.overlap_with_initial >= 1.0 - tol) return r.step;
  }
  return std::nullopt;
}

}  // namespace qsearch
