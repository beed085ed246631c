// vrotor.hpp
// Single-operator search: V = exp[-i (alpha/2)(|psi_f'><psi_i| + |psi_i><psi_f'|)]
// with alpha = 2 asin(|U_if|^p), built exactly on the two-dimensional frame
// and iterated unchanged.

#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "qsearch/corevec.hpp"
#include "qsearch/geometry.hpp"
#include "qsearch/grover.hpp"

namespace qsearch {

struct RotorOperator {
  SubspaceFrame frame;
  double coupling;  // |U_if| used for alpha (may be a nominal value)
  double p;
  double alpha;  // 2 asin(coupling^p), in (0, pi]
  UnitaryOp embedded;
};

// Restriction of |psi_f'><psi_i| + h.c. to (e0, e1): [[2 Re c, s], [s, 0]].
inline Eigen::Matrix2cd rotor_generator(const SubspaceFrame& frame) {
  const double s = frame.orthogonal_weight();
  Eigen::Matrix2cd g;
  g << Complex(2.0 * frame.overlap_c.real(), 0.0), Complex(s, 0.0), Complex(s, 0.0), Complex(0.0, 0.0);
  return g;
}

// Rotor for an explicit (psi_i, psi_f') pair and a supplied |U_if|. Lets the
// orthogonal case be engineered with a nominal coupling.
inline RotorOperator build_rotor(const StateVector& psi_i, const StateVector& psi_f_prime, double coupling, double p) {
  detail::require_exponent(p);
  if (!(coupling > kNoCouplingTolerance)) {
    throw DegenerateProblem("|U_if| = 0: rotation angle vanishes, target never reached");
  }
  if (coupling > 1.0) throw InvalidArgument("coupling must not exceed 1");
  SubspaceFrame frame = make_frame(psi_i, psi_f_prime);
  const double alpha = 2.0 * std::asin(std::pow(coupling, p));
  UnitaryOp embedded = two_plane_rotation(frame, rotor_generator(frame), alpha);
  return RotorOperator{std::move(frame), coupling, p, alpha, std::move(embedded)};
}

inline RotorOperator build_rotor(const SearchSpec& spec) {
  return build_rotor(spec.initial(), spec.pulled_back_target(), spec.coupling().value(), spec.p());
}

inline IterationTrace run_vsearch(const RotorOperator& rotor, const StateVector& psi_f_prime, int max_steps,
                                  double stop_threshold = 0.5) {
  return detail::iterate(rotor.embedded, rotor.frame.e0, psi_f_prime, max_steps, stop_threshold);
}

inline IterationTrace run_vsearch(const SearchSpec& spec, int max_steps, double stop_threshold = 0.5) {
  return run_vsearch(build_rotor(spec), spec.pulled_back_target(), max_steps, stop_threshold);
}

// Steps to the target ray by the angle ratio, using the actual angle
// between psi_i and psi_f' and the rotor's per-step angle.
inline double rotor_angle_steps(const RotorOperator& rotor) {
  return std::acos(std::min(1.0, std::abs(rotor.frame.overlap_c))) / (0.5 * rotor.alpha);
}

// || V psi_i - (cos(alpha/2) psi_i - i sin(alpha/2) psi_f') ||. Zero when
// psi_i and psi_f' are orthogonal; grows like |c| alpha otherwise.
inline double rotor_expansion_deviation(const RotorOperator& rotor, const StateVector& psi_f_prime) {
  const StateVector moved = apply(rotor.embedded, rotor.frame.e0);
  const Eigen::VectorXcd expected = std::cos(0.5 * rotor.alpha) * rotor.frame.e0.amplitudes() -
                                    Complex(0.0, std::sin(0.5 * rotor.alpha)) * psi_f_prime.amplitudes();
  return (moved.amplitudes() - expected).norm();
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw InvalidArgument("fit inputs differ in length");
  if (xs.size() < 3) throw InvalidArgument("log-log fit needs at least 3 points");
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (!(xs[k] > 0.0 && ys[k] > 0.0)) throw InvalidArgument("log-log fit needs positive data");
    const double lx = std::log(xs[k]);
    const double ly = std::log(ys[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw InvalidArgument("log-log fit needs distinct x values");
  return (n * sxy - sx * sy) / denom;
}

// Step budget that covers the first approach to the target with room to spare.
inline int exhaustive_step_budget(int n_qubits, double p) {
  const double u = std::pow(2.0, -0.5 * n_qubits);
  const double per_step = std::min(2.0 * std::asin(std::pow(u, p)), 2.0 * std::asin(u));
  return static_cast<int>(std::ceil(4.0 * kPi / per_step)) + 16;
}

inline std::optional<int> grover_first_passage(int n_qubits, double threshold, std::size_t target = 0) {
  const SearchSpec spec = SearchSpec::exhaustive(n_qubits, target);
  return run_grover(spec, exhaustive_step_budget(n_qubits, 1.0), threshold).first_passage;
}

inline std::optional<int> vsearch_first_passage(int n_qubits, double p, double threshold, std::size_t target = 0) {
  const SearchSpec spec = SearchSpec::exhaustive(n_qubits, target, p);
  return run_vsearch(spec, exhaustive_step_budget(n_qubits, p), threshold).first_passage;
}

struct ScalingFit {
  std::vector<int> n_qubits;
  std::vector<int> first_passage;
  double slope;
};

// Fits log(s*) against log(N) for exhaustive rotor search over n in
// [n_min, n_max]; for O(N^{p/2}) scaling the slope approaches p/2.
inline ScalingFit scaling_fit(int n_min, int n_max, double p, double threshold = 0.5) {
  detail::require_exponent(p);
  if (n_min < 2 || n_max > 12 || n_min > n_max) throw InvalidArgument("n range must lie within [2, 12]");
  if (n_max - n_min + 1 < 3) throw InvalidArgument("scaling fit needs at least 3 register sizes");
  ScalingFit fit;
  std::vector<double> xs, ys;
  for (int n = n_min; n <= n_max; ++n) {
    const auto s = vsearch_first_passage(n, p, threshold);
    if (!s || *s == 0) throw DegenerateProblem("no positive first passage at n = " + std::to_string(n));
    fit.n_qubits.push_back(n);
    fit.first_passage.push_back(*s);
    xs.push_back(std::ldexp(1.0, n));
    ys.push_back(static_cast<double>(*s));
  }
  fit.slope = loglog_slope(xs, ys);
  return fit;
}

}  // namespace qsearch
