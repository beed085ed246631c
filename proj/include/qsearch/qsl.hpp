// qsl.hpp
// Time-dependent evolution and speed-limit bounds on the transition
// probability P(t) = |<psi_f'|psi(t)>|^2. Units: hbar = 1 throughout.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qsearch/corevec.hpp"

namespace qsearch {

// Hermitian operator at one instant: a dense matrix or a weighted sum of
// projectors sum_k w_k |v_k><v_k| (real weights, Hermitian by construction).
class HermitianOperator {
 public:
  struct ProjectorSum {
    std::vector<double> weights;
    std::vector<Eigen::VectorXcd> vectors;
  };

  static HermitianOperator dense(Eigen::MatrixXcd m) {
    if (m.rows() != m.cols() || m.rows() < 1) throw InvalidArgument("Hamiltonian matrix must be square");
    return HermitianOperator(std::move(m));
  }

  static HermitianOperator projector_sum(std::vector<double> weights, std::vector<Eigen::VectorXcd> vectors) {
    if (weights.size() != vectors.size() || vectors.empty()) throw InvalidArgument("projector sum needs matching terms");
    for (const auto& v : vectors)
      if (v.size() != vectors.front().size()) throw InvalidArgument("projector vectors differ in dimension");
    return HermitianOperator(ProjectorSum{std::move(weights), std::move(vectors)});
  }

  std::size_t dim() const {
    if (auto* m = std::get_if<Eigen::MatrixXcd>(&rep_)) return static_cast<std::size_t>(m->rows());
    return static_cast<std::size_t>(std::get<ProjectorSum>(rep_).vectors.front().size());
  }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const {
    if (auto* m = std::get_if<Eigen::MatrixXcd>(&rep_)) return (*m) * x;
    const auto& ps = std::get<ProjectorSum>(rep_);
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(x.size());
    for (std::size_t k = 0; k < ps.vectors.size(); ++k) out += (ps.weights[k] * ps.vectors[k].dot(x)) * ps.vectors[k];
    return out;
  }

  // max |H - H^dag|
  double hermiticity_defect() const {
    if (auto* m = std::get_if<Eigen::MatrixXcd>(&rep_)) return (*m - m->adjoint()).cwiseAbs().maxCoeff();
    return 0.0;
  }

  Eigen::MatrixXcd to_dense() const {
    if (auto* m = std::get_if<Eigen::MatrixXcd>(&rep_)) return *m;
    const auto& ps = std::get<ProjectorSum>(rep_);
    const auto n = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t k = 0; k < ps.vectors.size(); ++k) out += ps.weights[k] * ps.vectors[k] * ps.vectors[k].adjoint();
    return out;
  }

 private:
  explicit HermitianOperator(std::variant<Eigen::MatrixXcd, ProjectorSum> rep) : rep_(std::move(rep)) {}
  std::variant<Eigen::MatrixXcd, ProjectorSum> rep_;
};

enum class HamiltonianPreset { Custom, ConstantRabi, DetunedRabi, Driven, RandomSmooth, FarhiGutmann };

inline std::string to_string(HamiltonianPreset p) {
  switch (p) {
    case HamiltonianPreset::Custom: return "custom";
    case HamiltonianPreset::ConstantRabi: return "constant_rabi";
    case HamiltonianPreset::DetunedRabi: return "detuned_rabi";
    case HamiltonianPreset::Driven: return "driven";
    case HamiltonianPreset::RandomSmooth: return "random_smooth";
    case HamiltonianPreset::FarhiGutmann: return "farhi_gutmann";
  }
  return "unknown";
}

class HamiltonianSpec {
 public:
  using Evaluator = std::function<HermitianOperator(double)>;
  using Parameters = std::vector<std::pair<std::string, double>>;

  HamiltonianSpec(std::size_t dim, Evaluator evaluator, HamiltonianPreset preset = HamiltonianPreset::Custom,
                  Parameters params = {})
      : dim_(dim), eval_(std::move(evaluator)), preset_(preset), params_(std::move(params)) {
    if (dim_ < 2) throw InvalidArgument("Hamiltonian dimension must be >= 2");
  }

  HermitianOperator at(double t) const {
    HermitianOperator h = eval_(t);
    if (h.dim() != dim_) throw InvalidArgument("Hamiltonian evaluator returned the wrong dimension");
    return h;
  }

  std::size_t dim() const { return dim_; }
  HamiltonianPreset preset() const { return preset_; }
  const Parameters& parameters() const { return params_; }

  static HamiltonianSpec constant(Eigen::MatrixXcd h) {
    const auto dim = static_cast<std::size_t>(h.rows());
    auto op = std::make_shared<const HermitianOperator>(HermitianOperator::dense(std::move(h)));
    return HamiltonianSpec(dim, [op](double) { return *op; });
  }

  // (Omega/2) sigma_x: resonant Rabi flopping, P(t) = sin^2(Omega t / 2) from |0>.
  static HamiltonianSpec constant_rabi(double omega) {
    return HamiltonianSpec(
        2, [omega](double) { return HermitianOperator::dense(0.5 * omega * pauli_x()); },
        HamiltonianPreset::ConstantRabi, {{"omega", omega}});
  }

  // (Omega/2) sigma_x + (delta/2) sigma_z
  static HamiltonianSpec detuned_rabi(double omega, double delta) {
    return HamiltonianSpec(
        2, [omega, delta](double) { return HermitianOperator::dense(0.5 * omega * pauli_x() + 0.5 * delta * pauli_z()); },
        HamiltonianPreset::DetunedRabi, {{"omega", omega}, {"delta", delta}});
  }

  // (a/2) sigma_z + b cos(omega t) sigma_x
  static HamiltonianSpec driven(double a, double b, double omega) {
    return HamiltonianSpec(
        2,
        [a, b, omega](double t) {
          return HermitianOperator::dense(0.5 * a * pauli_z() + b * std::cos(omega * t) * pauli_x());
        },
        HamiltonianPreset::Driven, {{"a", a}, {"b", b}, {"omega", omega}});
  }

  // H(t) = H0 + sum_{k=1..K} (A_k cos k w t + B_k sin k w t) with seeded
  // Gaussian Hermitian coefficients; the k-th harmonic is damped by 1/k.
  static HamiltonianSpec random_smooth(std::size_t dim, std::uint64_t seed, int harmonics = 3, double omega = 1.0) {
    if (harmonics < 0) throw InvalidArgument("harmonic count must be >= 0");
    std::mt19937_64 rng(seed);
    auto h0 = random_hermitian(dim, rng);
    std::vector<Eigen::MatrixXcd> cos_terms, sin_terms;
    for (int k = 1; k <= harmonics; ++k) {
      cos_terms.push_back(random_hermitian(dim, rng) / static_cast<double>(k));
      sin_terms.push_back(random_hermitian(dim, rng) / static_cast<double>(k));
    }
    return HamiltonianSpec(
        dim,
        [h0, cos_terms, sin_terms, omega](double t) {
          Eigen::MatrixXcd h = h0;
          for (std::size_t k = 0; k < cos_terms.size(); ++k) {
            const double arg = static_cast<double>(k + 1) * omega * t;
            h += std::cos(arg) * cos_terms[k] + std::sin(arg) * sin_terms[k];
          }
          return HermitianOperator::dense(std::move(h));
        },
        HamiltonianPreset::RandomSmooth,
        {{"seed", static_cast<double>(seed)}, {"harmonics", static_cast<double>(harmonics)}, {"omega", omega}});
  }

  // E (|target><target| + |start><start|): reaches the target at
  // t = (pi/2) / (E |<start|target>|), i.e. (pi/2) sqrt(N)/E for uniform start.
  static HamiltonianSpec farhi_gutmann(double energy, const StateVector& start, const StateVector& target) {
    require_same_dim(start, target);
    auto op = std::make_shared<const HermitianOperator>(HermitianOperator::projector_sum(
        {energy, energy}, {target.amplitudes(), start.amplitudes()}));
    return HamiltonianSpec(
        start.dim(), [op](double) { return *op; }, HamiltonianPreset::FarhiGutmann, {{"energy", energy}});
  }

  static Eigen::MatrixXcd pauli_x() {
    Eigen::MatrixXcd m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }
  static Eigen::MatrixXcd pauli_z() {
    Eigen::MatrixXcd m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }

 private:
  static Eigen::MatrixXcd random_hermitian(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd z(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        z(i, j) = Complex(re, im);
      }
    }
    return 0.5 * (z + z.adjoint()) / std::sqrt(2.0 * static_cast<double>(dim));
  }

  std::size_t dim_;
  Evaluator eval_;
  HamiltonianPreset preset_;
  Parameters params_;
};

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kRenormalizeThreshold = 1e-12;
inline constexpr double kMaxNormDrift = 1e-6;

// Energy uncertainty sqrt(<H^2> - <H>^2) in `reference`.
inline double delta_h(const HermitianOperator& h, const Eigen::VectorXcd& reference) {
  const Eigen::VectorXcd hf = h.apply(reference);
  const double mean = reference.dot(hf).real();
  const double second = hf.squaredNorm();
  const double var = second - mean * mean;
  if (var < -1e-12 * std::max(1.0, second)) {
    throw NumericalFailure("negative energy variance " + std::to_string(var));
  }
  return std::sqrt(std::max(0.0, var));
}

inline double delta_h(const HermitianOperator& h, const StateVector& reference) {
  return delta_h(h, reference.amplitudes());
}

// Signed dP/dt = 2 Im( conj(<f|psi>) <f|H|psi> ) for P = |<f|psi>|^2.
inline double transition_rate(const HermitianOperator& h, const Eigen::VectorXcd& psi, const Eigen::VectorXcd& target) {
  const Complex a = target.dot(psi);
  const Complex fhpsi = target.dot(h.apply(psi));
  return 2.0 * (std::conj(a) * fhpsi).imag();
}

// |<f|[H, rho]|f>| with rho = |psi><psi|, evaluated literally.
inline double commutator_rate(const HermitianOperator& h, const Eigen::VectorXcd& psi, const Eigen::VectorXcd& target) {
  const Eigen::VectorXcd hpsi = h.apply(psi);
  const Eigen::VectorXcd hf = h.apply(target);
  const Complex h_rho = target.dot(hpsi) * psi.dot(target);  // <f|H|psi><psi|f>
  const Complex rho_h = target.dot(psi) * psi.dot(hf);       // <f|psi><psi|H|f>
  return std::abs(h_rho - rho_h);
}

struct EvolveOptions {
  bool keep_states = true;
  // Also record Delta H in the evolving state psi(t).
  bool evolving_state_uncertainty = false;
};

struct EvolutionTrace {
  EvolutionTrace(StateVector initial_state, StateVector target_state)
      : target(std::move(target_state)), initial(std::move(initial_state)) {}

  std::vector<double> times;
  std::vector<StateVector> states;  // empty unless keep_states
  std::vector<double> probability;  // |<psi_f'|psi(t_k)>|^2
  std::vector<double> delta_h;      // in the target state
  std::vector<double> delta_h_evolving;
  std::vector<double> action;  // int_0^t Delta H
  std::vector<double> rate;    // signed dP/dt from the Schroedinger equation
  std::vector<double> norm_drift;  // per step, before renormalization
  double max_norm_drift = 0.0;
  double total_norm_drift = 0.0;
  int renormalizations = 0;
  StateVector target;
  StateVector initial;

  std::size_t size() const { return times.size(); }
  double step() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
};

inline void require_hermitian(const HermitianOperator& h, double t) {
  const double defect = h.hermiticity_defect();
  if (!(defect <= kHermiticityTolerance)) {
    throw InvalidArgument("Hamiltonian not Hermitian at t = " + std::to_string(t) + " (defect " +
                          std::to_string(defect) + ")");
  }
}

// Integrates i d psi/dt = H(t) psi on a uniform grid of n_steps + 1 points with
// classical RK4 (H sampled at both ends and the midpoint of each step).
// Delta H is integrated by Simpson's rule on each step using the same three
// samples, so the action is nondecreasing by construction.
inline EvolutionTrace evolve(const HamiltonianSpec& h, const StateVector& psi0, const StateVector& target, double t_end,
                             int n_steps, const EvolveOptions& options = {}) {
  if (n_steps < 16) throw InvalidArgument("n_steps must be >= 16");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw InvalidArgument("t_end must be positive");
  require_same_dim(psi0, target);
  if (psi0.dim() != h.dim()) throw InvalidArgument("state and Hamiltonian dimensions differ");

  const double dt = t_end / n_steps;
  const Eigen::VectorXcd& f = target.amplitudes();
  const auto count = static_cast<std::size_t>(n_steps) + 1;

  EvolutionTrace tr(psi0, target);
  tr.times.reserve(count);
  tr.probability.reserve(count);
  tr.delta_h.reserve(count);
  tr.action.reserve(count);
  tr.rate.reserve(count);
  tr.norm_drift.reserve(count - 1);
  if (options.keep_states) tr.states.reserve(count);

  Eigen::VectorXcd psi = psi0.amplitudes();
  HermitianOperator h_now = h.at(0.0);
  require_hermitian(h_now, 0.0);
  double dh_now = delta_h(h_now, f);

  auto record = [&](double t, const HermitianOperator& hop, double dh, double action) {
    tr.times.push_back(t);
    tr.probability.push_back(std::min(1.0, std::norm(f.dot(psi))));
    tr.delta_h.push_back(dh);
    tr.action.push_back(action);
    tr.rate.push_back(transition_rate(hop, psi, f));
    if (options.evolving_state_uncertainty) tr.delta_h_evolving.push_back(delta_h(hop, psi));
    if (options.keep_states) tr.states.emplace_back(detail::unchecked, psi);
  };

  const Complex minus_i(0.0, -1.0);
  double action = 0.0;
  record(0.0, h_now, dh_now, action);
  for (int k = 0; k < n_steps; ++k) {
    const double t = k * dt;
    const double t_next = (k + 1) * dt;
    const HermitianOperator h_mid = h.at(t + 0.5 * dt);
    HermitianOperator h_next = h.at(t_next);
    require_hermitian(h_mid, t + 0.5 * dt);
    require_hermitian(h_next, t_next);

    const Eigen::VectorXcd k1 = minus_i * h_now.apply(psi);
    const Eigen::VectorXcd k2 = minus_i * h_mid.apply(psi + 0.5 * dt * k1);
    const Eigen::VectorXcd k3 = minus_i * h_mid.apply(psi + 0.5 * dt * k2);
    const Eigen::VectorXcd k4 = minus_i * h_next.apply(psi + dt * k3);
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double norm = psi.norm();
    const double drift = std::abs(norm - 1.0);
    if (!(drift <= kMaxNormDrift)) {
      throw NumericalFailure("norm drift " + std::to_string(drift) + " at t = " + std::to_string(t_next) +
                             "; increase n_steps");
    }
    tr.norm_drift.push_back(drift);
    tr.max_norm_drift = std::max(tr.max_norm_drift, drift);
    tr.total_norm_drift += drift;
    if (drift > kRenormalizeThreshold) {
      psi /= norm;
      ++tr.renormalizations;
    }

    const double dh_mid = delta_h(h_mid, f);
    const double dh_next = delta_h(h_next, f);
    action += dt / 6.0 * (dh_now + 4.0 * dh_mid + dh_next);
    record(t_next, h_next, dh_next, action);
    h_now = std::move(h_next);
    dh_now = dh_next;
  }
  return tr;
}

struct RatePoint {
  double time;
  double finite_difference;  // centered difference of P on the grid
  double commutator;         // |<f|[H, rho]|f>|
  double bound;              // 2 Delta H sqrt(P - P^2)
  bool violated;
};

struct RateReport {
  std::vector<RatePoint> points;  // interior grid points only
  int violations = 0;
  double max_excess = 0.0;               // max(commutator - bound), may be negative
  double max_fd_discrepancy = 0.0;       // max | |fd| - commutator |
  double max_saturation = 0.0;           // max commutator / bound where bound > 0
  double tolerance = 0.0;
};

inline constexpr double kRateTolerance = 1e-7;

// Checks |dP/dt| <= 2 Delta H sqrt(P - P^2) + tol at every interior grid point.
// The rate is taken from the commutator, recomputed from stored states when
// available; the centered finite difference is reported alongside.
inline RateReport transition_rate_check(const EvolutionTrace& trace, const HamiltonianSpec& h,
                                        double tol = kRateTolerance) {
  const std::size_t n = trace.size();
  if (n < 3) throw InvalidArgument("rate check needs at least 3 grid points");
  const Eigen::VectorXcd& f = trace.target.amplitudes();
  const bool have_states = trace.states.size() == n;
  RateReport rep;
  rep.tolerance = tol;
  rep.max_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double t = trace.times[k];
    const double fd = (trace.probability[k + 1] - trace.probability[k - 1]) / (trace.times[k + 1] - trace.times[k - 1]);
    const double comm = have_states ? commutator_rate(h.at(t), trace.states[k].amplitudes(), f) : std::abs(trace.rate[k]);
    const double pk = trace.probability[k];
    const double bound = 2.0 * trace.delta_h[k] * std::sqrt(std::max(0.0, pk - pk * pk));
    const bool bad = comm > bound + tol;
    rep.points.push_back(RatePoint{t, fd, comm, bound, bad});
    if (bad) ++rep.violations;
    rep.max_excess = std::max(rep.max_excess, comm - bound);
    rep.max_fd_discrepancy = std::max(rep.max_fd_discrepancy, std::abs(std::abs(fd) - comm));
    if (bound > 1e-9) rep.max_saturation = std::max(rep.max_saturation, comm / bound);
  }
  return rep;
}

struct Envelopes {
  std::vector<double> lower;  // P_-
  std::vector<double> upper;  // P_+
};

namespace detail {
inline void require_theta0(double theta0) {
  if (!(theta0 >= -1e-12 && theta0 <= kPi + 1e-12)) throw InvalidArgument("theta0 must lie in [0, pi]");
}
}  // namespace detail

// P_+ = cos^2(max(0, theta0/2 - A)), P_- = cos^2(min(pi/2, theta0/2 + A)).
// Clamping holds the envelopes at the fixed points P = 1 and P = 0.
inline Envelopes envelopes(double theta0, const std::vector<double>& action) {
  detail::require_theta0(theta0);
  if (action.empty()) throw InvalidArgument("action sequence is empty");
  if (std::abs(action.front()) > 1e-15) throw InvalidArgument("action must start at 0");
  const double half = 0.5 * std::clamp(theta0, 0.0, kPi);
  Envelopes env;
  env.lower.reserve(action.size());
  env.upper.reserve(action.size());
  for (std::size_t k = 0; k < action.size(); ++k) {
    if (k > 0 && action[k] < action[k - 1]) throw InvalidArgument("action must be nondecreasing");
    const double up = std::cos(std::max(0.0, half - action[k]));
    const double lo = std::cos(std::min(0.5 * kPi, half + action[k]));
    env.upper.push_back(up * up);
    env.lower.push_back(std::max(0.0, lo * lo));
  }
  return env;
}

struct StepBounds {
  double s_min;
  std::optional<double> s_max;  // empty when divergent
};

// s_min = sec^p(max(0, theta0/2 - A)); s_max = sec^p(theta0/2 + A), divergent
// once the argument reaches pi/2.
inline StepBounds step_bounds(double theta0, double action_total, double p) {
  detail::require_theta0(theta0);
  if (!(action_total >= 0.0)) throw InvalidArgument("action must be non-negative");
  detail::require_exponent(p);
  const double half = 0.5 * std::clamp(theta0, 0.0, kPi);
  const double lo_arg = std::max(0.0, half - action_total);
  const double hi_arg = half + action_total;
  StepBounds b{std::pow(1.0 / std::cos(lo_arg), p), std::nullopt};
  if (hi_arg < 0.5 * kPi - 1e-12) b.s_max = std::pow(1.0 / std::cos(hi_arg), p);
  return b;
}

struct SandwichViolation {
  std::size_t index;
  double time;
  double probability;
  double lower;
  double upper;
};

inline constexpr double kSandwichTolerance = 1e-9;

inline const char* kOrientationNote =
    "Upper envelope uses cos^2(theta0/2 - A) and lower uses cos^2(theta0/2 + A), consistent with cos decreasing on "
    "[0, pi/2]. The swapped pairing (|U_if| <= cos(theta0/2 + A), >= cos(theta0/2 - A)) is checked too; "
    "printed_orientation_violations counts grid points where it fails.";

struct EnvelopeReport {
  double theta0 = 0.0;
  double p = 1.0;
  std::vector<double> times;
  std::vector<double> probability;
  Envelopes env;
  RateReport rate;
  StepBounds bounds{1.0, std::nullopt};
  std::vector<SandwichViolation> violations;
  int printed_orientation_violations = 0;
  double saturation_gap = 0.0;  // max |P - P_+| up to the first maximum of P
  bool saturated = false;
  std::string orientation_note = kOrientationNote;
};

// Lists every grid point with P < P_- - tol or P > P_+ + tol.
inline std::vector<SandwichViolation> verify_sandwich(const EvolutionTrace& trace, const EnvelopeReport& report,
                                                      double tol = kSandwichTolerance) {
  const std::size_t n = trace.size();
  if (report.env.lower.size() != n || report.env.upper.size() != n) {
    throw InvalidArgument("trace and envelope grids differ in length");
  }
  std::vector<SandwichViolation> out;
  for (std::size_t k = 0; k < n; ++k) {
    const double pk = trace.probability[k];
    if (pk < report.env.lower[k] - tol || pk > report.env.upper[k] + tol) {
      out.push_back(SandwichViolation{k, trace.times[k], pk, report.env.lower[k], report.env.upper[k]});
    }
  }
  return out;
}

inline constexpr double kSaturationTolerance = 1e-8;

inline EnvelopeReport build_envelope_report(const EvolutionTrace& trace, const HamiltonianSpec& h, double p = 1.0,
                                            double sandwich_tol = kSandwichTolerance,
                                            double rate_tol = kRateTolerance) {
  EnvelopeReport rep;
  rep.p = p;
  rep.theta0 = 2.0 * std::acos(std::sqrt(std::clamp(trace.probability.front(), 0.0, 1.0)));
  rep.times = trace.times;
  rep.probability = trace.probability;
  rep.env = envelopes(rep.theta0, trace.action);
  rep.rate = transition_rate_check(trace, h, rate_tol);
  rep.bounds = step_bounds(rep.theta0, trace.action.back(), p);
  rep.violations = verify_sandwich(trace, rep, sandwich_tol);

  for (std::size_t k = 0; k < trace.size(); ++k) {
    // Printed pairing swaps which envelope bounds from above.
    const double pk = trace.probability[k];
    if (pk > rep.env.lower[k] + sandwich_tol || pk < rep.env.upper[k] - sandwich_tol) ++rep.printed_orientation_violations;
  }

  std::size_t peak = trace.size() - 1;
  for (std::size_t k = 0; k + 1 < trace.size(); ++k) {
    if (trace.probability[k + 1] < trace.probability[k]) {
      peak = k;
      break;
    }
  }
  for (std::size_t k = 0; k <= peak; ++k)
    rep.saturation_gap = std::max(rep.saturation_gap, std::abs(trace.probability[k] - rep.env.upper[k]));
  rep.saturated = rep.saturation_gap <= kSaturationTolerance;
  return rep;
}

// First grid time with P >= level, if any.
inline std::optional<double> first_time_at_least(const EvolutionTrace& trace, double level) {
  for (std::size_t k = 0; k < trace.size(); ++k)
    if (trace.probability[k] >= level) return trace.times[k];
  return std::nullopt;
}

}  // namespace qsearch
