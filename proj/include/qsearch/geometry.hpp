// geometry.hpp
// Gauge-invariant measures on the projective space of register states and
// the closed-form step-count estimates built from them.

#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "qsearch/corevec.hpp"

namespace qsearch {

// |<psi_1|psi_2>| or |U_if|, kept inside [0, 1].
class OverlapMagnitude {
 public:
  static constexpr double kClampTolerance = 1e-12;

  explicit OverlapMagnitude(double value) {
    if (!std::isfinite(value) || value < -kClampTolerance || value > 1.0 + kClampTolerance) {
      throw InvalidArgument("overlap magnitude " + std::to_string(value) + " outside [0, 1]");
    }
    value_ = std::clamp(value, 0.0, 1.0);
  }

  double value() const { return value_; }

 private:
  double value_;
};

inline OverlapMagnitude overlap_magnitude(const StateVector& a, const StateVector& b) {
  // Round-off can push |<a|b>| a few ulps past 1; clamp silently.
  return OverlapMagnitude(std::min(1.0, std::abs(inner_product(a, b))));
}

enum class StepFormula {
  GroverDistanceRatio,  // d(psi_i, psi_f') / d(psi_i, Q psi_i)
  RotorDistanceRatio,   // d(psi_i, psi_f') / d(psi_i, V psi_i)
  RotorAngleRatio,      // Bargmann angle to target / rotation per step
  ClaimedOneStep,
  ExactOneStep,
};

inline std::string to_string(StepFormula f) {
  switch (f) {
    case StepFormula::GroverDistanceRatio: return "grover_distance_ratio";
    case StepFormula::RotorDistanceRatio: return "rotor_distance_ratio";
    case StepFormula::RotorAngleRatio: return "rotor_angle_ratio";
    case StepFormula::ClaimedOneStep: return "claimed_one_step";
    case StepFormula::ExactOneStep: return "exact_one_step";
  }
  return "unknown";
}

struct StepEstimate {
  double steps;  // +inf when divergent
  StepFormula formula;
  bool divergent = false;

  static StepEstimate diverged(StepFormula f) {
    return StepEstimate{std::numeric_limits<double>::infinity(), f, true};
  }
};

// d = 2 sqrt(1 - |<a|b>|^2), in [0, 2].
inline double fs_distance(const StateVector& a, const StateVector& b) {
  const double ov = overlap_magnitude(a, b).value();
  return 2.0 * std::sqrt(std::max(0.0, 1.0 - ov * ov));
}

// theta with |<a|b>| = cos(theta/2), theta in [0, pi].
inline double bargmann_angle(const StateVector& a, const StateVector& b) {
  return 2.0 * std::acos(overlap_magnitude(a, b).value());
}

// Number of Q applications: s = (1/2) sqrt(1/u^2 - 1).
inline StepEstimate grover_step_estimate(OverlapMagnitude u) {
  const double x = u.value();
  if (x == 0.0) return StepEstimate::diverged(StepFormula::GroverDistanceRatio);
  return StepEstimate{0.5 * std::sqrt(std::max(0.0, 1.0 / (x * x) - 1.0)), StepFormula::GroverDistanceRatio};
}

// Distance to cover over distance moved per rotor step: s = sqrt(1 - u^2) / u^p.
inline StepEstimate rotor_steps_by_distance(OverlapMagnitude u, double p) {
  detail::require_exponent(p);
  const double x = u.value();
  if (x == 0.0) return StepEstimate::diverged(StepFormula::RotorDistanceRatio);
  return StepEstimate{std::sqrt(std::max(0.0, 1.0 - x * x)) / std::pow(x, p), StepFormula::RotorDistanceRatio};
}

// Bargmann angle to cover over rotation per step: s = arccos(u) / arcsin(u^p).
inline StepEstimate rotor_steps_by_angle(OverlapMagnitude u, double p) {
  detail::require_exponent(p);
  const double x = u.value();
  if (x == 0.0) return StepEstimate::diverged(StepFormula::RotorAngleRatio);
  if (x == 1.0) return StepEstimate{0.0, StepFormula::RotorAngleRatio};
  return StepEstimate{std::acos(x) / std::asin(std::pow(x, p)), StepFormula::RotorAngleRatio};
}

// Fubini-Study distance moved by one Grover step from psi_i, as claimed
// (4u) and as follows from |<psi_i|Q psi_i>| = |1 - 2u^2| (4u sqrt(1-u^2)).
struct OneStepDisplacement {
  double claimed;
  double exact;

  // 1 - exact^2 / claimed^2, i.e. u^2; zero when both vanish.
  double squared_relative_gap() const { return claimed == 0.0 ? 0.0 : 1.0 - (exact * exact) / (claimed * claimed); }
};

inline OneStepDisplacement grover_one_step_displacement(OverlapMagnitude u) {
  const double x = u.value();
  return OneStepDisplacement{4.0 * x, 4.0 * x * std::sqrt(std::max(0.0, 1.0 - x * x))};
}

}  // namespace qsearch
