// config.hpp
// Run configuration shared by every subcommand, plus per-subcommand checks.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsearch/corevec.hpp"

namespace qsearch::cli {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitThresholdNotReached = 2,
  kExitUsage = 64,
  kExitDegenerate = 65,
  kExitNumerical = 66,
};

// Bad command-line input. `field` names the offending option.
class UsageError : public InvalidArgument {
 public:
  UsageError(std::string field, const std::string& what)
      : InvalidArgument("--" + field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct RunConfig {
  std::string command;

  // register
  std::optional<int> n;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::optional<std::string> target;  // basis index or "all"
  std::string prep = "walsh-hadamard";
  std::optional<std::uint64_t> seed;
  double p = 0.5;
  std::optional<int> max_steps;
  double threshold = 0.5;

  // dynamics
  std::string preset = "constant_rabi";
  double omega = kPi;
  double delta = 0.0;
  double drive_a = 1.0;
  double drive_b = 1.0;
  double drive_omega = 2.0;
  double energy = 1.0;
  int harmonics = 3;
  int dim = 2;
  int seed_count = 1;
  std::optional<std::uint64_t> state_seed;
  std::optional<double> t_end;
  int n_steps = 2048;
  bool summary_only = false;

  // output
  std::string output = "-";
  std::optional<std::string> format;
};

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> cmds{"grover", "vsearch", "sweep", "bounds", "adjudicate"};
  return cmds;
}

inline const std::vector<std::string>& known_presets() {
  static const std::vector<std::string> presets{"constant_rabi", "detuned_rabi", "driven", "random_smooth",
                                                "farhi_gutmann"};
  return presets;
}

// Output format after applying the per-command default.
inline std::string resolved_format(const RunConfig& c) {
  if (c.format) return *c.format;
  return (c.command == "bounds" || c.command == "adjudicate") ? "json" : "csv";
}

inline bool is_all_targets(const RunConfig& c) { return c.target && *c.target == "all"; }

inline std::size_t parse_target(const RunConfig& c) {
  const std::string& t = *c.target;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(t, &pos);
  } catch (const std::exception&) {
    throw UsageError("target", "expected a basis index or \"all\", got \"" + t + "\"");
  }
  if (pos != t.size() || t.front() == '-') throw UsageError("target", "expected a basis index, got \"" + t + "\"");
  return static_cast<std::size_t>(v);
}

namespace detail {

inline void check_n(const std::optional<int>& n, const std::string& field, int lo, int hi) {
  if (!n) throw UsageError(field, "is required");
  if (*n < lo || *n > hi) {
    throw UsageError(field, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

inline void check_search_fields(const RunConfig& c) {
  check_n(c.n, "n", 1, 20);
  if (!c.target) throw UsageError("target", "is required");
  if (!is_all_targets(c)) {
    const std::size_t t = parse_target(c);
    if (t >= (std::size_t{1} << *c.n)) throw UsageError("target", "index out of range for the register");
  }
  if (c.prep != "walsh-hadamard" && c.prep != "haar") throw UsageError("prep", "must be walsh-hadamard or haar");
  if (c.prep == "haar") {
    if (!c.seed) throw UsageError("seed", "is required with --prep haar");
    if (*c.n > 11) throw UsageError("n", "haar prep is dense; n must be <= 11");
  }
  if (c.max_steps && *c.max_steps < 1) throw UsageError("max-steps", "must be >= 1");
  if (!(c.threshold > 0.0)) throw UsageError("threshold", "must be positive");
}

inline void check_p(const RunConfig& c) {
  if (!(c.p > 0.0 && c.p <= 1.0)) throw UsageError("p", "must lie in (0, 1]");
}

}  // namespace detail

// Throws UsageError naming the first inconsistent field.
inline void validate(const RunConfig& c) {
  const auto& cmds = known_commands();
  if (std::find(cmds.begin(), cmds.end(), c.command) == cmds.end()) {
    throw UsageError("command", "unknown subcommand \"" + c.command + "\"");
  }
  const std::string fmt = resolved_format(c);
  if (c.command == "grover" || c.command == "vsearch" || c.command == "sweep") {
    if (fmt != "csv" && fmt != "json") throw UsageError("format", "must be csv or json");
  } else if (c.command == "bounds") {
    if (fmt != "json") throw UsageError("format", "bounds emits json only");
  } else if (fmt != "json" && fmt != "markdown") {
    throw UsageError("format", "must be json or markdown");
  }

  if (c.command == "grover") {
    detail::check_search_fields(c);
    detail::check_p(c);
  } else if (c.command == "vsearch") {
    detail::check_search_fields(c);
    detail::check_p(c);
  } else if (c.command == "sweep") {
    detail::check_p(c);
    detail::check_n(c.n_min, "n-min", 2, 16);
    detail::check_n(c.n_max, "n-max", 2, 16);
    if (*c.n_max - *c.n_min + 1 < 3) throw UsageError("n-max", "sweep needs at least 3 register sizes");
    if (!(c.threshold > 0.0 && c.threshold <= 1.0)) throw UsageError("threshold", "must lie in (0, 1]");
  } else if (c.command == "bounds") {
    const auto& presets = known_presets();
    if (std::find(presets.begin(), presets.end(), c.preset) == presets.end()) {
      throw UsageError("preset", "unknown preset \"" + c.preset + "\"");
    }
    if (c.n_steps < 16) throw UsageError("n-steps", "must be >= 16");
    if (c.t_end && !(*c.t_end > 0.0)) throw UsageError("t-end", "must be positive");
    if (c.seed_count < 1) throw UsageError("seed-count", "must be >= 1");
    detail::check_p(c);
    if (c.preset == "random_smooth") {
      if (c.dim < 2 || c.dim > 64 || (c.dim & (c.dim - 1)) != 0) {
        throw UsageError("dim", "must be a power of two in [2, 64]");
      }
      if (c.harmonics < 0) throw UsageError("harmonics", "must be >= 0");
    }
    if (c.preset == "farhi_gutmann") {
      detail::check_n(c.n, "n", 1, 16);
      if (!(c.energy > 0.0)) throw UsageError("energy", "must be positive");
      if (c.target && parse_target(c) >= (std::size_t{1} << *c.n)) throw UsageError("target", "index out of range");
    }
  }
}

}  // namespace qsearch::cli
