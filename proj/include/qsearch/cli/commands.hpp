// commands.hpp
// Subcommand drivers: grover, vsearch, sweep and bounds. Each writes its
// artifact to `out`, progress notes to `log`, and returns an exit code.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qsearch/cli/config.hpp"
#include "qsearch/cli/format.hpp"
#include "qsearch/cli/workers.hpp"
#include "qsearch/geometry.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/qsl.hpp"
#include "qsearch/vrotor.hpp"

namespace qsearch::cli {

namespace detail {

struct TraceRun {
  std::size_t target;
  double coupling;
  IterationTrace trace;
  Json estimates;  // closed-form step counts for this instance
  std::vector<std::pair<std::string, std::string>> summary;
};

inline UnitaryOp make_prep(const RunConfig& c) {
  if (c.prep == "haar") return haar_random_unitary(std::size_t{1} << *c.n, *c.seed);
  return UnitaryOp::walsh_hadamard(*c.n);
}

inline std::vector<std::size_t> targets_of(const RunConfig& c) {
  std::vector<std::size_t> ts;
  if (is_all_targets(c)) {
    for (std::size_t t = 0; t < (std::size_t{1} << *c.n); ++t) ts.push_back(t);
  } else {
    ts.push_back(parse_target(c));
  }
  return ts;
}

inline const char* kTraceColumns = "step,overlap,success_prob,fs_from_initial,bargmann_from_initial";

inline void write_trace_csv(std::ostream& out, const RunConfig& c, const Json& metadata,
                            const std::vector<TraceRun>& runs) {
  const bool all = is_all_targets(c);
  out << "# command=" << c.command << '\n';
  out << '#';
  bool first = true;
  for (const auto& [k, v] : metadata.items()) {
    out << (first ? " " : ",") << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    first = false;
  }
  out << '\n';
  out << (all ? "target," : "") << kTraceColumns << '\n';
  for (const auto& run : runs) {
    for (const auto& r : run.trace.records) {
      if (all) out << run.target << ',';
      out << r.step << ',' << fmt_num(r.overlap_with_target) << ',' << fmt_num(r.success_prob) << ','
          << fmt_num(r.fs_from_initial) << ',' << fmt_num(r.bargmann_from_initial) << '\n';
    }
  }
  for (const auto& run : runs) {
    out << "# summary,target=" << run.target;
    for (const auto& [k, v] : run.summary) out << ',' << k << '=' << v;
    out << '\n';
  }
}

inline void write_trace_json(std::ostream& out, const RunConfig& c, const Json& metadata,
                             const std::vector<TraceRun>& runs) {
  Json doc;
  doc["schema"] = "qsearch.trace/1";
  doc["command"] = c.command;
  doc["metadata"] = metadata;
  doc["runs"] = Json::array();
  for (const auto& run : runs) {
    Json jr;
    jr["target"] = run.target;
    jr["coupling"] = jnum(run.coupling);
    jr["reached_threshold"] = run.trace.reached_threshold;
    jr["first_passage"] = jopt(run.trace.first_passage);
    jr["estimates"] = run.estimates;
    jr["records"] = Json::array();
    for (const auto& r : run.trace.records) {
      jr["records"].push_back(Json{{"step", r.step},
                                   {"overlap", jnum(r.overlap_with_target)},
                                   {"success_prob", jnum(r.success_prob)},
                                   {"fs_from_initial", jnum(r.fs_from_initial)},
                                   {"bargmann_from_initial", jnum(r.bargmann_from_initial)}});
    }
    doc["runs"].push_back(std::move(jr));
  }
  out << doc.dump(2) << '\n';
}

inline int emit_traces(std::ostream& out, const RunConfig& c, const Json& metadata, const std::vector<TraceRun>& runs) {
  if (resolved_format(c) == "json") {
    write_trace_json(out, c, metadata, runs);
  } else {
    write_trace_csv(out, c, metadata, runs);
  }
  for (const auto& run : runs)
    if (!run.trace.reached_threshold) return kExitThresholdNotReached;
  return kExitSuccess;
}

inline Json search_metadata(const RunConfig& c) {
  Json m;
  m["n"] = *c.n;
  m["N"] = std::size_t{1} << *c.n;
  m["target"] = *c.target;
  m["prep"] = c.prep;
  if (c.seed) m["seed"] = *c.seed;
  m["threshold"] = jnum(c.threshold);
  return m;
}

}  // namespace detail

inline int cmd_grover(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const UnitaryOp prep = detail::make_prep(c);
  const auto targets = detail::targets_of(c);
  const int max_steps = c.max_steps.value_or(exhaustive_step_budget(*c.n, 1.0));
  auto runs = parallel_map<detail::TraceRun>(targets.size(), [&](std::size_t i) {
    const SearchSpec spec(*c.n, targets[i], prep, StateVector::basis(*c.n, 0), c.p);
    const double u = spec.coupling().value();
    detail::TraceRun run{targets[i], u, run_grover(spec, max_steps, c.threshold), Json::object(), {}};
    const double est = grover_step_estimate(spec.coupling()).steps;
    run.estimates["grover_estimate"] = jnum(est);
    run.summary = {{"first_passage", fmt_opt(run.trace.first_passage)},
                   {"reached", run.trace.reached_threshold ? "true" : "false"},
                   {"coupling", fmt_num(u)},
                   {"grover_estimate", fmt_num(est)}};
    return run;
  });
  Json meta = detail::search_metadata(c);
  meta["max_steps"] = max_steps;
  if (runs.size() == 1) {
    log << "grover: first passage " << (runs[0].trace.first_passage ? std::to_string(*runs[0].trace.first_passage) : "none")
        << ", distance-ratio estimate " << fmt_num(runs[0].estimates["grover_estimate"].get<double>()) << '\n';
  }
  return detail::emit_traces(out, c, meta, runs);
}

inline int cmd_vsearch(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const UnitaryOp prep = detail::make_prep(c);
  const auto targets = detail::targets_of(c);
  const int max_steps = c.max_steps.value_or(exhaustive_step_budget(*c.n, c.p));
  auto runs = parallel_map<detail::TraceRun>(targets.size(), [&](std::size_t i) {
    const SearchSpec spec(*c.n, targets[i], prep, StateVector::basis(*c.n, 0), c.p);
    const RotorOperator rotor = build_rotor(spec);
    const double u = spec.coupling().value();
    detail::TraceRun run{targets[i], u, run_vsearch(rotor, spec.pulled_back_target(), max_steps, c.threshold),
                         Json::object(), {}};
    const double by_angle = rotor_steps_by_angle(spec.coupling(), c.p).steps;
    const double by_distance = rotor_steps_by_distance(spec.coupling(), c.p).steps;
    const int ceil_angle = static_cast<int>(std::ceil(by_angle));
    run.estimates["rotor_angle_estimate"] = jnum(by_angle);
    run.estimates["rotor_distance_estimate"] = jnum(by_distance);
    run.estimates["alpha"] = jnum(rotor.alpha);
    run.summary = {{"first_passage", fmt_opt(run.trace.first_passage)},
                   {"reached", run.trace.reached_threshold ? "true" : "false"},
                   {"coupling", fmt_num(u)},
                   {"alpha", fmt_num(rotor.alpha)},
                   {"rotor_angle_estimate", fmt_num(by_angle)},
                   {"rotor_distance_estimate", fmt_num(by_distance)},
                   {"best_success_within_estimate", fmt_num(run.trace.best_success(ceil_angle))}};
    return run;
  });
  Json meta = detail::search_metadata(c);
  meta["p"] = jnum(c.p);
  meta["max_steps"] = max_steps;
  if (runs.size() == 1) {
    log << "vsearch: angle-ratio estimate " << fmt_num(runs[0].estimates["rotor_angle_estimate"].get<double>())
        << ", measured first passage "
        << (runs[0].trace.first_passage ? std::to_string(*runs[0].trace.first_passage) : "none") << '\n';
  }
  return detail::emit_traces(out, c, meta, runs);
}

struct SweepRow {
  int n_qubits;
  std::optional<int> grover_first_passage;
  double grover_estimate;
  std::optional<int> vsearch_first_passage;
  double rotor_distance_estimate;
  double rotor_angle_estimate;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::optional<double> grover_slope;
  std::optional<double> vsearch_slope;
};

inline SweepResult run_sweep(int n_min, int n_max, double p, double threshold) {
  SweepResult res;
  res.rows = parallel_map<SweepRow>(static_cast<std::size_t>(n_max - n_min + 1), [&](std::size_t i) {
    const int n = n_min + static_cast<int>(i);
    const OverlapMagnitude u(std::pow(2.0, -0.5 * n));
    return SweepRow{n,
                    grover_first_passage(n, threshold),
                    grover_step_estimate(u).steps,
                    vsearch_first_passage(n, p, threshold),
                    rotor_steps_by_distance(u, p).steps,
                    rotor_steps_by_angle(u, p).steps};
  });
  auto fit = [&](auto member) -> std::optional<double> {
    std::vector<double> xs, ys;
    for (const auto& r : res.rows) {
      const std::optional<int>& s = r.*member;
      if (!s || *s <= 0) return std::nullopt;
      xs.push_back(std::ldexp(1.0, r.n_qubits));
      ys.push_back(static_cast<double>(*s));
    }
    return loglog_slope(xs, ys);
  };
  res.grover_slope = fit(&SweepRow::grover_first_passage);
  res.vsearch_slope = fit(&SweepRow::vsearch_first_passage);
  return res;
}

inline int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const SweepResult res = run_sweep(*c.n_min, *c.n_max, c.p, c.threshold);
  bool complete = true;
  for (const auto& r : res.rows) complete = complete && r.grover_first_passage && r.vsearch_first_passage;

  if (resolved_format(c) == "json") {
    Json doc;
    doc["schema"] = "qsearch.sweep/1";
    doc["p"] = jnum(c.p);
    doc["threshold"] = jnum(c.threshold);
    doc["rows"] = Json::array();
    for (const auto& r : res.rows) {
      doc["rows"].push_back(Json{{"N", std::size_t{1} << r.n_qubits},
                                 {"grover_first_passage", jopt(r.grover_first_passage)},
                                 {"grover_estimate", jnum(r.grover_estimate)},
                                 {"vsearch_first_passage", jopt(r.vsearch_first_passage)},
                                 {"rotor_distance_estimate", jnum(r.rotor_distance_estimate)},
                                 {"rotor_angle_estimate", jnum(r.rotor_angle_estimate)}});
    }
    doc["fit"] = Json{{"grover_slope", jopt(res.grover_slope)}, {"vsearch_slope", jopt(res.vsearch_slope)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "# command=sweep,p=" << fmt_num(c.p) << ",threshold=" << fmt_num(c.threshold) << '\n';
    out << "N,grover_first_passage,grover_estimate,vsearch_first_passage,rotor_distance_estimate,"
           "rotor_angle_estimate\n";
    for (const auto& r : res.rows) {
      out << (std::size_t{1} << r.n_qubits) << ',' << fmt_opt(r.grover_first_passage) << ','
          << fmt_num(r.grover_estimate) << ',' << fmt_opt(r.vsearch_first_passage) << ','
          << fmt_num(r.rotor_distance_estimate) << ',' << fmt_num(r.rotor_angle_estimate) << '\n';
    }
    out << "# fit,grover_slope=" << (res.grover_slope ? fmt_num(*res.grover_slope) : "")
        << ",vsearch_slope=" << (res.vsearch_slope ? fmt_num(*res.vsearch_slope) : "") << '\n';
  }
  log << "sweep: grover slope " << (res.grover_slope ? fmt_num(*res.grover_slope) : "n/a") << ", vsearch slope "
      << (res.vsearch_slope ? fmt_num(*res.vsearch_slope) : "n/a") << '\n';
  return complete ? kExitSuccess : kExitThresholdNotReached;
}

// One bounds job: Hamiltonian plus initial and target states.
struct BoundsProblem {
  HamiltonianSpec hamiltonian;
  StateVector initial;
  StateVector target;
  double t_end;
};

inline BoundsProblem make_bounds_problem(const RunConfig& c, std::size_t index) {
  auto two_level_states = [&](int n_qubits) -> std::pair<StateVector, StateVector> {
    if (c.state_seed) {
      const std::uint64_t s = *c.state_seed + 2 * index;
      return {StateVector::random(n_qubits, s), StateVector::random(n_qubits, s + 1)};
    }
    return {StateVector::basis(n_qubits, 0), StateVector::basis(n_qubits, (std::size_t{1} << n_qubits) - 1)};
  };
  const double t_end = c.t_end.value_or(1.0);
  if (c.preset == "constant_rabi") {
    auto [a, b] = two_level_states(1);
    return {HamiltonianSpec::constant_rabi(c.omega), a, b, t_end};
  }
  if (c.preset == "detuned_rabi") {
    auto [a, b] = two_level_states(1);
    return {HamiltonianSpec::detuned_rabi(c.omega, c.delta), a, b, t_end};
  }
  if (c.preset == "driven") {
    auto [a, b] = two_level_states(1);
    return {HamiltonianSpec::driven(c.drive_a, c.drive_b, c.drive_omega), a, b, t_end};
  }
  if (c.preset == "random_smooth") {
    const std::uint64_t seed = c.seed.value_or(1) + index;
    auto [a, b] = two_level_states(::qsearch::detail::log2_exact(static_cast<std::size_t>(c.dim)));
    return {HamiltonianSpec::random_smooth(static_cast<std::size_t>(c.dim), seed, c.harmonics), a, b, t_end};
  }
  // farhi_gutmann: uniform start, basis-state target.
  const int n = *c.n;
  const std::size_t target = c.target ? parse_target(c) : 0;
  const StateVector start = StateVector::uniform(n);
  const StateVector goal = StateVector::basis(n, target);
  const double predicted = 0.5 * kPi * std::sqrt(std::ldexp(1.0, n)) / c.energy;
  return {HamiltonianSpec::farhi_gutmann(c.energy, start, goal), start, goal, c.t_end.value_or(1.2 * predicted)};
}

inline constexpr double kReachLevel = 1.0 - 1e-6;

inline Json envelope_report_json(const BoundsProblem& prob, const EvolutionTrace& tr, const EnvelopeReport& rep,
                                 int n_steps, bool summary_only) {
  Json j;
  j["preset"] = to_string(prob.hamiltonian.preset());
  Json params = Json::object();
  for (const auto& [k, v] : prob.hamiltonian.parameters()) params[k] = jnum(v);
  j["parameters"] = params;
  j["dim"] = prob.hamiltonian.dim();
  j["t_end"] = jnum(prob.t_end);
  j["n_steps"] = n_steps;
  j["p"] = jnum(rep.p);
  j["theta0"] = jnum(rep.theta0);
  j["action_total"] = jnum(tr.action.back());
  j["step_bounds"] = Json{{"s_min", jnum(rep.bounds.s_min)},
                          {"s_max", rep.bounds.s_max ? jnum(*rep.bounds.s_max) : Json("divergent")}};
  j["rate_check"] = Json{{"tolerance", jnum(rep.rate.tolerance)},
                         {"violations", rep.rate.violations},
                         {"max_excess", jnum(rep.rate.max_excess)},
                         {"max_fd_discrepancy", jnum(rep.rate.max_fd_discrepancy)},
                         {"max_saturation", jnum(rep.rate.max_saturation)}};
  Json viol = Json::array();
  for (const auto& v : rep.violations) {
    viol.push_back(Json{{"index", v.index},
                        {"time", jnum(v.time)},
                        {"probability", jnum(v.probability)},
                        {"lower", jnum(v.lower)},
                        {"upper", jnum(v.upper)}});
  }
  j["sandwich"] = Json{{"tolerance", jnum(kSandwichTolerance)},
                       {"violation_count", rep.violations.size()},
                       {"violations", viol}};
  j["printed_orientation_violations"] = rep.printed_orientation_violations;
  j["saturation"] = Json{{"max_gap", jnum(rep.saturation_gap)}, {"saturated", rep.saturated}};
  j["orientation_note"] = rep.orientation_note;
  j["integration"] = Json{{"max_norm_drift", jnum(tr.max_norm_drift)},
                          {"total_norm_drift", jnum(tr.total_norm_drift)},
                          {"renormalizations", tr.renormalizations}};
  j["reach_time"] = jopt(first_time_at_least(tr, kReachLevel));
  if (!summary_only) {
    Json s;
    s["time"] = tr.times;
    s["probability"] = tr.probability;
    s["lower"] = rep.env.lower;
    s["upper"] = rep.env.upper;
    s["delta_h"] = tr.delta_h;
    s["action"] = tr.action;
    s["rate"] = tr.rate;
    std::vector<double> bound(tr.size(), 0.0);
    for (std::size_t k = 0; k < tr.size(); ++k) {
      const double pk = tr.probability[k];
      bound[k] = 2.0 * tr.delta_h[k] * std::sqrt(std::max(0.0, pk - pk * pk));
    }
    s["rate_bound"] = bound;
    j["series"] = s;
  }
  return j;
}

inline int cmd_bounds(const RunConfig& c, std::ostream& out, std::ostream& log) {
  struct Outcome {
    Json report;
    std::size_t violations;
  };
  const bool keep_states = c.preset != "farhi_gutmann";
  auto outcomes = parallel_map<Outcome>(static_cast<std::size_t>(c.seed_count), [&](std::size_t i) {
    const BoundsProblem prob = make_bounds_problem(c, i);
    EvolveOptions opts;
    opts.keep_states = keep_states;
    const EvolutionTrace tr = evolve(prob.hamiltonian, prob.initial, prob.target, prob.t_end, c.n_steps, opts);
    const EnvelopeReport rep = build_envelope_report(tr, prob.hamiltonian, c.p);
    return Outcome{envelope_report_json(prob, tr, rep, c.n_steps, c.summary_only),
                   rep.violations.size() + static_cast<std::size_t>(rep.rate.violations)};
  });
  Json doc;
  doc["schema"] = "qsearch.bounds/1";
  doc["runs"] = Json::array();
  std::size_t total = 0;
  for (auto& o : outcomes) {
    total += o.violations;
    doc["runs"].push_back(std::move(o.report));
  }
  doc["total_violations"] = total;
  out << doc.dump(2) << '\n';
  log << "bounds: " << outcomes.size() << " run(s), " << total << " violation(s)\n";
  return total == 0 ? kExitSuccess : kExitThresholdNotReached;
}

}  // namespace qsearch::cli
