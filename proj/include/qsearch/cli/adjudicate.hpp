// adjudicate.hpp
// Fixed suite that checks each published closed-form statement against
// simulation and labels it matches / matches-asymptotically /
// orientation-corrected / deviates. Output carries no timings, so two runs
// are byte-identical.

#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "qsearch/cli/commands.hpp"
#include "qsearch/cli/config.hpp"
#include "qsearch/cli/format.hpp"
#include "qsearch/cli/workers.hpp"
#include "qsearch/geometry.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/qsl.hpp"
#include "qsearch/vrotor.hpp"

namespace qsearch::cli {

inline constexpr const char* kMatches = "matches";
inline constexpr const char* kMatchesAsymptotically = "matches-asymptotically";
inline constexpr const char* kOrientationCorrected = "orientation-corrected";
inline constexpr const char* kDeviates = "deviates";

struct Claim {
  std::string id;
  std::string statement;
  std::string status;
  Json data;
};

inline constexpr int kAdjudicateNMin = 2;
inline constexpr int kAdjudicateNMax = 12;

// d^2 = 16 u^2 for one Grover step out of psi_i.
inline Claim adjudicate_one_step() {
  struct Row {
    int n;
    double u, simulated_sq, exact_sq, claimed_sq;
  };
  auto rows = parallel_map<Row>(kAdjudicateNMax - kAdjudicateNMin + 1, [](std::size_t i) {
    const int n = kAdjudicateNMin + static_cast<int>(i);
    const SearchSpec spec = SearchSpec::exhaustive(n, 0);
    const StateVector moved = apply(grover_operator(spec), spec.initial());
    const double d = fs_distance(spec.initial(), moved);
    const auto disp = grover_one_step_displacement(spec.coupling());
    return Row{n, spec.coupling().value(), d * d, disp.exact * disp.exact, disp.claimed * disp.claimed};
  });
  Claim c{"one_step_displacement", "one Grover step moves psi_i by d^2 = 16 u^2", kDeviates, Json::object()};
  Json table = Json::array();
  double worst_exact = 0.0, worst_claimed = 0.0, gap_at_largest = 0.0;
  for (const auto& r : rows) {
    const double gap = 1.0 - r.simulated_sq / r.claimed_sq;
    worst_exact = std::max(worst_exact, std::abs(r.simulated_sq - r.exact_sq));
    worst_claimed = std::max(worst_claimed, std::abs(r.simulated_sq - r.claimed_sq));
    gap_at_largest = gap;
    table.push_back(Json{{"N", std::size_t{1} << r.n},
                         {"simulated_d2", jnum(r.simulated_sq)},
                         {"exact_d2", jnum(r.exact_sq)},
                         {"claimed_d2", jnum(r.claimed_sq)},
                         {"relative_gap", jnum(gap)},
                         {"one_over_N", jnum(std::ldexp(1.0, -r.n))}});
  }
  c.data["exact_form"] = "16 u^2 (1 - u^2)";
  c.data["max_abs_error_vs_exact"] = jnum(worst_exact);
  c.data["max_abs_error_vs_claimed"] = jnum(worst_claimed);
  c.data["rows"] = table;
  if (worst_exact <= 1e-10) c.status = gap_at_largest < 1e-3 ? kMatchesAsymptotically : kDeviates;
  return c;
}

struct PassageRow {
  int n;
  std::optional<int> measured;
  std::optional<int> local_max;
  double estimate;
};

inline Json passage_rows_json(const std::vector<PassageRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"N", std::size_t{1} << r.n},
                       {"first_passage", jopt(r.measured)},
                       {"first_local_maximum", jopt(r.local_max)},
                       {"estimate", jnum(r.estimate)}});
  }
  return out;
}

// Factor-of-two agreement between an estimate and the measured first passage.
inline bool within_factor_two(const std::vector<PassageRow>& rows, double& worst_ratio) {
  bool ok = true;
  worst_ratio = 1.0;
  for (const auto& r : rows) {
    if (!r.measured || *r.measured == 0) return false;
    const double ratio = r.estimate / *r.measured;
    if (std::abs(std::log(ratio)) > std::abs(std::log(worst_ratio))) worst_ratio = ratio;
    ok = ok && ratio >= 0.5 && ratio <= 2.0;
  }
  return ok;
}

inline Claim adjudicate_grover_estimate() {
  auto rows = parallel_map<PassageRow>(kAdjudicateNMax - kAdjudicateNMin + 1, [](std::size_t i) {
    const int n = kAdjudicateNMin + static_cast<int>(i);
    const SearchSpec spec = SearchSpec::exhaustive(n, 0);
    const IterationTrace tr = run_grover(spec, exhaustive_step_budget(n, 1.0), 2.0);
    PassageRow r{n, std::nullopt, tr.first_local_maximum(), grover_step_estimate(spec.coupling()).steps};
    for (const auto& rec : tr.records) {
      if (rec.success_prob >= 0.5) {
        r.measured = rec.step;
        break;
      }
    }
    return r;
  });
  Claim c{"grover_distance_ratio", "Grover needs (1/2) sqrt(1/u^2 - 1) steps (distance ratio)", kDeviates,
          Json::object()};
  double worst = 1.0;
  const bool ok = within_factor_two(rows, worst);
  c.data["threshold"] = 0.5;
  c.data["worst_estimate_over_measured"] = jnum(worst);
  c.data["rows"] = passage_rows_json(rows);
  if (ok) c.status = kMatchesAsymptotically;
  return c;
}

inline std::vector<PassageRow> rotor_rows(double p, bool by_angle) {
  return parallel_map<PassageRow>(kAdjudicateNMax - kAdjudicateNMin + 1, [&](std::size_t i) {
    const int n = kAdjudicateNMin + static_cast<int>(i);
    const SearchSpec spec = SearchSpec::exhaustive(n, 0, p);
    const IterationTrace tr = run_vsearch(spec, exhaustive_step_budget(n, p), 2.0);
    const double est = by_angle ? rotor_steps_by_angle(spec.coupling(), p).steps
                                : rotor_steps_by_distance(spec.coupling(), p).steps;
    PassageRow r{n, std::nullopt, tr.first_local_maximum(), est};
    for (const auto& rec : tr.records) {
      if (rec.success_prob >= 0.5) {
        r.measured = rec.step;
        break;
      }
    }
    return r;
  });
}

inline const std::vector<double>& adjudicate_exponents() {
  static const std::vector<double> ps{0.5, 1.0};
  return ps;
}

inline Claim adjudicate_rotor_distance() {
  Claim c{"rotor_distance_ratio", "rotor search needs sqrt(1 - u^2) / u^p steps (distance ratio)", kDeviates,
          Json::object()};
  bool ok = true;
  Json per_p = Json::array();
  for (double p : adjudicate_exponents()) {
    const auto rows = rotor_rows(p, false);
    double worst = 1.0;
    ok = within_factor_two(rows, worst) && ok;
    per_p.push_back(Json{{"p", p}, {"worst_estimate_over_measured", jnum(worst)}, {"rows", passage_rows_json(rows)}});
  }
  c.data["threshold"] = 0.5;
  c.data["by_exponent"] = per_p;
  if (ok) c.status = kMatchesAsymptotically;
  return c;
}

// The angle ratio predicts where success peaks, so it is compared with the
// first local maximum of the success probability.
inline Claim adjudicate_rotor_angle() {
  Claim c{"rotor_angle_ratio", "rotor search reaches the target after arccos(u) / arcsin(u^p) steps", kDeviates,
          Json::object()};
  bool ok = true;
  double worst = 0.0;
  int worst_ceil = 0;
  Json per_p = Json::array();
  for (double p : adjudicate_exponents()) {
    const auto rows = rotor_rows(p, true);
    for (const auto& r : rows) {
      if (!r.local_max) {
        ok = false;
        continue;
      }
      worst = std::max(worst, std::abs(*r.local_max - r.estimate));
      const int off = std::abs(*r.local_max - static_cast<int>(std::ceil(r.estimate)));
      worst_ceil = std::max(worst_ceil, off);
      ok = ok && off <= 1;
    }
    per_p.push_back(Json{{"p", p}, {"rows", passage_rows_json(rows)}});
  }
  c.data["tolerance_steps"] = 1;
  c.data["max_abs_offset_steps"] = worst_ceil;
  c.data["max_abs_offset_unrounded"] = jnum(worst);
  c.data["by_exponent"] = per_p;
  if (ok) c.status = kMatches;
  return c;
}

// V psi_i = cos(alpha/2) psi_i - i sin(alpha/2) psi_f' holds only when the two
// states are orthogonal; otherwise the gap is of order |c| alpha.
inline Claim adjudicate_rotor_expansion() {
  Claim c{"rotor_one_step_expansion", "V psi_i = cos(alpha/2) psi_i - i sin(alpha/2) psi_f'", kDeviates,
          Json::object()};
  Json rows = Json::array();
  bool orth_ok = true;
  double last_ratio = 0.0;
  for (const auto& [u, p] : std::vector<std::pair<double, double>>{{0.5, 1.0}, {0.25, 0.5}, {0.125, 0.5}}) {
    const StateVector a = StateVector::basis(3, 0);
    const StateVector b = StateVector::basis(3, 5);
    const RotorOperator rotor = build_rotor(a, b, u, p);
    const double dev = rotor_expansion_deviation(rotor, b);
    orth_ok = orth_ok && dev <= 1e-12;
    rows.push_back(Json{{"case", "orthogonal"}, {"coupling", u}, {"p", p}, {"deviation", jnum(dev)}});
  }
  for (int n = 2; n <= kAdjudicateNMax; n += 2) {
    const SearchSpec spec = SearchSpec::exhaustive(n, 0, 0.5);
    const RotorOperator rotor = build_rotor(spec);
    const double dev = rotor_expansion_deviation(rotor, spec.pulled_back_target());
    const double scale = std::abs(rotor.frame.overlap_c) * rotor.alpha;
    last_ratio = dev / scale;
    rows.push_back(Json{{"case", "exhaustive"},
                        {"N", std::size_t{1} << n},
                        {"p", 0.5},
                        {"deviation", jnum(dev)},
                        {"abs_c_times_alpha", jnum(scale)},
                        {"ratio", jnum(last_ratio)}});
  }
  c.data["rows"] = rows;
  c.data["note"] = "exact in the orthogonal case; otherwise deviation is O(|c| alpha) and vanishes as N grows";
  if (orth_ok) c.status = kMatchesAsymptotically;
  return c;
}

inline Claim adjudicate_envelope_orientation() {
  Claim c{"envelope_orientation", "|U_if(t)| <= cos(theta0/2 + A) and >= cos(theta0/2 - A)", kDeviates,
          Json::object()};
  struct Case {
    std::string name;
    HamiltonianSpec h;
    StateVector start, goal;
  };
  const std::vector<Case> cases{
      {"constant_rabi", HamiltonianSpec::constant_rabi(kPi), StateVector::basis(1, 0), StateVector::basis(1, 1)},
      {"detuned_rabi", HamiltonianSpec::detuned_rabi(kPi, 1.0), StateVector::basis(1, 0), StateVector::basis(1, 1)},
      {"driven", HamiltonianSpec::driven(1.0, 1.0, 2.0), StateVector::basis(1, 0), StateVector::basis(1, 1)},
      {"random_smooth", HamiltonianSpec::random_smooth(4, 1), StateVector::basis(2, 0), StateVector::basis(2, 3)},
  };
  struct Outcome {
    std::size_t corrected;
    int printed;
    std::size_t points;
  };
  const auto outcomes = parallel_map<Outcome>(cases.size(), [&](std::size_t i) {
    const auto& cs = cases[i];
    const EvolutionTrace tr = evolve(cs.h, cs.start, cs.goal, 1.0, 2048);
    const EnvelopeReport rep = build_envelope_report(tr, cs.h);
    return Outcome{rep.violations.size(), rep.printed_orientation_violations, tr.size()};
  });
  Json rows = Json::array();
  bool corrected_clean = true, printed_fails = false;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    corrected_clean = corrected_clean && outcomes[i].corrected == 0;
    printed_fails = printed_fails || outcomes[i].printed > 0;
    rows.push_back(Json{{"preset", cases[i].name},
                        {"grid_points", outcomes[i].points},
                        {"corrected_violations", outcomes[i].corrected},
                        {"printed_violations", outcomes[i].printed}});
  }
  c.data["rows"] = rows;
  c.data["corrected_form"] = "cos(theta0/2 + A) <= |U_if(t)| <= cos(theta0/2 - A)";
  if (corrected_clean) c.status = printed_fails ? kOrientationCorrected : kMatches;
  return c;
}

inline Claim adjudicate_slippage() {
  Claim c{"slippage_n4", "for N = 4 the state returns to the initial ray after 3 Grover steps", kDeviates,
          Json::object()};
  const SearchSpec spec = SearchSpec::exhaustive(2, 3);
  const IterationTrace tr = run_grover(spec, 6, 2.0);
  const auto s = detect_slippage(tr);
  c.data["slippage_step"] = jopt(s);
  c.data["overlap_with_initial_at_3"] = jnum(tr.records.at(3).overlap_with_initial);
  if (s && *s == 3 && tr.records.at(3).overlap_with_initial >= 1.0 - 1e-10) c.status = kMatches;
  return c;
}

inline Claim adjudicate_scaling() {
  Claim c{"rotor_scaling", "rotor search takes O(N^{p/2}) steps", kDeviates, Json::object()};
  bool ok = true;
  Json rows = Json::array();
  for (double p : adjudicate_exponents()) {
    const ScalingFit fit = scaling_fit(4, 12, p);
    const bool good = std::abs(fit.slope - 0.5 * p) <= 0.02;
    ok = ok && good;
    rows.push_back(Json{{"p", p},
                        {"slope", jnum(fit.slope)},
                        {"expected", jnum(0.5 * p)},
                        {"first_passage", fit.first_passage},
                        {"within_0_02", good}});
  }
  c.data["n_range"] = Json::array({4, 12});
  c.data["rows"] = rows;
  if (ok) c.status = kMatches;
  return c;
}

inline std::vector<Claim> run_adjudication() {
  return {adjudicate_one_step(),        adjudicate_grover_estimate(),     adjudicate_rotor_distance(),
          adjudicate_rotor_angle(),     adjudicate_rotor_expansion(),     adjudicate_envelope_orientation(),
          adjudicate_slippage(),        adjudicate_scaling()};
}

inline Json adjudication_json(const std::vector<Claim>& claims) {
  Json doc;
  doc["schema"] = "qsearch.adjudication/1";
  doc["claims"] = Json::array();
  for (const auto& c : claims) {
    doc["claims"].push_back(Json{{"id", c.id}, {"statement", c.statement}, {"status", c.status}, {"data", c.data}});
  }
  return doc;
}

inline std::string short_summary(const Claim& c) {
  const Json& d = c.data;
  if (c.id == "one_step_displacement") {
    return "max |sim - exact| = " + fmt_num(d["max_abs_error_vs_exact"].get<double>()) + "; gap to claim = 1/N";
  }
  if (c.id == "grover_distance_ratio") return "worst estimate/measured = " + fmt_num(d["worst_estimate_over_measured"].get<double>());
  if (c.id == "rotor_angle_ratio") return "ceil(estimate) within " + d["max_abs_offset_steps"].dump() + " step(s) of the first success peak";
  if (c.id == "slippage_n4") return "returns at step " + d["slippage_step"].dump();
  if (c.id == "rotor_scaling") {
    std::string s;
    for (const auto& r : d["rows"]) s += (s.empty() ? "" : ", ") + ("p=" + fmt_num(r["p"].get<double>()) + " slope " + fmt_num(r["slope"].get<double>()));
    return s;
  }
  if (c.id == "envelope_orientation") {
    std::string s;
    for (const auto& r : d["rows"]) s += (s.empty() ? "" : ", ") + (r["preset"].get<std::string>() + " " + r["printed_violations"].dump() + " printed-form failures");
    return s;
  }
  return "see JSON";
}

inline void write_adjudication_markdown(std::ostream& out, const std::vector<Claim>& claims) {
  out << "# Claim adjudication\n\n";
  out << "| claim | statement | status | summary |\n";
  out << "|---|---|---|---|\n";
  for (const auto& c : claims) {
    out << "| " << c.id << " | " << c.statement << " | " << c.status << " | " << short_summary(c) << " |\n";
  }
  for (const auto& c : claims) {
    out << "\n## " << c.id << "\n\n```json\n" << c.data.dump(2) << "\n```\n";
  }
}

inline int cmd_adjudicate(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const auto claims = run_adjudication();
  if (resolved_format(c) == "markdown") {
    write_adjudication_markdown(out, claims);
  } else {
    out << adjudication_json(claims).dump(2) << '\n';
  }
  for (const auto& cl : claims) log << "adjudicate: " << cl.id << " -> " << cl.status << '\n';
  return kExitSuccess;
}

}  // namespace qsearch::cli
