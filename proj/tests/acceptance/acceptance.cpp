// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qsearch/cli/adjudicate.hpp"
#include "qsearch/qsearch.hpp"

using namespace qsearch;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Outcome walsh_hadamard_setup() {
  double worst_amp = 0.0, worst_inv = 0.0;
  for (int n = 1; n <= 12; ++n) {
    const StateVector w = walsh_hadamard(StateVector::basis(n, 0));
    const double amp = 1.0 / std::sqrt(std::ldexp(1.0, n));
    for (std::size_t k = 0; k < w.dim(); ++k) worst_amp = std::max(worst_amp, std::abs(w[k] - Complex(amp, 0.0)));
    const StateVector v = StateVector::random(n, 100 + n);
    worst_inv = std::max(worst_inv, (walsh_hadamard(walsh_hadamard(v)).amplitudes() - v.amplitudes()).cwiseAbs().maxCoeff());
  }
  return {worst_amp <= 1e-12 && worst_inv <= 1e-12, "max amp err " + num(worst_amp) + ", involution err " + num(worst_inv)};
}

Outcome exhaustive_overlap() {
  double worst = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const double expect = 1.0 / std::sqrt(std::ldexp(1.0, n));
    for (std::size_t t = 0; t < (std::size_t{1} << n); ++t) {
      worst = std::max(worst, std::abs(SearchSpec::exhaustive(n, t).coupling().value() - expect));
    }
  }
  return {worst <= 1e-12, "max |u - 1/sqrt(N)| = " + num(worst)};
}

Outcome grover_first_passage_check() {
  bool quarter_ok = true, factor_ok = true;
  double worst_offset = 0.0;
  std::ostringstream os;
  for (int n = 2; n <= 12; ++n) {
    const int s = *grover_first_passage(n, 0.5);
    const double sqrt_n = std::sqrt(std::ldexp(1.0, n));
    const double offset = std::abs(s - kPi / 4.0 * sqrt_n);
    worst_offset = std::max(worst_offset, offset);
    quarter_ok = quarter_ok && offset <= 1.0;
    const double ratio = grover_step_estimate(OverlapMagnitude(1.0 / sqrt_n)).steps / s;
    factor_ok = factor_ok && ratio >= 0.5 && ratio <= 2.0;
    os << (n == 2 ? "" : ",") << s;
  }
  return {quarter_ok && factor_ok, "s* = [" + os.str() + "]; max |s* - (pi/4)sqrt(N)| = " + num(worst_offset) +
                                       (factor_ok ? "; estimate within 2x" : "; estimate outside 2x")};
}

Outcome one_step_displacement() {
  double worst = 0.0, worst_factor = 0.0, gap_large = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const SearchSpec spec = SearchSpec::exhaustive(n, 0);
    const double d = fs_distance(spec.initial(), apply(grover_operator(spec), spec.initial()));
    const double u2 = std::ldexp(1.0, -n);
    worst = std::max(worst, std::abs(d * d - 16.0 * u2 * (1.0 - u2)));
    // Ratio to the 16u^2 value must be exactly 1 - u^2.
    worst_factor = std::max(worst_factor, std::abs(d * d / (16.0 * u2) - (1.0 - u2)));
    if (n >= 10) gap_large = std::max(gap_large, 1.0 - d * d / (16.0 * u2));
  }
  return {worst <= 1e-10 && worst_factor <= 1e-10 && gap_large < 1e-3,
          "max |d^2 - 16u^2(1-u^2)| = " + num(worst) + ", relative gap for N>=1024 = " + num(gap_large)};
}

Outcome rotor_exactness() {
  bool ok = true;
  std::ostringstream os;
  for (const auto& [u, p] : std::vector<std::pair<double, double>>{{0.5, 1.0}, {0.25, 0.5}, {0.125, 0.5}}) {
    const StateVector a = StateVector::basis(3, 0);
    const StateVector b = StateVector::basis(3, 5);
    const RotorOperator r = build_rotor(a, b, u, p);
    const double alpha = 2.0 * std::asin(std::pow(u, p));
    double worst = 0.0;
    StateVector psi = a;
    for (int k = 1; k * alpha <= kPi + 1e-12; ++k) {
      const StateVector next = apply(r.embedded, psi);
      worst = std::max(worst, std::abs(bargmann_angle(a, next) - bargmann_angle(a, psi) - alpha));
      psi = next;
    }
    const int steps = static_cast<int>(std::ceil(rotor_angle_steps(r) - 1e-12));
    const double fid = run_vsearch(r, b, steps, 2.0).best_success(steps);
    const bool good = worst <= 1e-10 && fid >= 1.0 - std::pow(u, 2.0 * p);
    ok = ok && good;
    os << "(u=" << u << ",p=" << p << ": adv err " << num(worst) << ", " << steps << " steps, F=" << num(fid) << ") ";
  }
  return {ok, os.str()};
}

Outcome scaling_claim() {
  const ScalingFit half = scaling_fit(4, 12, 0.5);
  const ScalingFit one = scaling_fit(4, 12, 1.0);
  return {std::abs(half.slope - 0.25) <= 0.02 && std::abs(one.slope - 0.5) <= 0.02,
          "slope p=1/2: " + num(half.slope) + ", p=1: " + num(one.slope)};
}

Outcome qsl_sandwich() {
  struct Job {
    std::size_t dim;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::uint64_t s = 1; s <= 100; ++s) jobs.push_back({2, s});
  for (std::uint64_t s = 1; s <= 20; ++s) jobs.push_back({4, s});
  struct Count {
    std::size_t sandwich;
    int rate;
  };
  const auto counts = cli::parallel_map<Count>(jobs.size(), [&](std::size_t i) {
    const int nq = jobs[i].dim == 2 ? 1 : 2;
    const HamiltonianSpec h = HamiltonianSpec::random_smooth(jobs[i].dim, jobs[i].seed);
    const EvolutionTrace tr =
        evolve(h, StateVector::random(nq, 2 * jobs[i].seed), StateVector::random(nq, 2 * jobs[i].seed + 1), 1.0, 2048);
    const EnvelopeReport rep = build_envelope_report(tr, h, 1.0, 1e-9, 1e-7);
    return Count{rep.violations.size(), rep.rate.violations};
  });
  std::size_t sandwich = 0;
  int rate = 0;
  for (const auto& c : counts) {
    sandwich += c.sandwich;
    rate += c.rate;
  }
  return {sandwich == 0 && rate == 0, std::to_string(jobs.size()) + " Hamiltonians, sandwich violations " +
                                          std::to_string(sandwich) + ", rate violations " + std::to_string(rate)};
}

Outcome saturation() {
  const HamiltonianSpec h = HamiltonianSpec::constant_rabi(kPi);
  const EvolutionTrace tr = evolve(h, StateVector::basis(1, 0), StateVector::basis(1, 1), 1.0, 2048);
  const EnvelopeReport rep = build_envelope_report(tr, h);
  double gap = 0.0;
  for (std::size_t k = 0; k < tr.size(); ++k) gap = std::max(gap, std::abs(tr.probability[k] - rep.env.upper[k]));
  return {std::abs(rep.theta0 - kPi) < 1e-12 && gap <= 1e-8, "max |P - P+| = " + num(gap)};
}

Outcome farhi_gutmann() {
  const auto rows = cli::parallel_map<double>(7, [](std::size_t i) {
    const int n = 4 + static_cast<int>(i);
    const StateVector start = StateVector::uniform(n);
    const StateVector goal = StateVector::basis(n, 1);
    const double predicted = 0.5 * kPi * std::sqrt(std::ldexp(1.0, n));
    EvolveOptions opts;
    opts.keep_states = false;
    const EvolutionTrace tr =
        evolve(HamiltonianSpec::farhi_gutmann(1.0, start, goal), start, goal, 1.2 * predicted, 8192, opts);
    const auto reach = first_time_at_least(tr, 1.0 - 1e-6);
    return reach ? *reach / predicted : std::numeric_limits<double>::infinity();
  });
  double worst = 0.0;
  for (double r : rows) worst = std::max(worst, std::abs(r - 1.0));
  return {worst <= 0.05, "max |t_reach / ((pi/2)sqrt(N)/E) - 1| = " + num(worst)};
}

Outcome slippage() {
  const IterationTrace tr = run_grover(SearchSpec::exhaustive(2, 3), 6, 2.0);
  const auto s = detect_slippage(tr);
  const StateVector psi_i = StateVector::basis(2, 0);
  const UnitaryOp q = grover_operator(SearchSpec::exhaustive(2, 3));
  const double ov = std::abs(inner_product(psi_i, apply(q, apply(q, apply(q, psi_i)))));
  return {s && *s == 3 && ov >= 1.0 - 1e-10, "slippage step " + (s ? std::to_string(*s) : "none") +
                                                 ", |<psi_i|Q^3 psi_i>| = " + num(ov)};
}

Outcome step_bound_arithmetic() {
  const StepBounds b = step_bounds(kPi / 2.0, kPi / 12.0, 1.0);
  const bool first = std::abs(b.s_min - 1.1547005383792515) <= 1e-9 && b.s_max && std::abs(*b.s_max - 2.0) <= 1e-9;
  bool second = true;
  for (double u : {0.1, 0.3, 0.7}) {
    const StepBounds z = step_bounds(2.0 * std::acos(u), 0.0, 1.0);
    second = second && std::abs(z.s_min - 1.0 / u) <= 1e-12 && z.s_max && std::abs(*z.s_max - 1.0 / u) <= 1e-12;
  }
  return {first && second, "s_min " + num(b.s_min) + ", s_max " + (b.s_max ? num(*b.s_max) : "divergent")};
}

Outcome determinism() {
  const std::string a = cli::adjudication_json(cli::run_adjudication()).dump(2);
  const std::string b = cli::adjudication_json(cli::run_adjudication()).dump(2);
  return {a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "differ")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "walsh-hadamard setup", 1.0, walsh_hadamard_setup},
      {2, "exhaustive overlap", 2.0, exhaustive_overlap},
      {3, "grover first passage", 10.0, grover_first_passage_check},
      {4, "one-step displacement", 5.0, one_step_displacement},
      {5, "rotation exactness", 5.0, rotor_exactness},
      {6, "scaling slopes", 30.0, scaling_claim},
      {7, "speed-limit sandwich", 60.0, qsl_sandwich},
      {8, "saturation", 5.0, saturation},
      {9, "farhi-gutmann reach time", 20.0, farhi_gutmann},
      {10, "slippage", 1.0, slippage},
      {11, "step-bound arithmetic", 1.0, step_bound_arithmetic},
      {12, "determinism", 60.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %2d %-26s %8.3fs  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str(),
                in_time ? "" : " (over time budget)");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
