// qsearch command-line driver.
//   qsearch grover --n 10 --target 37
//   qsearch sweep --n-min 4 --n-max 12 --p 0.5
//   qsearch bounds --preset random_smooth --dim 4 --seed 1 --seed-count 100

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsearch/cli/run.hpp"

namespace {

using qsearch::cli::RunConfig;

void add_output(CLI::App* sub, RunConfig& c, const std::string& formats) {
  sub->add_option("--output,-o", c.output, "output path, - for stdout");
  sub->add_option("--format", c.format, formats);
}

void add_search(CLI::App* sub, RunConfig& c) {
  sub->add_option("--n", c.n, "register size in qubits");
  sub->add_option("--target", c.target, "target basis index or all");
  sub->add_option("--prep", c.prep, "walsh-hadamard | haar");
  sub->add_option("--seed", c.seed, "seed for haar prep");
  sub->add_option("--max-steps", c.max_steps);
  sub->add_option("--threshold", c.threshold, "stop once success probability reaches this");
  add_output(sub, c, "csv | json");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"state-vector search and speed-limit experiments"};
  app.require_subcommand(1);

  auto* grover = app.add_subcommand("grover", "iterate the Grover operator");
  add_search(grover, c);

  auto* vsearch = app.add_subcommand("vsearch", "iterate the controlled rotation");
  add_search(vsearch, c);
  vsearch->add_option("--p", c.p, "exponent in (0, 1]");

  auto* sweep = app.add_subcommand("sweep", "first passage against register size");
  sweep->add_option("--n-min", c.n_min);
  sweep->add_option("--n-max", c.n_max);
  sweep->add_option("--p", c.p);
  sweep->add_option("--threshold", c.threshold);
  add_output(sweep, c, "csv | json");

  auto* bounds = app.add_subcommand("bounds", "speed-limit envelopes for a Hamiltonian preset");
  bounds->add_option("--preset", c.preset);
  bounds->add_option("--omega", c.omega);
  bounds->add_option("--delta", c.delta);
  bounds->add_option("--drive-a", c.drive_a);
  bounds->add_option("--drive-b", c.drive_b);
  bounds->add_option("--drive-omega", c.drive_omega);
  bounds->add_option("--energy", c.energy);
  bounds->add_option("--harmonics", c.harmonics);
  bounds->add_option("--dim", c.dim);
  bounds->add_option("--n", c.n);
  bounds->add_option("--target", c.target);
  bounds->add_option("--seed", c.seed);
  bounds->add_option("--seed-count", c.seed_count);
  bounds->add_option("--state-seed", c.state_seed);
  bounds->add_option("--t-end", c.t_end);
  bounds->add_option("--n-steps", c.n_steps);
  bounds->add_option("--p", c.p);
  bounds->add_flag("--summary-only", c.summary_only, "drop per-point series");
  add_output(bounds, c, "json");

  auto* adjudicate = app.add_subcommand("adjudicate", "check closed-form claims against simulation");
  add_output(adjudicate, c, "json | markdown");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qsearch::cli::kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  return qsearch::cli::run_command(c, std::cout, std::cerr);
}
