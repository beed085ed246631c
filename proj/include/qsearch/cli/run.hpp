// run.hpp
// Dispatch a validated RunConfig and turn library errors into exit codes.

#pragma once

#include <fstream>
#include <iostream>
#include <ostream>

#include "qsearch/cli/adjudicate.hpp"
#include "qsearch/cli/commands.hpp"
#include "qsearch/cli/config.hpp"

namespace qsearch::cli {

inline int dispatch(const RunConfig& c, std::ostream& out, std::ostream& log) {
  if (c.command == "grover") return cmd_grover(c, out, log);
  if (c.command == "vsearch") return cmd_vsearch(c, out, log);
  if (c.command == "sweep") return cmd_sweep(c, out, log);
  if (c.command == "bounds") return cmd_bounds(c, out, log);
  return cmd_adjudicate(c, out, log);
}

// Runs `body`, mapping library exceptions to exit codes. Never throws.
template <class Body>
int guarded(Body&& body, std::ostream& err) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateProblem& e) {
    err << "degenerate problem: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

// Validates, runs, and writes to c.output ("-" means `out`).
inline int run_command(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        validate(c);
        if (c.output == "-") return dispatch(c, out, err);
        std::ofstream file(c.output, std::ios::binary);
        if (!file) throw UsageError("output", "cannot open \"" + c.output + "\" for writing");
        const int code = dispatch(c, file, err);
        file.close();
        if (!file) throw UsageError("output", "write to \"" + c.output + "\" failed");
        return code;
      },
      err);
}

}  // namespace qsearch::cli
