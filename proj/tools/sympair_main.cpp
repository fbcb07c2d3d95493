// Command line front end: reads a JSON job document from a file or stdin,
// runs it, prints the report, exits with the job's status code.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sympair/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for symmetric-pair root combinatorics"};
  app.set_version_flag("--version", std::string(sympair::kToolName) + " " +
                                        sympair::kToolVersion);

  std::string input_path = "-";
  app.add_option("input", input_path, "job document path, or - for stdin");
  std::string format;
  app.add_option("--format", format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  long long seed = -1;
  app.add_option("--seed", seed, "seed echoed into the report (deterministic runs)");
  long long budget = -1;
  app.add_option("--budget", budget, "Weyl group enumeration ceiling");

  CLI11_PARSE(app, argc, argv);

  std::string input_text;
  if (input_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    input_text = buf.str();
  } else {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
      std::cerr << "sympair: cannot open " << input_path << "\n";
      return sympair::kExitParse;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    input_text = buf.str();
  }

  sympair::CliOverrides overrides;
  if (!format.empty()) overrides.format = format;
  if (seed >= 0) overrides.seed = seed;
  if (budget >= 0) overrides.budget = budget;

  const sympair::JobResult result = sympair::run_job(input_text, overrides);
  std::cout << result.output;
  return result.exit_code;
}
