#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "rzero/report.hpp"

int main(int argc, char** argv) {
  using namespace rzero;
  CLI::App app{"rzero: Riemann's auxiliary function R(s), its zeros and N(T)"};
  RunConfig config;
  std::string command = "eval";
  std::string precision = "std";
  std::string format = "csv";

  app.add_option("--command", command, "eval | count | zeros | validate | table")
      ->check(CLI::IsMember({"eval", "count", "zeros", "validate", "table"}));
  app.add_option("--t-min", config.t_min, "lower height (zeros) or first T (count, table)");
  app.add_option("--t-max", config.t_max, "upper height or last T");
  app.add_option("--t-step", config.t_step, "T spacing; 0 for the single height t-max");
  app.add_option("--box-left", config.box_left, "left edge of the counting box");
  app.add_option("--t0", config.t0, "lower edge of the counting strip");
  app.add_option("--precision", precision)->check(CLI::IsMember({"std", "comp"}));
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", config.out, "output file (default stdout)");
  app.add_option("--seed", config.seed, "seed for randomized suites");
  app.add_flag("--strict", config.strict, "unresolved clusters are an error");
  app.add_option("--point", config.points, "complex literal such as 0.5+14.1347i")
      ->allow_extra_args(false);
  app.add_option("--grid", config.grid, "grid x grid points around each --point");
  app.add_option("--spacing", config.spacing, "grid spacing");
  app.add_option("--tolerance", config.tolerance, "override every validate threshold");
  app.add_option("--samples", config.samples, "random samples per validate suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  config.command = parse_command(command);
  config.precision = precision == "comp" ? PrecisionMode::compensated : PrecisionMode::standard;
  config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  return run(config, std::cout, std::cerr);
}
