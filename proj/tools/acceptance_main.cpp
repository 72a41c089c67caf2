#include <iostream>

#include <CLI11.hpp>

#include "rcclab/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rcclab acceptance suite"};
  rcclab::AcceptanceOptions opts;
  std::vector<int> only;
  bool verbose = false;
  app.add_option("--seed", opts.seed, "seed for randomized checks");
  app.add_flag("--extended", opts.extended, "also enumerate Aut(S6)");
  app.add_option("--only", only, "run only these criteria");
  app.add_flag("-v,--verbose", verbose, "progress notes on stderr");
  CLI11_PARSE(app, argc, argv);
  opts.only.insert(only.begin(), only.end());
  if (verbose) opts.log = &std::cerr;

  bool all = true;
  for (const auto& r : rcclab::run_acceptance(opts)) {
    std::cout << rcclab::format_result(r) << "\n" << std::flush;
    all &= r.pass;
  }
  return all ? 0 : 1;
}
