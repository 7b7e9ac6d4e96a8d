// Command-line front end: run the built-in fixture suite, solve instances
// from files, certify proposed solutions, fuzz against the brute-force
// oracles, and print the contract-evaluation report.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "veralgo/commands.hpp"

namespace {

void add_common_flags(CLI::App* sub, std::string& contracts,
                      std::string& fault) {
  sub->add_option("--contracts", contracts,
                  "contract mode: off, assert or log")
      ->check(CLI::IsMember({"off", "assert", "log"}));
  sub->add_option("--fault", fault,
                  "arm a named fault (testing aid): heap-child-cmp, "
                  "tombstone-nil, bst-skip-restore, match-skip-rejection, "
                  "euler-splice")
      ->check(CLI::IsMember({"none", "heap-child-cmp", "tombstone-nil",
                             "bst-skip-restore", "match-skip-rejection",
                             "euler-splice"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contract-checked classic algorithms: solver, certifier and "
               "fuzzing harness"};
  app.require_subcommand(1);

  veralgo::cli::RunConfig config;
  std::string contracts = "assert";
  std::string fault = "none";
  std::string input;
  std::string solution;

  CLI::App* check = app.add_subcommand("check", "run the fixture suite");
  add_common_flags(check, contracts, fault);

  CLI::App* solve =
      app.add_subcommand("solve", "solve an instance file, print solution");
  solve->add_option("--problem", config.problem,
                    "sort, topsort, euler, match or place")
      ->required();
  solve->add_option("--input", input, "instance file")->required();
  add_common_flags(solve, contracts, fault);

  CLI::App* verify =
      app.add_subcommand("verify", "certify a proposed solution");
  verify->add_option("--problem", config.problem,
                     "sort, topsort, euler, trail, match or place")
      ->required();
  verify->add_option("--input", input, "instance file")->required();
  verify->add_option("--solution", solution, "solution file")->required();
  add_common_flags(verify, contracts, fault);

  CLI::App* fuzz =
      app.add_subcommand("fuzz", "run seeded cases against the oracles");
  fuzz->add_option("--problem", config.problem,
                   "heap, hashset, treeset, match, place, topsort or euler")
      ->required();
  fuzz->add_option("--seed", config.seed, "replayable seed");
  fuzz->add_option("--cases", config.cases, "number of cases");
  add_common_flags(fuzz, contracts, fault);

  CLI::App* report =
      app.add_subcommand("report", "contract-evaluation metrics table");
  add_common_flags(report, contracts, fault);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) config.command = "check";
  if (solve->parsed()) config.command = "solve";
  if (verify->parsed()) config.command = "verify";
  if (fuzz->parsed()) config.command = "fuzz";
  if (report->parsed()) config.command = "report";

  config.input = input;
  config.solution = solution;
  config.contracts = *veralgo::parse_contract_mode(contracts);
  config.fault = *veralgo::faults::parse_fault(fault);

  return veralgo::cli::run(config, std::cout, std::cerr);
}
