/*
 * Command implementations behind the command-line tool, kept in the library
 * so tests can drive them directly.
 *
 * Exit-code protocol, shared by every command:
 *   0  success
 *   1  semantic failure (fixture failed, solution not certified, oracle
 *      disagreement)
 *   2  input or usage error (parse failure, violated solver precondition)
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>

#include "veralgo/contracts.hpp"
#include "veralgo/faults.hpp"

namespace veralgo::cli {

struct RunConfig {
  std::string command;  // check | solve | verify | fuzz | report
  std::string problem;
  std::filesystem::path input;
  std::filesystem::path solution;
  std::uint64_t seed = 42;
  std::size_t cases = 100;
  ContractMode contracts = ContractMode::Assert;
  faults::Fault fault = faults::Fault::None;
};

int cmd_check(const RunConfig& config, std::ostream& out);
int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_fuzz(const RunConfig& config, std::ostream& out);
int cmd_report(const RunConfig& config, std::ostream& out);

// Dispatches on config.command; arms config.fault for the duration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace veralgo::cli
