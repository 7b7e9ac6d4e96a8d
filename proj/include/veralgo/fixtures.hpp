/*
 * Built-in fixture suite: one group per shipped algorithm or container,
 * each exercising the pinned example values. Groups run under any contract
 * mode; output comparisons happen regardless of mode, so Off still tests
 * functional behaviour while Assert/Log also evaluate the contracts.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "veralgo/contracts.hpp"

namespace veralgo::fixtures {

struct FixtureOutcome {
  std::string name;
  bool passed = true;
  std::string detail;  // first failure, empty when passed
  std::uint64_t checks = 0;
  std::size_t violations = 0;
  double millis = 0.0;
};

// Runs the full fixture census in a fixed order; one outcome per group.
std::vector<FixtureOutcome> run_all(ContractMode mode);

}  // namespace veralgo::fixtures
