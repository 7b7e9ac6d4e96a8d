/*
 * Seeded fuzzing: containers run against their reference models command by
 * command, solvers run against the brute-force oracles. A divergence report
 * carries the full command trace and the case seed so runs can be replayed.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veralgo/contracts.hpp"

namespace veralgo::fuzz {

struct Divergence {
  std::size_t case_index = 0;
  std::uint64_t case_seed = 0;
  std::vector<std::string> trace;
  std::string detail;

  std::string render() const;
};

struct FuzzOptions {
  std::uint64_t seed = 42;
  std::size_t cases = 100;
  std::size_t commands_per_case = 64;
  ContractMode mode = ContractMode::Assert;
};

// Model-based container fuzzing; nullopt means every case agreed.
std::optional<Divergence> fuzz_heap(const FuzzOptions& opt);
std::optional<Divergence> fuzz_hash_set(const FuzzOptions& opt);
std::optional<Divergence> fuzz_tree_set(const FuzzOptions& opt);

// Solver-versus-oracle fuzzing.
std::optional<Divergence> fuzz_matching(const FuzzOptions& opt);
std::optional<Divergence> fuzz_placement(const FuzzOptions& opt);
std::optional<Divergence> fuzz_topsort(const FuzzOptions& opt);
std::optional<Divergence> fuzz_euler(const FuzzOptions& opt);

// Dispatch by problem name ("heap", "hashset", "treeset", "match",
// "place", "topsort", "euler"); nullopt for an unknown name.
std::optional<std::optional<Divergence>> fuzz_problem(
    const std::string& problem, const FuzzOptions& opt);

}  // namespace veralgo::fuzz
