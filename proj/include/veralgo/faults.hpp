/*
 * Switchable single-line faults used to demonstrate that the contract and
 * oracle checks actually detect broken implementations. Exactly one fault
 * can be armed at a time; None is the production behaviour.
 */
#pragma once

#include <optional>
#include <string_view>

namespace veralgo::faults {

enum class Fault {
  None,
  // max_heap.cpp sift-down: picks the smaller child instead of the larger.
  HeapChildComparisonFlipped,
  // open_hash_set.hpp remove: writes Nil instead of a Deleted tombstone.
  TombstoneWrittenAsNil,
  // bst_set.cpp two-child delete: keeps the replacement value in the
  // left subtree instead of deleting it there.
  BstDeleteSkipsRestore,
  // matching.cpp proposal loop: an engaged responder accepts every listed
  // proposer instead of only strictly preferred ones.
  MatchingSkipsRejection,
  // graphs.cpp circuit splice: keeps the vertex at the splice point,
  // duplicating it around the inserted subcircuit.
  EulerSpliceOffByOne,
};

Fault active() noexcept;
void arm(Fault fault) noexcept;

inline bool armed(Fault fault) noexcept { return active() == fault; }

std::optional<Fault> parse_fault(std::string_view name);
const char* to_string(Fault fault);

// RAII guard so tests cannot leave a fault armed.
class ScopedFault {
 public:
  explicit ScopedFault(Fault fault) { arm(fault); }
  ~ScopedFault() { arm(Fault::None); }
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;
};

}  // namespace veralgo::faults
