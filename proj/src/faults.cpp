#include "veralgo/faults.hpp"

namespace veralgo::faults {

namespace {
Fault g_active = Fault::None;
}

Fault active() noexcept { return g_active; }

void arm(Fault fault) noexcept { g_active = fault; }

std::optional<Fault> parse_fault(std::string_view name) {
  if (name == "none") return Fault::None;
  if (name == "heap-child-cmp") return Fault::HeapChildComparisonFlipped;
  if (name == "tombstone-nil") return Fault::TombstoneWrittenAsNil;
  if (name == "bst-skip-restore") return Fault::BstDeleteSkipsRestore;
  if (name == "match-skip-rejection") return Fault::MatchingSkipsRejection;
  if (name == "euler-splice") return Fault::EulerSpliceOffByOne;
  return std::nullopt;
}

const char* to_string(Fault fault) {
  switch (fault) {
    case Fault::None:
      return "none";
    case Fault::HeapChildComparisonFlipped:
      return "heap-child-cmp";
    case Fault::TombstoneWrittenAsNil:
      return "tombstone-nil";
    case Fault::BstDeleteSkipsRestore:
      return "bst-skip-restore";
    case Fault::MatchingSkipsRejection:
      return "match-skip-rejection";
    case Fault::EulerSpliceOffByOne:
      return "euler-splice";
  }
  return "?";
}

}  // namespace veralgo::faults
