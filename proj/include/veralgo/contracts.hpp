/*
 * Runtime design-by-contract machinery: labelled preconditions,
 * postconditions, invariants and assertions evaluated under a configurable
 * mode, with old-state snapshots and an evaluation tally for reporting.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace veralgo {

// How contract predicates are handled at runtime.
//  - Off:    predicates are not evaluated at all (the thunk never runs).
//  - Assert: a failing predicate aborts the operation with ContractViolation.
//  - Log:    a failing predicate is recorded and execution continues.
enum class ContractMode { Off, Assert, Log };

enum class ContractKind { Pre, Post, Invariant, Assertion };

const char* to_string(ContractMode mode);
const char* to_string(ContractKind kind);
std::optional<ContractMode> parse_contract_mode(std::string_view name);

class ContractViolation : public std::logic_error {
 public:
  ContractViolation(std::string label, ContractKind kind);

  const std::string& label() const noexcept { return label_; }
  ContractKind kind() const noexcept { return kind_; }

 private:
  std::string label_;
  ContractKind kind_;
};

struct ViolationRecord {
  std::string label;
  ContractKind kind;

  bool operator==(const ViolationRecord&) const = default;
};

// Evaluates labelled contract predicates for one thread of execution.
// Each label identifies exactly one contract site in the library.
// Not thread-safe: a context is confined to the thread that owns it;
// independent contexts may run in parallel.
class ContractContext {
 public:
  explicit ContractContext(ContractMode mode = ContractMode::Assert)
      : mode_(mode) {}

  ContractMode mode() const noexcept { return mode_; }
  void set_mode(ContractMode mode) noexcept { mode_ = mode; }

  std::uint64_t checks_evaluated() const noexcept { return checks_; }
  const std::vector<ViolationRecord>& violations() const noexcept {
    return violations_;
  }
  void reset_counters() {
    checks_ = 0;
    violations_.clear();
  }

  template <typename Pred>
  void check_pre(std::string_view label, Pred&& predicate) {
    check(ContractKind::Pre, label, std::forward<Pred>(predicate));
  }

  template <typename Pred>
  void check_post(std::string_view label, Pred&& predicate) {
    check(ContractKind::Post, label, std::forward<Pred>(predicate));
  }

  template <typename Pred>
  void check_invariant(std::string_view label, Pred&& predicate) {
    check(ContractKind::Invariant, label, std::forward<Pred>(predicate));
  }

  template <typename Pred>
  void check_assert(std::string_view label, Pred&& predicate) {
    check(ContractKind::Assertion, label, std::forward<Pred>(predicate));
  }

  template <typename Pred>
  void check(ContractKind kind, std::string_view label, Pred&& predicate) {
    static_assert(std::is_invocable_r_v<bool, Pred>,
                  "contract predicates are lazy () -> bool thunks");
    if (mode_ == ContractMode::Off) return;
    ++checks_;
    if (predicate()) return;
    violations_.push_back(ViolationRecord{std::string(label), kind});
    if (mode_ == ContractMode::Assert) {
      throw ContractViolation(std::string(label), kind);
    }
  }

  // Captures entry state for postconditions that mention old values.
  // Returns nullopt in Off mode, so the capture cost is skipped along with
  // the checks that would consume it.
  template <typename F>
  auto capture_old(F&& capture)
      -> std::optional<std::decay_t<decltype(capture())>> {
    if (mode_ == ContractMode::Off) return std::nullopt;
    return std::forward<F>(capture)();
  }

 private:
  ContractMode mode_;
  std::uint64_t checks_ = 0;
  std::vector<ViolationRecord> violations_;
};

// Deep copy of a semantic value captured at operation entry; unaffected by
// later mutation of the live value.
template <typename V>
class Snapshot {
 public:
  explicit Snapshot(V value) : value_(std::move(value)) {}

  const V& value() const noexcept { return value_; }

 private:
  V value_;
};

template <typename V>
Snapshot<V> snapshot(const V& value) {
  return Snapshot<V>(value);
}

}  // namespace veralgo
