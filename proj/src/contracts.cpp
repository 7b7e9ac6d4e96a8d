#include "veralgo/contracts.hpp"

namespace veralgo {

namespace {

std::string violation_message(const std::string& label, ContractKind kind) {
  std::string msg = to_string(kind);
  msg += " violated: ";
  msg += label;
  return msg;
}

}  // namespace

const char* to_string(ContractMode mode) {
  switch (mode) {
    case ContractMode::Off:
      return "off";
    case ContractMode::Assert:
      return "assert";
    case ContractMode::Log:
      return "log";
  }
  return "?";
}

const char* to_string(ContractKind kind) {
  switch (kind) {
    case ContractKind::Pre:
      return "precondition";
    case ContractKind::Post:
      return "postcondition";
    case ContractKind::Invariant:
      return "invariant";
    case ContractKind::Assertion:
      return "assertion";
  }
  return "?";
}

std::optional<ContractMode> parse_contract_mode(std::string_view name) {
  if (name == "off") return ContractMode::Off;
  if (name == "assert") return ContractMode::Assert;
  if (name == "log") return ContractMode::Log;
  return std::nullopt;
}

ContractViolation::ContractViolation(std::string label, ContractKind kind)
    : std::logic_error(violation_message(label, kind)),
      label_(std::move(label)),
      kind_(kind) {}

}  // namespace veralgo
