#include "veralgo/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <span>
#include <sstream>
#include <vector>

#include "veralgo/fixtures.hpp"
#include "veralgo/fuzz.hpp"
#include "veralgo/graphs.hpp"
#include "veralgo/instance_io.hpp"
#include "veralgo/matching.hpp"
#include "veralgo/search_sort.hpp"

namespace veralgo::cli {

namespace {

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return 2;
}

int verify_verdict(std::ostream& out, const std::string& failed_clause) {
  if (failed_clause.empty()) {
    out << "certified\n";
    return 0;
  }
  out << "not certified: " << failed_clause << "\n";
  return 1;
}

// First violated clause for a sequence solution against an undirected
// graph, circuit or trail flavour.
std::string euler_clause(std::span<const Vertex> s, const UGraph& g,
                         bool circuit) {
  if (circuit) {
    if (!is_valid_circuit(s, g)) return "isValidCircuit";
    if (!is_euler_circuit(s, g)) return "traversesAllEdges";
  } else {
    if (s.empty() || !is_valid_trail(s, g)) return "isValidTrail";
    if (!is_euler_trail(s, g)) return "traversesAllEdges";
  }
  return "";
}

}  // namespace

int cmd_check(const RunConfig& config, std::ostream& out) {
  auto outcomes = fixtures::run_all(config.contracts);
  bool all_passed = true;
  for (const auto& outcome : outcomes) {
    if (outcome.passed) {
      out << "[ ok ] " << outcome.name << "\n";
    } else {
      all_passed = false;
      out << "[FAIL] " << outcome.name << ": " << outcome.detail << "\n";
    }
  }
  out << (all_passed ? "check: all " : "check: FAILURES among ")
      << outcomes.size() << " fixture groups"
      << (all_passed ? " passed" : "") << "\n";
  return all_passed ? 0 : 1;
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ContractContext ctx(config.contracts);
  try {
    std::string text = io::read_file(config.input);
    if (config.problem == "sort") {
      std::vector<Key> values = io::parse_integers(text);
      insertion_sort(ctx, values);
      out << io::format_sequence(std::span<const Vertex>(values)) << "\n";
      return 0;
    }
    if (config.problem == "topsort") {
      io::ParsedGraph parsed = io::parse_graph(text);
      if (parsed.kind != io::GraphKind::Directed) {
        return usage_error(err, "topsort expects a directed graph (D)");
      }
      auto order = topsort(ctx, parsed.digraph);
      if (!order.has_value()) {
        return usage_error(err, "cycle detected: no topological order exists");
      }
      out << io::format_sequence(std::span<const Vertex>(*order)) << "\n";
      return 0;
    }
    if (config.problem == "euler") {
      io::ParsedGraph parsed = io::parse_graph(text);
      if (parsed.kind != io::GraphKind::Undirected) {
        return usage_error(err, "euler expects an undirected graph (U)");
      }
      auto circuit = find_euler_circuit(ctx, parsed.ugraph);
      out << io::format_sequence(std::span<const Vertex>(circuit)) << "\n";
      return 0;
    }
    if (config.problem == "match") {
      io::MatchingInstance inst = io::parse_matching_instance(text);
      MatchingResult couples =
          stable_matching(ctx, inst.proposers, inst.responders);
      out << io::format_matching(couples);
      return 0;
    }
    if (config.problem == "place") {
      PlacementInstance inst = io::parse_placement_instance(text);
      MatchingResult placement = teachers_placement(ctx, inst);
      out << io::format_matching(placement);
      return 0;
    }
    return usage_error(err, "unknown problem '" + config.problem + "'");
  } catch (const io::ParseError& parse_error) {
    return usage_error(err, parse_error.what());
  } catch (const ContractViolation& violation) {
    return usage_error(err, violation.what());
  }
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::string instance_text = io::read_file(config.input);
    std::string solution_text = io::read_file(config.solution);

    if (config.problem == "sort") {
      std::vector<Key> input = io::parse_integers(instance_text);
      std::vector<Key> proposed = io::parse_integers(solution_text);
      std::string clause;
      if (!is_sorted_seq(proposed)) {
        clause = "isSorted";
      } else if (as_multiset(std::span<const Key>(proposed)) !=
                 as_multiset(std::span<const Key>(input))) {
        clause = "permutation";
      }
      return verify_verdict(out, clause);
    }
    if (config.problem == "topsort") {
      io::ParsedGraph parsed = io::parse_graph(instance_text);
      if (parsed.kind != io::GraphKind::Directed) {
        return usage_error(err, "topsort expects a directed graph (D)");
      }
      auto sequences = io::parse_vertex_sequences(solution_text);
      if (sequences.empty()) sequences.push_back({});
      bool ok = is_top_sorting(std::span<const Vertex>(sequences.front()),
                               parsed.digraph);
      return verify_verdict(out, ok ? "" : "isTopSorting");
    }
    if (config.problem == "euler" || config.problem == "trail") {
      io::ParsedGraph parsed = io::parse_graph(instance_text);
      if (parsed.kind != io::GraphKind::Undirected) {
        return usage_error(err, "euler expects an undirected graph (U)");
      }
      auto sequences = io::parse_vertex_sequences(solution_text);
      if (sequences.empty()) sequences.push_back({});
      return verify_verdict(
          out, euler_clause(std::span<const Vertex>(sequences.front()),
                            parsed.ugraph, config.problem == "euler"));
    }
    if (config.problem == "match") {
      io::MatchingInstance inst = io::parse_matching_instance(instance_text);
      MatchingResult couples = io::parse_matching_solution(solution_text);
      std::string clause;
      if (!is_injective(couples)) {
        clause = "isInjective";
      } else if (!is_valid_matching(couples, inst.proposers,
                                    inst.responders)) {
        clause = "isValid";
      } else if (!is_stable(couples, inst.proposers, inst.responders)) {
        clause = "isStable";
      }
      return verify_verdict(out, clause);
    }
    if (config.problem == "place") {
      PlacementInstance inst = io::parse_placement_instance(instance_text);
      MatchingResult placement = io::parse_matching_solution(solution_text);
      std::string clause;
      if (!is_injective(placement)) {
        clause = "isInjective";
      } else if (!is_valid_matching(placement, inst.preferences,
                                    vacancies_prefs(inst))) {
        clause = "isValid";
      } else if (!is_stable(placement, inst.preferences,
                            vacancies_prefs(inst))) {
        clause = "isStable";
      }
      return verify_verdict(out, clause);
    }
    return usage_error(err, "unknown problem '" + config.problem + "'");
  } catch (const io::ParseError& parse_error) {
    return usage_error(err, parse_error.what());
  }
}

int cmd_fuzz(const RunConfig& config, std::ostream& out) {
  fuzz::FuzzOptions options;
  options.seed = config.seed;
  options.cases = config.cases;
  options.mode = config.contracts;

  auto outcome = fuzz::fuzz_problem(config.problem, options);
  if (!outcome.has_value()) {
    out << "error: unknown problem '" << config.problem << "'\n";
    return 2;
  }
  if (outcome->has_value()) {
    out << "fuzz " << config.problem << ": divergence\n"
        << (*outcome)->render() << "\n"
        << "replay: fuzz --problem " << config.problem << " --seed "
        << (*outcome)->case_seed << " --cases 1\n";
    return 1;
  }
  out << "fuzz " << config.problem << ": " << config.cases
      << " cases, seed " << config.seed << ": OK\n";
  return 0;
}

int cmd_report(const RunConfig& config, std::ostream& out) {
  // Always runs in Log mode so failing predicates are tallied, not thrown.
  auto outcomes = fixtures::run_all(ContractMode::Log);

  out << std::left << std::setw(20) << "operation" << std::right
      << std::setw(10) << "checks" << std::setw(12) << "violations"
      << std::setw(12) << "time(ms)" << "\n";
  std::uint64_t total_checks = 0;
  std::size_t total_violations = 0;
  double total_ms = 0.0;
  for (const auto& outcome : outcomes) {
    total_checks += outcome.checks;
    total_violations += outcome.violations;
    total_ms += outcome.millis;
    out << std::left << std::setw(20) << outcome.name << std::right
        << std::setw(10) << outcome.checks << std::setw(12)
        << outcome.violations << std::setw(12) << std::fixed
        << std::setprecision(2) << outcome.millis << "\n";
  }
  out << std::left << std::setw(20) << "TOTAL" << std::right << std::setw(10)
      << total_checks << std::setw(12) << total_violations << std::setw(12)
      << std::fixed << std::setprecision(2) << total_ms << "\n";
  out << "counts are runtime contract evaluations; not comparable to any "
         "static verification metric\n";
  (void)config;
  return 0;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  faults::arm(config.fault);
  int code;
  if (config.command == "check") {
    code = cmd_check(config, out);
  } else if (config.command == "solve") {
    code = cmd_solve(config, out, err);
  } else if (config.command == "verify") {
    code = cmd_verify(config, out, err);
  } else if (config.command == "fuzz") {
    code = cmd_fuzz(config, out);
  } else if (config.command == "report") {
    code = cmd_report(config, out);
  } else {
    code = usage_error(err, "unknown command '" + config.command + "'");
  }
  faults::arm(faults::Fault::None);
  return code;
}

}  // namespace veralgo::cli
