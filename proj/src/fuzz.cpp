#include "veralgo/fuzz.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "veralgo/bst_set.hpp"
#include "veralgo/generators.hpp"
#include "veralgo/graphs.hpp"
#include "veralgo/matching.hpp"
#include "veralgo/max_heap.hpp"
#include "veralgo/open_hash_set.hpp"
#include "veralgo/oracles.hpp"
#include "veralgo/rng.hpp"

namespace veralgo::fuzz {

namespace {

using oracles::CmdAsSortedSeq;
using oracles::CmdContains;
using oracles::CmdDeleteMax;
using oracles::CmdGetMax;
using oracles::CmdInsert;
using oracles::CmdMax;
using oracles::CmdMin;
using oracles::CmdRemove;
using oracles::Command;
using oracles::Observation;

Divergence make_divergence(std::size_t index, std::uint64_t case_seed,
                           std::vector<std::string> trace,
                           std::string detail) {
  Divergence d;
  d.case_index = index;
  d.case_seed = case_seed;
  d.trace = std::move(trace);
  d.detail = std::move(detail);
  return d;
}

std::string describe_matching(const MatchingResult& m) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) out << ", ";
    out << k << ":" << v;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string describe_prefs(const PrefTable& t) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [id, list] : t.prefs) {
    if (!first) out << ", ";
    out << id << ":[";
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i > 0) out << " ";
      out << list[i];
    }
    out << "]";
    first = false;
  }
  out << "}";
  return out.str();
}

std::string describe_digraph(const DiGraph& g) {
  std::ostringstream out;
  out << "V={";
  bool first = true;
  for (Vertex v : g.vertices) {
    if (!first) out << ",";
    out << v;
    first = false;
  }
  out << "} E={";
  first = true;
  for (const auto& [u, v] : g.edges) {
    if (!first) out << ",";
    out << "(" << u << "," << v << ")";
    first = false;
  }
  out << "}";
  return out.str();
}

std::string describe_ugraph(const UGraph& g) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [v, nb] : g.adj) {
    if (!first) out << ", ";
    out << v << ":{";
    bool inner_first = true;
    for (Vertex w : nb) {
      if (!inner_first) out << ",";
      out << w;
      inner_first = false;
    }
    out << "}";
    first = false;
  }
  out << "}";
  return out.str();
}

std::string describe_sequence(const std::vector<Vertex>& s) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out << " ";
    out << s[i];
  }
  out << "]";
  return out.str();
}

// One container case: applies random legal commands to the container and
// the model, comparing observations and the abstract contents after every
// command. Returns a failure detail or empty string.
template <typename StepContainer, typename StepModel, typename PickCommand,
          typename StateMatches>
std::optional<Divergence> drive_case(std::size_t index,
                                     std::uint64_t case_seed,
                                     std::size_t commands, SeededRng& rng,
                                     PickCommand&& pick,
                                     StepContainer&& step_container,
                                     StepModel&& step_model,
                                     StateMatches&& state_matches) {
  std::vector<std::string> trace;
  for (std::size_t j = 0; j < commands; ++j) {
    Command cmd = pick(rng);
    trace.push_back(oracles::to_string(cmd));
    Observation expected = step_model(cmd);
    Observation actual;
    try {
      actual = step_container(cmd);
    } catch (const ContractViolation& violation) {
      return make_divergence(index, case_seed, std::move(trace),
                             std::string("contract violation: ") +
                                 violation.what());
    }
    if (!(actual == expected)) {
      return make_divergence(index, case_seed, std::move(trace),
                             "observation mismatch: expected " +
                                 oracles::to_string(expected) + ", got " +
                                 oracles::to_string(actual));
    }
    if (auto why = state_matches(); !why.empty()) {
      return make_divergence(index, case_seed, std::move(trace),
                             std::move(why));
    }
  }
  return std::nullopt;
}

}  // namespace

std::string Divergence::render() const {
  std::ostringstream out;
  out << "case " << case_index << " (seed " << case_seed << "): " << detail
      << "\n";
  out << "trace:";
  for (const std::string& step : trace) {
    out << "\n  " << step;
  }
  return out.str();
}

std::optional<Divergence> fuzz_heap(const FuzzOptions& opt) {
  for (std::size_t i = 0; i < opt.cases; ++i) {
    std::uint64_t case_seed = opt.seed + i;
    SeededRng rng(case_seed);
    ContractContext ctx(opt.mode);
    MaxHeap heap(ctx, 4);
    oracles::HeapModel model;

    auto pick = [&](SeededRng& r) -> Command {
      if (!model.contents.empty() && r.below(3) == 0) {
        return r.coin() ? Command(CmdDeleteMax{}) : Command(CmdGetMax{});
      }
      return CmdInsert{r.int_in(-20, 20)};
    };
    auto step_container = [&](const Command& cmd) {
      Observation obs;
      if (const auto* ins = std::get_if<CmdInsert>(&cmd)) {
        heap.insert(ins->value);
      } else if (std::holds_alternative<CmdDeleteMax>(cmd)) {
        obs.value = heap.delete_max();
      } else {
        obs.value = heap.get_max();
      }
      return obs;
    };
    auto step_model = [&](const Command& cmd) {
      return oracles::reference_model_step(model, cmd);
    };
    auto state_matches = [&]() -> std::string {
      if (!heap.invariant_holds()) return "heap invariant broken";
      if (heap.elems() != model.contents) {
        return "heap contents diverge from model";
      }
      auto items = heap.items();
      for (Key k : items) {
        if (!items.empty() && k > items.front()) {
          return "max is not at the top";
        }
      }
      return "";
    };

    auto divergence = drive_case(i, case_seed, opt.commands_per_case, rng,
                                 pick, step_container, step_model,
                                 state_matches);
    if (divergence) return divergence;
  }
  return std::nullopt;
}

std::optional<Divergence> fuzz_hash_set(const FuzzOptions& opt) {
  for (std::size_t i = 0; i < opt.cases; ++i) {
    std::uint64_t case_seed = opt.seed + i;
    SeededRng rng(case_seed);
    ContractContext ctx(opt.mode);
    // Tiny table and a clustering hash so rehashing and tombstone reuse
    // happen constantly.
    OpenHashSet<Key> set(
        ctx,
        [](const Key& k) {
          return static_cast<std::size_t>(std::llabs(k) / 4);
        },
        5);
    oracles::SetModel model;

    auto pick = [&](SeededRng& r) -> Command {
      std::uint64_t roll = r.below(10);
      if (roll < 4) {
        // Fresh value; duplicate inserts are a contract error by design.
        for (int tries = 0; tries < 64; ++tries) {
          Key k = r.int_in(0, 30);
          if (!model.contents.contains(k)) return CmdInsert{k};
        }
        return CmdContains{r.int_in(0, 30)};
      }
      if (roll < 7 && !model.contents.empty()) {
        std::size_t at = r.below(model.contents.size());
        auto it = model.contents.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(at));
        return CmdRemove{*it};
      }
      return CmdContains{r.int_in(0, 30)};
    };
    auto step_container = [&](const Command& cmd) {
      Observation obs;
      if (const auto* ins = std::get_if<CmdInsert>(&cmd)) {
        set.insert(ins->value);
      } else if (const auto* rem = std::get_if<CmdRemove>(&cmd)) {
        set.remove(rem->value);
      } else if (const auto* has = std::get_if<CmdContains>(&cmd)) {
        obs.flag = set.contains(has->value);
      }
      return obs;
    };
    auto step_model = [&](const Command& cmd) {
      return oracles::reference_model_step(model, oracles::ContainerKind::HashSet,
                                           cmd);
    };
    auto state_matches = [&]() -> std::string {
      if (!set.counting_holds()) return "counting identity broken";
      if (!set.invariant_holds()) return "probe-chain invariant broken";
      std::size_t nil_cells = 0;
      for (std::size_t p = 0; p < set.table_size(); ++p) {
        if (set.state_at(p) == CellState::Nil) ++nil_cells;
      }
      if (set.full() != (nil_cells == 0)) {
        return "full() disagrees with Nil census";
      }
      std::set<Key> actual = set.elems();
      if (actual != model.contents) return "set contents diverge from model";
      return "";
    };

    auto divergence = drive_case(i, case_seed, opt.commands_per_case, rng,
                                 pick, step_container, step_model,
                                 state_matches);
    if (divergence) return divergence;
  }
  return std::nullopt;
}

std::optional<Divergence> fuzz_tree_set(const FuzzOptions& opt) {
  for (std::size_t i = 0; i < opt.cases; ++i) {
    std::uint64_t case_seed = opt.seed + i;
    SeededRng rng(case_seed);
    ContractContext ctx(opt.mode);
    BstSet set(ctx);
    oracles::SetModel model;

    auto pick = [&](SeededRng& r) -> Command {
      std::uint64_t roll = r.below(10);
      if (roll < 4) return CmdInsert{r.int_in(-15, 15)};
      if (roll < 6) return CmdRemove{r.int_in(-15, 15)};
      if (roll < 8) return CmdContains{r.int_in(-15, 15)};
      if (!model.contents.empty()) {
        if (roll == 8) return r.coin() ? Command(CmdMin{}) : Command(CmdMax{});
        return CmdAsSortedSeq{};
      }
      return CmdContains{r.int_in(-15, 15)};
    };
    auto step_container = [&](const Command& cmd) {
      Observation obs;
      if (const auto* ins = std::get_if<CmdInsert>(&cmd)) {
        set.insert(ins->value);
      } else if (const auto* rem = std::get_if<CmdRemove>(&cmd)) {
        set.remove(rem->value);
      } else if (const auto* has = std::get_if<CmdContains>(&cmd)) {
        obs.flag = set.contains(has->value);
      } else if (std::holds_alternative<CmdMin>(cmd)) {
        obs.value = set.min();
      } else if (std::holds_alternative<CmdMax>(cmd)) {
        obs.value = set.max();
      } else if (std::holds_alternative<CmdAsSortedSeq>(cmd)) {
        obs.sequence = set.as_sorted_vector();
      }
      return obs;
    };
    auto step_model = [&](const Command& cmd) {
      return oracles::reference_model_step(model, oracles::ContainerKind::TreeSet,
                                           cmd);
    };
    auto state_matches = [&]() -> std::string {
      if (!set.invariant_holds()) return "in-order sequence not strictly increasing";
      if (set.elems() != model.contents) return "set contents diverge from model";
      return "";
    };

    auto divergence = drive_case(i, case_seed, opt.commands_per_case, rng,
                                 pick, step_container, step_model,
                                 state_matches);
    if (divergence) return divergence;
  }
  return std::nullopt;
}

std::optional<Divergence> fuzz_matching(const FuzzOptions& opt) {
  for (std::size_t i = 0; i < opt.cases; ++i) {
    std::uint64_t case_seed = opt.seed + i;
    SeededRng rng(case_seed);
    ContractContext ctx(opt.mode);
    auto [men, women] = gen::random_matching_instance(rng, 4, 4);
    std::string instance =
        "men " + describe_prefs(men) + " women " + describe_prefs(women);

    MatchingResult couples;
    try {
      couples = stable_matching(ctx, men, women);
    } catch (const ContractViolation& violation) {
      return make_divergence(i, case_seed, {instance},
                             std::string("contract violation: ") +
                                 violation.what());
    }
    if (!is_valid_matching(couples, men, women) ||
        !is_stable(couples, men, women)) {
      return make_divergence(i, case_seed, {instance},
                             "output not valid+stable: " +
                                 describe_matching(couples));
    }
    auto accepted = oracles::all_stable_matchings(men, women);
    if (!accepted.contains(couples)) {
      return make_divergence(
          i, case_seed, {instance},
          "output " + describe_matching(couples) +
              " not in the oracle's stable set (size " +
              std::to_string(accepted.size()) + ")");
    }
  }
  return std::nullopt;
}

std::optional<Divergence> fuzz_placement(const FuzzOptions& opt) {
  for (std::size_t i = 0; i < opt.cases; ++i) {
    std::uint64_t case_seed = opt.seed + i;
    SeededRng rng(case_seed);
    ContractContext ctx(opt.mode);
    PlacementInstance inst = gen::random_placement_instance(rng, 4, 4);
    std::string instance = "teachers " + describe_sequence(inst.teachers) +
                           " prefs " + describe_prefs(inst.preferences) +
                           " initial " + describe_matching(inst.initial);

    MatchingResult placement;
    try {
      placement = teachers_placement(ctx, inst);
    } catch (const ContractViolation& violation) {
      return make_divergence(i, case_seed, {instance},
                             std::string("contract violation: ") +
                                 violation.what());
    }
    // The reduction must land in the stable set of the reduced instance.
    auto accepted =
        oracles::all_stable_matchings(inst.preferences, vacancies_prefs(inst));
    if (!accepted.contains(placement)) {
      return make_divergence(i, case_seed, {instance},
                             "placement " + describe_matching(placement) +
                                 " not stable for the reduced tables");
    }
  }
  return std::nullopt;
}

std::optional<Divergence> fuzz_topsort(const FuzzOptions& opt) {
  for (std::size_t i = 0; i < opt.cases; ++i) {
    std::uint64_t case_seed = opt.seed + i;
    SeededRng rng(case_seed);
    ContractContext ctx(opt.mode);
    DiGraph g = gen::random_layered_dag(rng, 8);

    std::optional<std::vector<Vertex>> order;
    try {
      order = topsort(ctx, g);
    } catch (const ContractViolation& violation) {
      return make_divergence(i, case_seed, {describe_digraph(g)},
                             std::string("contract violation: ") +
                                 violation.what());
    }
    if (!order.has_value()) {
      return make_divergence(i, case_seed, {describe_digraph(g)},
                             "cycle reported on an acyclic input");
    }
    if (!is_top_sorting(std::span<const Vertex>(*order), g)) {
      return make_divergence(i, case_seed, {describe_digraph(g)},
                             "output rejected by is_top_sorting: " +
                                 describe_sequence(*order));
    }
    auto accepted = oracles::all_topological_orders(g);
    if (!accepted.contains(*order)) {
      return make_divergence(i, case_seed, {describe_digraph(g)},
                             "output not in the oracle's accepted set");
    }
  }
  return std::nullopt;
}

std::optional<Divergence> fuzz_euler(const FuzzOptions& opt) {
  for (std::size_t i = 0; i < opt.cases; ++i) {
    std::uint64_t case_seed = opt.seed + i;
    SeededRng rng(case_seed);
    ContractContext ctx(opt.mode);
    UGraph g = gen::random_eulerian_graph(rng, 6, 8);

    std::vector<Vertex> circuit;
    try {
      circuit = find_euler_circuit(ctx, g);
    } catch (const ContractViolation& violation) {
      return make_divergence(i, case_seed, {describe_ugraph(g)},
                             std::string("contract violation: ") +
                                 violation.what());
    }
    if (g.edge_count() > 0 &&
        !is_euler_circuit(std::span<const Vertex>(circuit), g)) {
      return make_divergence(i, case_seed, {describe_ugraph(g)},
                             "output rejected by is_euler_circuit: " +
                                 describe_sequence(circuit));
    }
    auto reference = oracles::exhaustive_euler_circuit(g);
    bool solver_found = g.edge_count() == 0 || !circuit.empty();
    if (reference.has_value() != solver_found) {
      return make_divergence(i, case_seed, {describe_ugraph(g)},
                             "existence disagrees with exhaustive search");
    }
  }
  return std::nullopt;
}

std::optional<std::optional<Divergence>> fuzz_problem(
    const std::string& problem, const FuzzOptions& opt) {
  if (problem == "heap") return fuzz_heap(opt);
  if (problem == "hashset") return fuzz_hash_set(opt);
  if (problem == "treeset") return fuzz_tree_set(opt);
  if (problem == "match") return fuzz_matching(opt);
  if (problem == "place") return fuzz_placement(opt);
  if (problem == "topsort") return fuzz_topsort(opt);
  if (problem == "euler") return fuzz_euler(opt);
  return std::nullopt;
}

}  // namespace veralgo::fuzz
