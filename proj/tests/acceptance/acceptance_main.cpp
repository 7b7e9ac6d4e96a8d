// Acceptance suite: runs the five gate criteria and prints one line per
// criterion. Exit code 0 only when every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "veralgo/bst_set.hpp"
#include "veralgo/commands.hpp"
#include "veralgo/faults.hpp"
#include "veralgo/fixtures.hpp"
#include "veralgo/fuzz.hpp"
#include "veralgo/generators.hpp"
#include "veralgo/graphs.hpp"
#include "veralgo/matching.hpp"
#include "veralgo/max_heap.hpp"
#include "veralgo/numerics.hpp"
#include "veralgo/open_hash_set.hpp"
#include "veralgo/oracles.hpp"
#include "veralgo/rng.hpp"
#include "veralgo/search_sort.hpp"

using namespace veralgo;

namespace {

struct Gate {
  bool ok = true;
  std::string first_failure;

  void require(bool condition, const std::string& what) {
    if (ok && !condition) {
      ok = false;
      first_failure = what;
    }
  }
};

// ---------------------------------------------------------------- criterion 1

void criterion_fixtures(Gate& gate) {
  auto outcomes = fixtures::run_all(ContractMode::Assert);
  gate.require(outcomes.size() == 10, "expected 10 fixture groups");
  for (const auto& outcome : outcomes) {
    gate.require(outcome.passed, outcome.name + ": " + outcome.detail);
  }
}

// ---------------------------------------------------------------- criterion 2

void criterion_lemma_properties(Gate& gate) {
  constexpr int kCases = 200;

  {  // product of powers
    SeededRng rng(1001);
    for (int i = 0; i < kCases; ++i) {
      Rational x(rng.int_in(-9, 9), rng.int_in(1, 9));
      std::uint64_t a = rng.below(65);
      std::uint64_t b = rng.below(65);
      gate.require(
          power_naive(x, a) * power_naive(x, b) == power_naive(x, a + b),
          "product-of-powers failed");
    }
  }
  {  // sorting uniqueness
    SeededRng rng(1002);
    ContractContext ctx;
    for (int i = 0; i < kCases; ++i) {
      std::vector<Key> a = gen::random_keys(rng, 32, -40, 40);
      std::vector<Key> b = a;
      rng.shuffle(b);
      insertion_sort(ctx, a);
      std::sort(b.begin(), b.end());
      gate.require(a == b, "sorting-uniqueness failed");
    }
  }
  {  // heap max at top
    SeededRng rng(1003);
    for (int round = 0; round < 8; ++round) {
      ContractContext ctx;
      MaxHeap heap(ctx, 4);
      for (int step = 0; step < kCases / 4; ++step) {
        if (heap.is_empty() || rng.below(3) != 0) {
          heap.insert(rng.int_in(-99, 99));
        } else {
          heap.delete_max();
        }
        auto items = heap.items();
        for (Key k : items) {
          gate.require(k <= items.front(), "max-at-top failed");
        }
      }
    }
  }
  {  // hash set counting identity and full <=> no Nil cell
    SeededRng rng(1004);
    ContractContext ctx;
    OpenHashSet<Key> set(
        ctx, [](const Key& k) { return static_cast<std::size_t>(k / 3); }, 5);
    std::set<Key> model;
    for (int step = 0; step < 4 * kCases; ++step) {
      std::uint64_t roll = rng.below(10);
      if (roll < 5) {
        Key k = rng.int_in(0, 60);
        if (!model.contains(k)) {
          set.insert(k);
          model.insert(k);
        }
      } else if (roll < 8 && !model.empty()) {
        auto it = model.begin();
        std::advance(it,
                     static_cast<std::ptrdiff_t>(rng.below(model.size())));
        set.remove(*it);
        model.erase(it);
      } else {
        set.contains(rng.int_in(0, 60));
      }
      gate.require(set.counting_holds(), "counting identity failed");
      std::size_t nil_cells = 0;
      for (std::size_t p = 0; p < set.table_size(); ++p) {
        if (set.state_at(p) == CellState::Nil) ++nil_cells;
      }
      gate.require(set.full() == (nil_cells == 0),
                   "full <=> no-Nil failed");
    }
  }
  {  // element-set concatenation homomorphism
    SeededRng rng(1005);
    for (int i = 0; i < kCases; ++i) {
      std::vector<Key> s1 = gen::random_keys(rng, 16, -9, 9);
      std::vector<Key> s2 = gen::random_keys(rng, 16, -9, 9);
      std::vector<Key> joined = s1;
      joined.insert(joined.end(), s2.begin(), s2.end());
      std::set<Key> expected = as_set(std::span<const Key>(s1));
      auto other = as_set(std::span<const Key>(s2));
      expected.insert(other.begin(), other.end());
      gate.require(as_set(std::span<const Key>(joined)) == expected,
                   "concatenation homomorphism failed");
    }
  }
  {  // sorted-sequence uniqueness through the tree set
    SeededRng rng(1006);
    for (int i = 0; i < kCases; ++i) {
      ContractContext ctx;
      BstSet tree(ctx);
      std::set<Key> model;
      std::size_t n = rng.below(24);
      for (std::size_t j = 0; j < n; ++j) {
        Key k = rng.int_in(-30, 30);
        tree.insert(k);
        model.insert(k);
      }
      std::vector<Key> seq = tree.as_sorted_vector();
      gate.require(is_strictly_increasing(std::span<const Key>(seq)),
                   "tree sequence not strictly increasing");
      gate.require(seq == std::vector<Key>(model.begin(), model.end()),
                   "tree sorted-sequence uniqueness failed");
    }
  }
  {  // zero indegree existence and subgraph acyclicity
    SeededRng rng(1007);
    for (int i = 0; i < kCases; ++i) {
      DiGraph g = gen::random_layered_dag(rng, 7);
      gate.require(is_acyclic(g), "layered graph not acyclic");
      if (!g.vertices.empty()) {
        bool found = false;
        for (Vertex v : g.vertices) {
          if (!has_incoming_edges(g, v)) found = true;
        }
        gate.require(found, "no zero-indegree vertex in an acyclic graph");
      }
      for (Vertex v : g.vertices) {
        gate.require(is_acyclic(remove_vertex(v, g)),
                     "vertex removal broke acyclicity");
      }
    }
  }
  {  // Euler trail degree parity
    SeededRng rng(1008);
    for (int i = 0; i < kCases; ++i) {
      auto [g, trail] = gen::random_trail_graph(rng, 6, 10);
      gate.require(is_euler_trail(trail, g), "constructed trail rejected");
      Vertex first = trail.front();
      Vertex last = trail.back();
      for (const auto& [v, neighbours] : g.adj) {
        bool odd = neighbours.size() % 2 != 0;
        gate.require(odd == ((v == first) != (v == last)),
                     "trail degree parity failed");
      }
    }
  }
  {  // the closed-trail search returns to its start
    SeededRng rng(1009);
    ContractContext ctx;  // assert mode: the search itself asserts closure
    for (int i = 0; i < kCases; ++i) {
      UGraph g = gen::random_eulerian_graph(rng, 7, 12);
      std::vector<Vertex> circuit = find_euler_circuit(ctx, g);
      gate.require(!circuit.empty() && circuit.front() == circuit.back(),
                   "search did not return to its start");
    }
  }
}

// ---------------------------------------------------------------- criterion 3

void criterion_oracle_equivalence(Gate& gate) {
  {  // exhaustive agreement on every digraph with up to 4 labelled vertices
    for (int n = 0; n <= 4; ++n) {
      std::vector<Edge> all_pairs;
      for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) all_pairs.push_back(Edge{u, v});
      }
      for (std::uint64_t mask = 0; mask < (1ull << all_pairs.size());
           ++mask) {
        DiGraph g;
        for (Vertex v = 1; v <= n; ++v) g.vertices.insert(v);
        for (std::size_t bit = 0; bit < all_pairs.size(); ++bit) {
          if (mask & (1ull << bit)) g.edges.insert(all_pairs[bit]);
        }
        bool by_definition = true;
        for (Vertex v : g.vertices) {
          if (oracles::exists_simple_path(g, v, v)) {
            by_definition = false;
            break;
          }
        }
        if (is_acyclic(g) != by_definition) {
          gate.require(false, "acyclicity mismatch on |V|=" +
                                  std::to_string(n) + " mask " +
                                  std::to_string(mask));
          return;
        }
      }
    }
  }

  fuzz::FuzzOptions solver_opt;
  solver_opt.cases = 100;
  for (const char* problem : {"topsort", "match", "place", "euler"}) {
    auto outcome = fuzz::fuzz_problem(problem, solver_opt);
    gate.require(outcome.has_value() && !outcome->has_value(),
                 std::string(problem) + " solver/oracle disagreement");
  }

  fuzz::FuzzOptions container_opt;
  container_opt.cases = 10;
  container_opt.commands_per_case = 64;  // 640 commands per container
  gate.require(!fuzz::fuzz_heap(container_opt).has_value(),
               "heap model divergence");
  gate.require(!fuzz::fuzz_hash_set(container_opt).has_value(),
               "hash-set model divergence");
  gate.require(!fuzz::fuzz_tree_set(container_opt).has_value(),
               "tree-set model divergence");
}

// ---------------------------------------------------------------- criterion 4

// A transcript of everything functional: fixture verdicts, solver outputs,
// fuzz outcomes. Identical across contract modes when contracts are sound.
std::string functional_transcript(ContractMode mode) {
  std::ostringstream out;
  for (const auto& outcome : fixtures::run_all(mode)) {
    out << outcome.name << "=" << (outcome.passed ? "pass" : "fail") << ";";
  }

  ContractContext ctx(mode);
  SeededRng rng(77);
  for (int i = 0; i < 25; ++i) {
    DiGraph g = gen::random_layered_dag(rng, 7);
    auto order = topsort(ctx, g);
    out << "topsort=";
    if (order.has_value()) {
      for (Vertex v : *order) out << v << ",";
    } else {
      out << "cycle";
    }
    out << ";";

    auto [men, women] = gen::random_matching_instance(rng, 5, 5);
    for (const auto& [m, w] : stable_matching(ctx, men, women)) {
      out << m << "->" << w << ",";
    }
    out << ";";

    UGraph u = gen::random_eulerian_graph(rng, 6, 10);
    for (Vertex v : find_euler_circuit(ctx, u)) out << v << ",";
    out << ";";
  }

  fuzz::FuzzOptions opt;
  opt.cases = 8;
  opt.mode = mode;
  for (const char* problem :
       {"heap", "hashset", "treeset", "match", "topsort", "euler"}) {
    auto outcome = fuzz::fuzz_problem(problem, opt);
    out << problem << "="
        << (outcome.has_value() && !outcome->has_value() ? "ok" : "diverged")
        << ";";
  }
  return out.str();
}

void criterion_mode_soundness(Gate& gate) {
  std::string off = functional_transcript(ContractMode::Off);
  std::string asserting = functional_transcript(ContractMode::Assert);
  std::string logging = functional_transcript(ContractMode::Log);
  gate.require(off == asserting, "Off and Assert transcripts differ");
  gate.require(asserting == logging, "Assert and Log transcripts differ");

  // The report path: Log mode, no violations, every group evaluates checks.
  auto outcomes = fixtures::run_all(ContractMode::Log);
  for (const auto& outcome : outcomes) {
    gate.require(outcome.violations == 0,
                 outcome.name + " logged a violation");
    gate.require(outcome.checks > 0, outcome.name + " evaluated no checks");
  }

  std::ostringstream report;
  cli::RunConfig config;
  config.command = "report";
  gate.require(cli::cmd_report(config, report) == 0, "report exit code");
  gate.require(report.str().find("TOTAL") != std::string::npos,
               "report missing totals row");
}

// ---------------------------------------------------------------- criterion 5

void criterion_fault_sensitivity(Gate& gate) {
  fuzz::FuzzOptions opt;
  opt.cases = 80;

  struct Probe {
    faults::Fault fault;
    std::function<bool()> caught;
    const char* name;
  };
  const std::vector<Probe> probes = {
      {faults::Fault::HeapChildComparisonFlipped,
       [&] { return fuzz::fuzz_heap(opt).has_value(); },
       "heap child comparison flipped"},
      {faults::Fault::TombstoneWrittenAsNil,
       [&] { return fuzz::fuzz_hash_set(opt).has_value(); },
       "tombstone written as Nil"},
      {faults::Fault::BstDeleteSkipsRestore,
       [&] { return fuzz::fuzz_tree_set(opt).has_value(); },
       "tree delete skips restore"},
      {faults::Fault::MatchingSkipsRejection,
       [&] { return fuzz::fuzz_matching(opt).has_value(); },
       "matching skips rejection"},
      {faults::Fault::EulerSpliceOffByOne,
       [&] { return fuzz::fuzz_euler(opt).has_value(); },
       "circuit splice off by one"},
  };
  for (const auto& probe : probes) {
    faults::ScopedFault armed(probe.fault);
    gate.require(probe.caught(),
                 std::string(probe.name) + " was not detected");
  }
}

int run_criterion(int index, const std::string& name,
                  const std::function<void(Gate&)>& body) {
  Gate gate;
  auto begin = std::chrono::steady_clock::now();
  body(gate);
  auto end = std::chrono::steady_clock::now();
  double seconds = std::chrono::duration<double>(end - begin).count();
  std::ostringstream line;
  line << (gate.ok ? "[PASS] " : "[FAIL] ") << index << ". " << name << " ("
       << std::fixed << std::setprecision(1) << seconds << "s)";
  if (!gate.ok) line << " -- " << gate.first_failure;
  std::cout << line.str() << "\n";
  return gate.ok ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  failures += run_criterion(1, "fixture suite, exact values",
                            criterion_fixtures);
  failures += run_criterion(2, "lemma property suite, 200+ cases each",
                            criterion_lemma_properties);
  failures += run_criterion(3, "oracle equivalence and model fuzzing",
                            criterion_oracle_equivalence);
  failures += run_criterion(4, "contract-mode soundness",
                            criterion_mode_soundness);
  failures += run_criterion(5, "fault-injection sensitivity",
                            criterion_fault_sensitivity);
  if (failures == 0) {
    std::cout << "acceptance: all 5 criteria passed\n";
  } else {
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
  }
  return failures == 0 ? 0 : 1;
}
