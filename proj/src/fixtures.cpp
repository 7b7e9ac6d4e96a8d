#include "veralgo/fixtures.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "veralgo/bst_set.hpp"
#include "veralgo/graphs.hpp"
#include "veralgo/instance_io.hpp"
#include "veralgo/matching.hpp"
#include "veralgo/max_heap.hpp"
#include "veralgo/numerics.hpp"
#include "veralgo/open_hash_set.hpp"
#include "veralgo/search_sort.hpp"

namespace veralgo::fixtures {

namespace {

struct Recorder {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (ok && !condition) {
      ok = false;
      detail = what;
    }
  }
};

void fixture_division(ContractContext& ctx, Recorder& r) {
  DivResult a = div_euclid(ctx, 15, 6);
  r.expect(a == DivResult{2, 3}, "div(15,6) != (2,3)");
  DivResult b = div_euclid(ctx, 0, 7);
  r.expect(b == DivResult{0, 0}, "div(0,7) != (0,0)");
  DivResult c = div_euclid(ctx, 41, 7);
  r.expect(c == DivResult{5, 6}, "div(41,7) != (5,6)");
}

void fixture_power(ContractContext& ctx, Recorder& r) {
  r.expect(power_dc(ctx, Rational(2), 5) == Rational(32), "2^5 != 32");
  r.expect(power_dc(ctx, Rational(-2), 2) == Rational(4), "(-2)^2 != 4");
  r.expect(power_dc(ctx, Rational(-2), 1) == Rational(-2), "(-2)^1 != -2");
  r.expect(power_dc(ctx, Rational(-2), 0) == Rational(1), "(-2)^0 != 1");
  r.expect(power_dc(ctx, Rational(0), 0) == Rational(1), "0^0 != 1");
  r.expect(power_naive(Rational(3, 2), 3) == Rational(27, 8),
           "(3/2)^3 != 27/8");
}

void fixture_binary_search(ContractContext& ctx, Recorder& r) {
  std::vector<Key> a{1, 4, 4, 6, 8};
  auto id1 = binary_search_seq(ctx, a, 6);
  r.expect(id1.has_value() && *id1 == 3, "search 6 != index 3");
  auto id2 = binary_search_seq(ctx, a, 3);
  r.expect(!id2.has_value(), "search 3 should miss");
  auto id3 = binary_search_seq(ctx, a, 4);
  r.expect(id3.has_value() && (*id3 == 1 || *id3 == 2),
           "search 4 not in {1,2}");
}

void fixture_insertion_sort(ContractContext& ctx, Recorder& r) {
  std::vector<Key> a{9, 4, 6, 3, 8};
  insertion_sort(ctx, a);
  r.expect(a == std::vector<Key>({3, 4, 6, 8, 9}), "sort simple mismatch");

  std::vector<Key> b{9, 3, 6, 9};
  insertion_sort(ctx, b);
  r.expect(b == std::vector<Key>({3, 6, 9, 9}), "sort with dups mismatch");

  std::vector<Key> c;
  insertion_sort(ctx, c);
  r.expect(c.empty(), "sort of empty not empty");
}

void fixture_priority_queue(ContractContext& ctx, Recorder& r) {
  MaxHeap h(ctx);
  r.expect(h.is_empty(), "fresh heap not empty");
  h.insert(2);
  h.insert(5);
  h.insert(1);
  h.insert(1);
  r.expect(h.elems() == std::multiset<Key>({1, 1, 2, 5}),
           "contents after inserts mismatch");
  r.expect(h.delete_max() == 5, "1st delete-max != 5");
  r.expect(h.delete_max() == 2, "2nd delete-max != 2");
  r.expect(h.delete_max() == 1, "3rd delete-max != 1");
  r.expect(h.delete_max() == 1, "4th delete-max != 1");
  r.expect(h.is_empty(), "heap not empty at the end");

  MaxHeap grower(ctx, 10);
  for (Key k = 0; k < 11; ++k) grower.insert(k);
  r.expect(grower.capacity() == 20, "capacity after growth != 20");
  r.expect(grower.size() == 11, "size after 11 inserts != 11");
}

void fixture_hash_set(ContractContext& ctx, Recorder& r) {
  OpenHashSet<std::string> h(
      ctx, [](const std::string& s) { return s.size(); });
  r.expect(h.elems().empty(), "fresh set not empty");
  h.insert("Hello");
  r.expect(h.elems() == std::set<std::string>({"Hello"}),
           "contents after first insert mismatch");
  h.insert("World");
  r.expect(h.elems() == std::set<std::string>({"Hello", "World"}),
           "contents after second insert mismatch");
  r.expect(h.contains("Hello"), "contains(Hello) false");
  r.expect(!h.contains("ANSI"), "contains(ANSI) true");
  h.remove("Hello");
  r.expect(h.elems() == std::set<std::string>({"World"}),
           "contents after delete mismatch");
  r.expect(!h.contains("Hello"), "contains(Hello) true after delete");
}

void fixture_tree_set(ContractContext& ctx, Recorder& r) {
  BstSet s(ctx);
  s.insert(2);
  s.insert(5);
  s.insert(1);
  s.insert(4);
  s.insert(4);
  r.expect(s.as_sorted_vector() == std::vector<Key>({1, 2, 4, 5}),
           "in-order sequence mismatch");
  r.expect(s.min() == 1, "min != 1");
  r.expect(s.max() == 5, "max != 5");
  s.remove(5);
  r.expect(s.elems() == std::set<Key>({1, 2, 4}), "contents after delete(5)");
}

void fixture_stable_matching(ContractContext& ctx, Recorder& r) {
  {
    PrefTable men{{{1, {1, 2}}, {2, {1, 2}}}};
    PrefTable women{{{1, {1}}, {2, {2}}}};
    MatchingResult couples = stable_matching(ctx, men, women);
    r.expect(couples == MatchingResult({{1, 1}, {2, 2}}),
             "matching 1 mismatch");
  }
  {
    PrefTable men{{{1, {2, 1}}, {2, {1, 2}}}};
    PrefTable women{{{1, {1, 2}}, {2, {2, 1}}}};
    MatchingResult couples = stable_matching(ctx, men, women);
    MatchingResult accepted_a{{1, 2}, {2, 1}};
    MatchingResult accepted_b{{1, 1}, {2, 2}};
    r.expect(couples == accepted_a || couples == accepted_b,
             "matching 2 outside accepted set");
    r.expect(couples == accepted_a, "matching 2 deterministic outcome");
  }
  {
    PrefTable men{{{1, {1, 2}}, {2, {1}}}};
    PrefTable women{{{1, {1, 2}}, {2, {2, 1}}}};
    MatchingResult couples = stable_matching(ctx, men, women);
    MatchingResult accepted_a{{1, 2}, {2, 1}};
    MatchingResult accepted_b{{1, 1}};
    r.expect(couples == accepted_a || couples == accepted_b,
             "matching 3 outside accepted set");
    r.expect(is_stable(couples, men, women), "matching 3 not stable");
  }
  {
    std::vector<AgentId> teachers{1, 2, 3};
    r.expect(move_to_head(ctx, teachers, 3) ==
                 std::vector<AgentId>({3, 1, 2}),
             "moveToHead mismatch");
  }
  {
    PlacementInstance inst;
    inst.vacancies = {1, 2};
    inst.teachers = {1, 2, 3};
    inst.preferences = PrefTable{{{1, {2, 1}}, {2, {1, 2}}, {3, {2}}}};
    inst.initial = {{1, 1}};
    PrefTable expected_vacancy_prefs{{{1, {1, 2, 3}}, {2, {1, 2, 3}}}};
    r.expect(vacancies_prefs(inst) == expected_vacancy_prefs,
             "vacancy preferences 1 mismatch");
    MatchingResult placement = teachers_placement(ctx, inst);
    r.expect(placement == MatchingResult({{1, 2}, {2, 1}}),
             "placement 1 mismatch");
  }
  {
    PlacementInstance inst;
    inst.vacancies = {1, 2};
    inst.teachers = {1, 2, 3};
    inst.preferences = PrefTable{{{1, {2, 1}}, {2, {1, 2}}, {3, {2, 1}}}};
    inst.initial = {{3, 1}};
    PrefTable expected_vacancy_prefs{{{1, {3, 1, 2}}, {2, {1, 2, 3}}}};
    r.expect(vacancies_prefs(inst) == expected_vacancy_prefs,
             "vacancy preferences 2 mismatch");
    MatchingResult placement = teachers_placement(ctx, inst);
    r.expect(placement == MatchingResult({{1, 2}, {3, 1}}),
             "placement 2 mismatch");
  }
}

void fixture_topological_sort(ContractContext& ctx, Recorder& r) {
  {
    DiGraph g{{1, 2, 3}, {{1, 2}, {2, 3}}};
    auto order = topsort(ctx, g);
    r.expect(order.has_value() &&
                 *order == std::vector<Vertex>({1, 2, 3}),
             "chain order mismatch");
    r.expect(is_top_sorting(std::span<const Vertex>(*order), g),
             "chain order rejected by checker");
  }
  {
    DiGraph g{{1, 2, 3}, {{1, 2}, {1, 3}}};
    auto order = topsort(ctx, g);
    std::vector<Vertex> s1{1, 2, 3};
    std::vector<Vertex> s2{1, 3, 2};
    r.expect(order.has_value() && (*order == s1 || *order == s2),
             "branch order outside accepted set");
    r.expect(order.has_value() && *order == s1,
             "branch order deterministic outcome");
  }
  {
    DiGraph g{{1, 2}, {{1, 2}, {2, 1}}};
    r.expect(!topsort(ctx, g).has_value(), "2-cycle not detected");
    r.expect(!is_acyclic(g), "2-cycle judged acyclic");
  }
}

void fixture_euler_circuit(ContractContext& ctx, Recorder& r) {
  UGraph g{{{1, {2, 3}},
            {2, {1, 3}},
            {3, {1, 2, 4, 5}},
            {4, {3, 5}},
            {5, {3, 4}}}};
  r.expect(has_even_degrees(g), "fixture graph degrees not even");
  r.expect(is_connected(g), "fixture graph not connected");

  std::vector<Vertex> known{1, 2, 3, 4, 5, 3, 1};
  r.expect(is_euler_circuit(std::span<const Vertex>(known), g),
           "known circuit rejected");

  std::vector<Vertex> built = find_euler_circuit(ctx, g);
  r.expect(built.size() == 7, "built circuit length != 7");
  r.expect(is_euler_circuit(std::span<const Vertex>(built), g),
           "built circuit rejected");
  r.expect(built == known, "deterministic circuit mismatch");

  UGraph trail_graph{{{1, {2, 3}},
                      {2, {1, 3}},
                      {3, {1, 2, 4}},
                      {4, {3, 5}},
                      {5, {4}}}};
  std::vector<Vertex> trail{3, 2, 1, 3, 4, 5};
  r.expect(is_euler_trail(std::span<const Vertex>(trail), trail_graph),
           "known trail rejected");

  UGraph singleton{{{7, {}}}};
  std::vector<Vertex> loop = find_euler_circuit(ctx, singleton);
  r.expect(loop == std::vector<Vertex>({7}), "singleton circuit != [7]");
}

}  // namespace

std::vector<FixtureOutcome> run_all(ContractMode mode) {
  using Group = std::pair<const char*, void (*)(ContractContext&, Recorder&)>;
  const Group groups[] = {
      {"integer-division", fixture_division},
      {"power", fixture_power},
      {"binary-search", fixture_binary_search},
      {"insertion-sort", fixture_insertion_sort},
      {"priority-queue", fixture_priority_queue},
      {"hash-set", fixture_hash_set},
      {"tree-set", fixture_tree_set},
      {"stable-matching", fixture_stable_matching},
      {"topological-sort", fixture_topological_sort},
      {"euler-circuit", fixture_euler_circuit},
  };

  std::vector<FixtureOutcome> outcomes;
  for (const auto& [name, fn] : groups) {
    FixtureOutcome outcome;
    outcome.name = name;
    ContractContext ctx(mode);
    Recorder recorder;
    auto begin = std::chrono::steady_clock::now();
    try {
      fn(ctx, recorder);
      outcome.passed = recorder.ok;
      outcome.detail = recorder.detail;
    } catch (const ContractViolation& violation) {
      outcome.passed = false;
      outcome.detail = violation.what();
    }
    auto end = std::chrono::steady_clock::now();
    outcome.millis =
        std::chrono::duration<double, std::milli>(end - begin).count();
    outcome.checks = ctx.checks_evaluated();
    outcome.violations = ctx.violations().size();
    if (outcome.passed && !ctx.violations().empty()) {
      outcome.passed = false;
      outcome.detail = "logged violation: " + ctx.violations().front().label;
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

}  // namespace veralgo::fixtures
