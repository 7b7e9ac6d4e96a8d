#include <doctest.h>

#include <vector>

#include "veralgo/generators.hpp"
#include "veralgo/matching.hpp"
#include "veralgo/oracles.hpp"
#include "veralgo/rng.hpp"

using namespace veralgo;

TEST_CASE("precedes") {
  std::vector<AgentId> s{2, 1};
  CHECK(precedes(2, 1, s));
  std::vector<AgentId> t{1, 2};
  CHECK_FALSE(precedes(1, 1, t));
  CHECK_FALSE(precedes(3, 1, t));
}

TEST_CASE("stability checker on pinned instances") {
  PrefTable men{{{1, {1, 2}}, {2, {1, 2}}}};
  PrefTable women{{{1, {1}}, {2, {2}}}};
  CHECK(is_stable(MatchingResult{{1, 1}, {2, 2}}, men, women));

  CHECK(is_stable(MatchingResult{}, PrefTable{}, PrefTable{}));

  PrefTable men2{{{1, {1, 2}}, {2, {2, 1}}}};
  PrefTable women2{{{1, {1, 2}}, {2, {2, 1}}}};
  MatchingResult crossed{{1, 2}, {2, 1}};
  // Mutual first choices 1-1 and 2-2 are split up, so both pairs block.
  CHECK(is_blocking_pair(1, 1, crossed, men2, women2));
  CHECK_FALSE(is_stable(crossed, men2, women2));
}

TEST_CASE("deferred acceptance on the three pinned instances") {
  ContractContext ctx;
  {
    PrefTable men{{{1, {1, 2}}, {2, {1, 2}}}};
    PrefTable women{{{1, {1}}, {2, {2}}}};
    CHECK(stable_matching(ctx, men, women) ==
          MatchingResult({{1, 1}, {2, 2}}));
  }
  {
    PrefTable men{{{1, {2, 1}}, {2, {1, 2}}}};
    PrefTable women{{{1, {1, 2}}, {2, {2, 1}}}};
    MatchingResult couples = stable_matching(ctx, men, women);
    CHECK(couples == MatchingResult({{1, 2}, {2, 1}}));
    CHECK(is_stable(couples, men, women));
  }
  {
    // Proposer 1 and responder 1 are mutual first choices, so every stable
    // matching pairs them and leaves proposer 2 unmatched.
    PrefTable men{{{1, {1, 2}}, {2, {1}}}};
    PrefTable women{{{1, {1, 2}}, {2, {2, 1}}}};
    MatchingResult couples = stable_matching(ctx, men, women);
    CHECK(couples == MatchingResult({{1, 1}}));
    CHECK(is_stable(couples, men, women));
    CHECK(is_valid_matching(couples, men, women));
    auto all = oracles::all_stable_matchings(men, women);
    CHECK(all == std::set<MatchingResult>({MatchingResult{{1, 1}}}));
  }
}

TEST_CASE("dangling references violate the cross-reference preconditions") {
  ContractContext ctx;
  PrefTable men{{{1, {5}}}};
  PrefTable women{{{2, {1}}}};
  try {
    stable_matching(ctx, men, women);
    FAIL("expected a throw");
  } catch (const ContractViolation& v) {
    CHECK(v.label() == "sm.P1");
    CHECK(v.kind() == ContractKind::Pre);
  }
}

TEST_CASE("move_to_head") {
  ContractContext ctx;
  CHECK(move_to_head(ctx, {1, 2, 3}, 3) == std::vector<AgentId>({3, 1, 2}));
  CHECK(move_to_head(ctx, {1, 2, 3}, 1) == std::vector<AgentId>({1, 2, 3}));
  CHECK(move_to_head(ctx, {5}, 5) == std::vector<AgentId>({5}));
  try {
    move_to_head(ctx, {1, 2}, 9);
    FAIL("expected a throw");
  } catch (const ContractViolation& v) {
    CHECK(v.label() == "x in s");
  }
}

TEST_CASE("vacancy preference construction") {
  PlacementInstance inst;
  inst.vacancies = {1, 2};
  inst.teachers = {1, 2, 3};
  inst.preferences = PrefTable{{{1, {2, 1}}, {2, {1, 2}}, {3, {2}}}};
  inst.initial = {{1, 1}};
  CHECK(vacancies_prefs(inst) ==
        PrefTable{{{1, {1, 2, 3}}, {2, {1, 2, 3}}}});

  inst.preferences = PrefTable{{{1, {2, 1}}, {2, {1, 2}}, {3, {2, 1}}}};
  inst.initial = {{3, 1}};
  CHECK(vacancies_prefs(inst) ==
        PrefTable{{{1, {3, 1, 2}}, {2, {1, 2, 3}}}});

  inst.initial = {};
  CHECK(vacancies_prefs(inst) ==
        PrefTable{{{1, {1, 2, 3}}, {2, {1, 2, 3}}}});
}

TEST_CASE("placement on the pinned instances") {
  ContractContext ctx;
  {
    PlacementInstance inst;
    inst.vacancies = {1, 2};
    inst.teachers = {1, 2, 3};
    inst.preferences = PrefTable{{{1, {2, 1}}, {2, {1, 2}}, {3, {2}}}};
    inst.initial = {{1, 1}};
    CHECK(teachers_placement(ctx, inst) ==
          MatchingResult({{1, 2}, {2, 1}}));
  }
  {
    PlacementInstance inst;
    inst.vacancies = {1, 2};
    inst.teachers = {1, 2, 3};
    inst.preferences = PrefTable{{{1, {2, 1}}, {2, {1, 2}}, {3, {2, 1}}}};
    inst.initial = {{3, 1}};
    CHECK(teachers_placement(ctx, inst) ==
          MatchingResult({{1, 2}, {3, 1}}));
  }
  {
    PlacementInstance empty;
    empty.vacancies = {1};
    CHECK(teachers_placement(ctx, empty).empty());
  }
}

TEST_CASE("placement preconditions bite") {
  ContractContext ctx;
  PlacementInstance inst;
  inst.vacancies = {1};
  inst.teachers = {1};
  inst.preferences = PrefTable{{{1, {1}}}};
  inst.initial = {{1, 9}};  // vacancy 9 does not exist
  try {
    teachers_placement(ctx, inst);
    FAIL("expected a throw");
  } catch (const ContractViolation& v) {
    CHECK(v.label() == "tp.P3");
  }

  inst.initial = {};
  inst.preferences = PrefTable{{{1, {1}}, {7, {1}}}};  // 7 is not ranked
  try {
    teachers_placement(ctx, inst);
    FAIL("expected a throw");
  } catch (const ContractViolation& v) {
    CHECK(v.label() == "tp.P1");
  }
}

TEST_CASE("incumbent priority holds in placement outputs") {
  SeededRng rng(51);
  ContractContext ctx;
  for (int i = 0; i < 150; ++i) {
    PlacementInstance inst = gen::random_placement_instance(rng, 4, 4);
    MatchingResult placement = teachers_placement(ctx, inst);
    // No vacancy may be held against a teacher with precedence who wants it.
    for (AgentId t : inst.teachers) {
      for (AgentId v : inst.preferences.prefs.at(t)) {
        bool wants_v = true;
        if (auto it = placement.find(t); it != placement.end()) {
          wants_v = precedes(v, it->second, inst.preferences.prefs.at(t));
        }
        if (wants_v) {
          CHECK_FALSE(teacher_has_precedence(
              t, v, placement, std::span<const AgentId>(inst.teachers),
              inst.initial));
        }
      }
    }
    // Initially placed teachers stay placed.
    for (const auto& [t, v] : inst.initial) {
      CHECK(placement.contains(t));
    }
  }
}

TEST_CASE("random instances produce valid stable matchings") {
  SeededRng rng(52);
  ContractContext ctx;
  for (int i = 0; i < 250; ++i) {
    auto [men, women] = gen::random_matching_instance(rng, 6, 6);
    MatchingResult couples = stable_matching(ctx, men, women);
    CHECK(is_injective(couples));
    CHECK(is_valid_matching(couples, men, women));
    CHECK(is_stable(couples, men, women));
  }
}

TEST_CASE("outputs are members of the enumerated stable set") {
  SeededRng rng(53);
  ContractContext ctx;
  for (int i = 0; i < 150; ++i) {
    auto [men, women] = gen::random_matching_instance(rng, 4, 4);
    MatchingResult couples = stable_matching(ctx, men, women);
    auto all = oracles::all_stable_matchings(men, women);
    CHECK(all.contains(couples));
  }
}
