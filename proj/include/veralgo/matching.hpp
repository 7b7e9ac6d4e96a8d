/*
 * Stable matching with incomplete preference lists and no ties, solved by
 * deferred acceptance, plus the placement problem (ranked candidates,
 * incumbents keep priority for their seat) solved by reduction to it.
 *
 * Proposer selection is deterministic: the lowest free id with unexplored
 * preferences proposes next. Any selection satisfies the same contracts.
 */
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "veralgo/contracts.hpp"

namespace veralgo {

using AgentId = std::int64_t;

// Per-agent ranked preference lists; each list is duplicate-free.
struct PrefTable {
  std::map<AgentId, std::vector<AgentId>> prefs;

  bool operator==(const PrefTable&) const = default;
};

// Proposer -> responder couples; always injective.
using MatchingResult = std::map<AgentId, AgentId>;

// True iff e1 occurs strictly before e2 in s.
bool precedes(AgentId e1, AgentId e2, std::span<const AgentId> s);

bool is_injective(const MatchingResult& couples);

// Each couple appears in both parties' preference lists.
bool is_valid_matching(const MatchingResult& couples, const PrefTable& men,
                       const PrefTable& women);

// (m, w) both prefer each other over their current situation; unmatched
// counts as worse than any listed partner.
bool is_blocking_pair(AgentId m, AgentId w, const MatchingResult& couples,
                      const PrefTable& men, const PrefTable& women);

// No blocking pair exists.
bool is_stable(const MatchingResult& couples, const PrefTable& men,
               const PrefTable& women);

// Deferred-acceptance matching.
//   pre  "sm.useq": no preference list contains duplicates
//   pre  "sm.P1":   every id in a proposer list is a responder key
//   pre  "sm.P2":   every id in a responder list is a proposer key
//   loop "sm.exploredPrefix", "sm.engagedToLastExplored", "sm.iterBound"
//   post "sm.injective", "sm.post.isValid", "sm.post.isStable"
MatchingResult stable_matching(ContractContext& ctx, const PrefTable& men,
                               const PrefTable& women);

// Copy of s with x moved to the front, preserving the order of the rest.
//   pre "x in s"; post "moveToHead.post"
std::vector<AgentId> move_to_head(ContractContext& ctx,
                                  std::vector<AgentId> s, AgentId x);

struct PlacementInstance {
  std::set<AgentId> vacancies;
  std::vector<AgentId> teachers;  // ranked, best first, duplicate-free
  PrefTable preferences;          // teacher -> ranked vacancies
  MatchingResult initial;         // teacher -> currently held vacancy

  bool operator==(const PlacementInstance&) const = default;
};

// Preference table of the vacancies: every vacancy ranks all teachers in
// rank order, except that its incumbent (if any) is moved to the head.
PrefTable vacancies_prefs(const PlacementInstance& inst);

// True iff t outranks whoever holds v in final (incumbents outrank
// everyone; otherwise rank order decides); a free vacancy prefers anyone.
bool teacher_has_precedence(AgentId t, AgentId v, const MatchingResult& final,
                            std::span<const AgentId> teachers,
                            const MatchingResult& initial);

// Placement by reduction to stable matching.
//   pre  "tp.useq", "tp.P1".."tp.P4", "tp.initInjective"
//   post "tp.Q1".."tp.Q4"
MatchingResult teachers_placement(ContractContext& ctx,
                                  const PlacementInstance& inst);

}  // namespace veralgo
