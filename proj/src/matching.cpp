#include "veralgo/matching.hpp"

#include <algorithm>
#include <optional>

#include "veralgo/common.hpp"
#include "veralgo/faults.hpp"

namespace veralgo {

namespace {

bool contains_id(std::span<const AgentId> s, AgentId x) {
  return std::find(s.begin(), s.end(), x) != s.end();
}

bool lists_are_duplicate_free(const PrefTable& table) {
  for (const auto& [id, list] : table.prefs) {
    if (has_duplicates(std::span<const AgentId>(list))) return false;
  }
  return true;
}

// Every id mentioned in `from` lists must be a key of `to`.
bool cross_references_closed(const PrefTable& from, const PrefTable& to) {
  for (const auto& [id, list] : from.prefs) {
    for (AgentId other : list) {
      if (!to.prefs.contains(other)) return false;
    }
  }
  return true;
}

std::optional<AgentId> holder_of(const MatchingResult& couples, AgentId w) {
  for (const auto& [m, partner] : couples) {
    if (partner == w) return m;
  }
  return std::nullopt;
}

}  // namespace

bool precedes(AgentId e1, AgentId e2, std::span<const AgentId> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != e1) continue;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[j] == e2) return true;
    }
  }
  return false;
}

bool is_injective(const MatchingResult& couples) {
  std::set<AgentId> values;
  for (const auto& [key, value] : couples) {
    if (!values.insert(value).second) return false;
  }
  return true;
}

bool is_valid_matching(const MatchingResult& couples, const PrefTable& men,
                       const PrefTable& women) {
  for (const auto& [m, w] : couples) {
    auto m_it = men.prefs.find(m);
    auto w_it = women.prefs.find(w);
    if (m_it == men.prefs.end() || w_it == women.prefs.end()) return false;
    if (!contains_id(m_it->second, w)) return false;
    if (!contains_id(w_it->second, m)) return false;
  }
  return true;
}

bool is_blocking_pair(AgentId m, AgentId w, const MatchingResult& couples,
                      const PrefTable& men, const PrefTable& women) {
  const auto& m_list = men.prefs.at(m);
  const auto& w_list = women.prefs.at(w);
  if (!contains_id(m_list, w) || !contains_id(w_list, m)) return false;
  if (auto it = couples.find(m); it != couples.end()) {
    if (!precedes(w, it->second, m_list)) return false;
  }
  for (const auto& [m2, w2] : couples) {
    if (w2 == w && !precedes(m, m2, w_list)) return false;
  }
  return true;
}

bool is_stable(const MatchingResult& couples, const PrefTable& men,
               const PrefTable& women) {
  for (const auto& [m, m_list] : men.prefs) {
    for (const auto& [w, w_list] : women.prefs) {
      if (is_blocking_pair(m, w, couples, men, women)) return false;
    }
  }
  return true;
}

MatchingResult stable_matching(ContractContext& ctx, const PrefTable& men,
                               const PrefTable& women) {
  ctx.check_pre("sm.useq", [&] {
    return lists_are_duplicate_free(men) && lists_are_duplicate_free(women);
  });
  ctx.check_pre("sm.P1", [&] { return cross_references_closed(men, women); });
  ctx.check_pre("sm.P2", [&] { return cross_references_closed(women, men); });

  MatchingResult couples;
  std::map<AgentId, std::vector<AgentId>> explored;
  std::size_t total_preferences = 0;
  for (const auto& [m, list] : men.prefs) {
    explored[m] = {};
    total_preferences += list.size();
  }

  std::size_t iterations = 0;
  while (true) {
    // Lowest free proposer with someone left to propose to.
    AgentId m = 0;
    bool found = false;
    for (const auto& [candidate, list] : men.prefs) {
      if (!couples.contains(candidate) &&
          explored[candidate].size() < list.size()) {
        m = candidate;
        found = true;
        break;
      }
    }
    if (!found) break;

    ++iterations;
    ctx.check_assert("sm.iterBound",
                     [&] { return iterations <= total_preferences; });
    ctx.check_invariant("sm.exploredPrefix", [&] {
      for (const auto& [man, seen] : explored) {
        const auto& full = men.prefs.at(man);
        if (seen.size() > full.size()) return false;
        if (!std::equal(seen.begin(), seen.end(), full.begin())) return false;
      }
      return true;
    });
    ctx.check_invariant("sm.engagedToLastExplored", [&] {
      for (const auto& [man, partner] : couples) {
        const auto& seen = explored.at(man);
        if (seen.empty() || seen.back() != partner) return false;
      }
      return true;
    });

    AgentId w = men.prefs.at(m)[explored[m].size()];
    auto w_it = women.prefs.find(w);
    bool w_lists_m =
        w_it != women.prefs.end() && contains_id(w_it->second, m);

    if (auto holder = holder_of(couples, w)) {
      bool displaces = w_lists_m && precedes(m, *holder, w_it->second);
      if (faults::armed(faults::Fault::MatchingSkipsRejection)) {
        displaces = w_lists_m;
      }
      if (displaces) {
        couples.erase(*holder);
        couples[m] = w;
      }
    } else if (w_lists_m) {
      couples[m] = w;
    }

    explored[m].push_back(w);
  }

  ctx.check_post("sm.injective", [&] { return is_injective(couples); });
  ctx.check_post("sm.post.isValid",
                 [&] { return is_valid_matching(couples, men, women); });
  ctx.check_post("sm.post.isStable",
                 [&] { return is_stable(couples, men, women); });
  return couples;
}

std::vector<AgentId> move_to_head(ContractContext& ctx,
                                  std::vector<AgentId> s, AgentId x) {
  ctx.check_pre("x in s",
                [&] { return contains_id(std::span<const AgentId>(s), x); });
  auto old =
      ctx.capture_old([&] { return snapshot(std::vector<AgentId>(s)); });

  auto it = std::find(s.begin(), s.end(), x);
  if (it != s.end()) {
    std::rotate(s.begin(), it, it + 1);
  }

  ctx.check_post("moveToHead.post", [&] {
    if (s.empty() || s.front() != x) return false;
    // Same elements, order of the others preserved.
    std::vector<AgentId> rest(s.begin() + 1, s.end());
    std::vector<AgentId> expected;
    for (AgentId y : old->value()) {
      if (y != x) expected.push_back(y);
    }
    return rest == expected;
  });
  return s;
}

PrefTable vacancies_prefs(const PlacementInstance& inst) {
  ContractContext scratch(ContractMode::Off);
  PrefTable result;
  for (AgentId v : inst.vacancies) {
    AgentId incumbent = 0;
    bool has_incumbent = false;
    for (const auto& [t, held] : inst.initial) {
      if (held == v) {
        incumbent = t;
        has_incumbent = true;
        break;
      }
    }
    result.prefs[v] = has_incumbent
                          ? move_to_head(scratch, inst.teachers, incumbent)
                          : inst.teachers;
  }
  return result;
}

bool teacher_has_precedence(AgentId t, AgentId v, const MatchingResult& final,
                            std::span<const AgentId> teachers,
                            const MatchingResult& initial) {
  auto held_initially = [&](AgentId teacher) {
    auto it = initial.find(teacher);
    return it != initial.end() && it->second == v;
  };
  for (const auto& [t2, held] : final) {
    if (held != v) continue;
    if (t == t2) return false;
    return held_initially(t) ||
           (!held_initially(t2) && precedes(t, t2, teachers));
  }
  return true;  // free vacancy: any teacher beats leaving it empty
}

MatchingResult teachers_placement(ContractContext& ctx,
                                  const PlacementInstance& inst) {
  ctx.check_pre("tp.useq", [&] {
    return !has_duplicates(std::span<const AgentId>(inst.teachers)) &&
           lists_are_duplicate_free(inst.preferences);
  });
  ctx.check_pre("tp.P1", [&] {
    std::set<AgentId> ranked(inst.teachers.begin(), inst.teachers.end());
    std::set<AgentId> with_prefs;
    for (const auto& [t, list] : inst.preferences.prefs) with_prefs.insert(t);
    return ranked == with_prefs;
  });
  ctx.check_pre("tp.P2", [&] {
    for (const auto& [t, list] : inst.preferences.prefs) {
      for (AgentId v : list) {
        if (!inst.vacancies.contains(v)) return false;
      }
    }
    return true;
  });
  ctx.check_pre("tp.P3", [&] {
    for (const auto& [t, v] : inst.initial) {
      if (!contains_id(std::span<const AgentId>(inst.teachers), t)) {
        return false;
      }
      if (!inst.vacancies.contains(v)) return false;
    }
    return true;
  });
  ctx.check_pre("tp.initInjective", [&] { return is_injective(inst.initial); });
  ctx.check_pre("tp.P4", [&] {
    for (const auto& [t, v] : inst.initial) {
      auto it = inst.preferences.prefs.find(t);
      if (it == inst.preferences.prefs.end() || it->second.empty()) {
        return false;
      }
      if (it->second.back() != v) return false;
    }
    return true;
  });

  MatchingResult placement =
      stable_matching(ctx, inst.preferences, vacancies_prefs(inst));

  ctx.check_post("tp.Q1", [&] {
    for (const auto& [t, v] : placement) {
      if (!contains_id(std::span<const AgentId>(inst.teachers), t)) {
        return false;
      }
    }
    return true;
  });
  ctx.check_post("tp.Q2", [&] {
    for (const auto& [t, v] : placement) {
      auto it = inst.preferences.prefs.find(t);
      if (it == inst.preferences.prefs.end() ||
          !contains_id(it->second, v)) {
        return false;
      }
    }
    return true;
  });
  ctx.check_post("tp.Q3", [&] {
    for (AgentId t : inst.teachers) {
      auto pref_it = inst.preferences.prefs.find(t);
      if (pref_it == inst.preferences.prefs.end()) continue;
      for (AgentId v : pref_it->second) {
        bool t_prefers_v = true;
        if (auto it = placement.find(t); it != placement.end()) {
          t_prefers_v = precedes(v, it->second, pref_it->second);
        }
        if (t_prefers_v &&
            teacher_has_precedence(
                t, v, placement,
                std::span<const AgentId>(inst.teachers), inst.initial)) {
          return false;
        }
      }
    }
    return true;
  });
  ctx.check_post("tp.Q4", [&] {
    for (const auto& [t, v] : inst.initial) {
      if (!placement.contains(t)) return false;
    }
    return true;
  });
  return placement;
}

}  // namespace veralgo
