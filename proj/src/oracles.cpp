#include "veralgo/oracles.hpp"

#include <algorithm>
#include <sstream>

namespace veralgo::oracles {

namespace {

bool exists_simple_path_impl(const std::set<Edge>& edges, Vertex u, Vertex v) {
  if (edges.contains(Edge{u, v})) return true;
  for (const Edge& e : edges) {
    if (e.first != u) continue;
    std::set<Edge> rest = edges;
    rest.erase(e);
    if (exists_simple_path_impl(rest, e.second, v)) return true;
  }
  return false;
}

void enumerate_matchings(const std::vector<AgentId>& men,
                         std::size_t next_man, const PrefTable& men_prefs,
                         const PrefTable& women_prefs,
                         std::set<AgentId>& taken, MatchingResult& current,
                         std::set<MatchingResult>& out) {
  if (next_man == men.size()) {
    if (is_stable(current, men_prefs, women_prefs)) out.insert(current);
    return;
  }
  AgentId m = men[next_man];
  // Leave m unmatched.
  enumerate_matchings(men, next_man + 1, men_prefs, women_prefs, taken,
                      current, out);
  for (AgentId w : men_prefs.prefs.at(m)) {
    if (taken.contains(w)) continue;
    auto w_it = women_prefs.prefs.find(w);
    if (w_it == women_prefs.prefs.end()) continue;
    if (std::find(w_it->second.begin(), w_it->second.end(), m) ==
        w_it->second.end()) {
      continue;
    }
    taken.insert(w);
    current[m] = w;
    enumerate_matchings(men, next_man + 1, men_prefs, women_prefs, taken,
                        current, out);
    current.erase(m);
    taken.erase(w);
  }
}

bool euler_backtrack(const UGraph& g, Vertex start, Vertex at,
                     std::set<Edge>& used, std::size_t total,
                     std::vector<Vertex>& path) {
  if (used.size() == total) {
    return at == start;
  }
  for (Vertex w : g.adj.at(at)) {
    Edge e = at < w ? Edge{at, w} : Edge{w, at};
    if (used.contains(e)) continue;
    used.insert(e);
    path.push_back(w);
    if (euler_backtrack(g, start, w, used, total, path)) return true;
    path.pop_back();
    used.erase(e);
  }
  return false;
}

}  // namespace

bool exists_simple_path(const DiGraph& g, Vertex u, Vertex v) {
  if (g.edges.size() > 20) {
    throw SizeExceeded("exists_simple_path: more than 20 edges");
  }
  return exists_simple_path_impl(g.edges, u, v);
}

std::set<std::vector<Vertex>> all_topological_orders(const DiGraph& g) {
  if (g.vertices.size() > 8) {
    throw SizeExceeded("all_topological_orders: more than 8 vertices");
  }
  std::vector<Vertex> perm(g.vertices.begin(), g.vertices.end());
  std::sort(perm.begin(), perm.end());
  std::set<std::vector<Vertex>> accepted;
  do {
    if (is_top_sorting(std::span<const Vertex>(perm), g)) {
      accepted.insert(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return accepted;
}

std::set<MatchingResult> all_stable_matchings(const PrefTable& men,
                                              const PrefTable& women) {
  if (men.prefs.size() > 4 || women.prefs.size() > 4) {
    throw SizeExceeded("all_stable_matchings: more than 4 agents per side");
  }
  std::vector<AgentId> men_ids;
  for (const auto& [m, list] : men.prefs) men_ids.push_back(m);
  std::set<MatchingResult> out;
  std::set<AgentId> taken;
  MatchingResult current;
  enumerate_matchings(men_ids, 0, men, women, taken, current, out);
  return out;
}

std::optional<std::vector<Vertex>> exhaustive_euler_circuit(const UGraph& g) {
  std::size_t total = g.edge_count();
  if (total > 8) {
    throw SizeExceeded("exhaustive_euler_circuit: more than 8 edges");
  }
  if (total == 0) {
    if (g.adj.empty()) return std::nullopt;
    return std::vector<Vertex>{g.adj.begin()->first};
  }
  for (const auto& [start, neighbours] : g.adj) {
    if (neighbours.empty()) continue;
    std::set<Edge> used;
    std::vector<Vertex> path{start};
    if (euler_backtrack(g, start, start, used, total, path)) {
      return path;
    }
  }
  return std::nullopt;
}

std::string to_string(const Command& cmd) {
  std::ostringstream out;
  std::visit(
      [&](const auto& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, CmdInsert>) {
          out << "insert " << c.value;
        } else if constexpr (std::is_same_v<C, CmdRemove>) {
          out << "remove " << c.value;
        } else if constexpr (std::is_same_v<C, CmdContains>) {
          out << "contains " << c.value;
        } else if constexpr (std::is_same_v<C, CmdDeleteMax>) {
          out << "delete-max";
        } else if constexpr (std::is_same_v<C, CmdGetMax>) {
          out << "get-max";
        } else if constexpr (std::is_same_v<C, CmdMin>) {
          out << "min";
        } else if constexpr (std::is_same_v<C, CmdMax>) {
          out << "max";
        } else {
          out << "as-sorted-seq";
        }
      },
      cmd);
  return out.str();
}

std::string to_string(const Observation& obs) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  if (obs.value.has_value()) {
    out << "value=" << *obs.value;
    first = false;
  }
  if (obs.flag.has_value()) {
    if (!first) out << ", ";
    out << "flag=" << (*obs.flag ? "true" : "false");
    first = false;
  }
  if (obs.sequence.has_value()) {
    if (!first) out << ", ";
    out << "seq=[";
    for (std::size_t i = 0; i < obs.sequence->size(); ++i) {
      if (i > 0) out << " ";
      out << (*obs.sequence)[i];
    }
    out << "]";
  }
  out << "}";
  return out.str();
}

Observation reference_model_step(HeapModel& model, const Command& cmd) {
  Observation obs;
  if (const auto* ins = std::get_if<CmdInsert>(&cmd)) {
    model.contents.insert(ins->value);
  } else if (std::holds_alternative<CmdDeleteMax>(cmd)) {
    auto it = std::prev(model.contents.end());
    obs.value = *it;
    model.contents.erase(it);
  } else if (std::holds_alternative<CmdGetMax>(cmd)) {
    obs.value = *model.contents.rbegin();
  }
  return obs;
}

Observation reference_model_step(SetModel& model, ContainerKind kind,
                                 const Command& cmd) {
  Observation obs;
  if (const auto* ins = std::get_if<CmdInsert>(&cmd)) {
    model.contents.insert(ins->value);  // duplicate insert: no effect
  } else if (const auto* rem = std::get_if<CmdRemove>(&cmd)) {
    model.contents.erase(rem->value);
  } else if (const auto* has = std::get_if<CmdContains>(&cmd)) {
    obs.flag = model.contents.contains(has->value);
  } else if (std::holds_alternative<CmdMin>(cmd)) {
    obs.value = *model.contents.begin();
  } else if (std::holds_alternative<CmdMax>(cmd)) {
    obs.value = *model.contents.rbegin();
  } else if (std::holds_alternative<CmdAsSortedSeq>(cmd)) {
    obs.sequence =
        std::vector<Key>(model.contents.begin(), model.contents.end());
  }
  (void)kind;
  return obs;
}

std::string OracleReport::render() const {
  std::ostringstream out;
  out << (agree ? "agree" : "DISAGREE") << "\n  instance: " << instance
      << "\n  expected: " << expected << "\n  actual:   " << actual;
  return out.str();
}

}  // namespace veralgo::oracles
