#include "veralgo/generators.hpp"

#include <algorithm>

namespace veralgo::gen {

namespace {

std::vector<AgentId> random_ranked_subset(SeededRng& rng,
                                          const std::vector<AgentId>& pool,
                                          std::size_t max_len) {
  std::vector<AgentId> shuffled = pool;
  rng.shuffle(shuffled);
  std::size_t len = static_cast<std::size_t>(
      rng.below(std::min(max_len, pool.size()) + 1));
  shuffled.resize(len);
  return shuffled;
}

}  // namespace

std::vector<Key> random_keys(SeededRng& rng, std::size_t max_len, Key lo,
                             Key hi) {
  std::size_t len = static_cast<std::size_t>(rng.below(max_len + 1));
  std::vector<Key> out(len);
  for (Key& k : out) k = rng.int_in(lo, hi);
  return out;
}

DiGraph random_layered_dag(SeededRng& rng, std::size_t max_vertices) {
  DiGraph g;
  std::size_t n = static_cast<std::size_t>(rng.below(max_vertices + 1));
  if (n == 0) return g;
  std::size_t layers = 1 + rng.below(n);
  std::vector<std::size_t> layer_of(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.vertices.insert(static_cast<Vertex>(v + 1));
    layer_of[v] = rng.below(layers);
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (layer_of[u] < layer_of[v] && rng.below(100) < 40) {
        g.edges.insert(
            Edge{static_cast<Vertex>(u + 1), static_cast<Vertex>(v + 1)});
      }
    }
  }
  return g;
}

DiGraph random_digraph(SeededRng& rng, std::size_t max_vertices) {
  DiGraph g;
  std::size_t n = static_cast<std::size_t>(rng.below(max_vertices + 1));
  for (std::size_t v = 0; v < n; ++v) {
    g.vertices.insert(static_cast<Vertex>(v + 1));
  }
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = 1; v <= n; ++v) {
      if (rng.below(100) < 25) {
        g.edges.insert(
            Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
      }
    }
  }
  return g;
}

UGraph random_eulerian_graph(SeededRng& rng, std::size_t max_vertices,
                             std::size_t max_edges) {
  UGraph g;
  std::size_t n = std::max<std::size_t>(max_vertices, 1);
  if (n < 3 || max_edges < 3 || rng.below(8) == 0) {
    g.adj[static_cast<Vertex>(1 + rng.below(n))] = {};
    return g;
  }

  std::vector<Vertex> pool;
  for (std::size_t v = 1; v <= n; ++v) pool.push_back(static_cast<Vertex>(v));

  auto add_cycle = [&](const std::vector<Vertex>& cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Vertex a = cycle[i];
      Vertex b = cycle[(i + 1) % cycle.size()];
      g.adj[a].insert(b);
      g.adj[b].insert(a);
    }
  };
  auto cycle_is_fresh = [&](const std::vector<Vertex>& cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Vertex a = cycle[i];
      Vertex b = cycle[(i + 1) % cycle.size()];
      auto it = g.adj.find(a);
      if (it != g.adj.end() && it->second.contains(b)) return false;
    }
    return true;
  };

  // Seed cycle.
  rng.shuffle(pool);
  std::size_t first_len = 3 + rng.below(std::min(pool.size(), max_edges) - 2);
  std::vector<Vertex> cycle(pool.begin(),
                            pool.begin() + static_cast<std::ptrdiff_t>(
                                               first_len));
  add_cycle(cycle);

  // Superpose a few more cycles anchored at covered vertices.
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::size_t budget = max_edges - g.edge_count();
    if (budget < 3) break;
    std::vector<Vertex> covered;
    for (const auto& [v, nb] : g.adj) covered.push_back(v);
    Vertex anchor = covered[rng.below(covered.size())];

    std::vector<Vertex> others = pool;
    std::erase(others, anchor);
    rng.shuffle(others);
    std::size_t cap = std::min(budget - 1, others.size());
    if (cap < 2) continue;
    std::size_t extra = 2 + rng.below(cap - 1);
    std::vector<Vertex> next{anchor};
    next.insert(next.end(), others.begin(),
                others.begin() + static_cast<std::ptrdiff_t>(extra));
    if (next.size() >= 3 && next.size() <= budget && cycle_is_fresh(next)) {
      add_cycle(next);
    }
  }
  return g;
}

std::pair<UGraph, std::vector<Vertex>> random_trail_graph(
    SeededRng& rng, std::size_t max_vertices, std::size_t max_steps) {
  std::size_t n = std::max<std::size_t>(max_vertices, 2);
  UGraph g;
  Vertex at = static_cast<Vertex>(1 + rng.below(n));
  std::vector<Vertex> trail{at};
  g.adj[at] = {};
  std::size_t steps = 1 + rng.below(max_steps);
  for (std::size_t i = 0; i < steps; ++i) {
    // Fresh edge out of the current endpoint, if any remains.
    std::vector<Vertex> options;
    for (std::size_t v = 1; v <= n; ++v) {
      Vertex w = static_cast<Vertex>(v);
      if (w == at) continue;
      auto it = g.adj.find(at);
      if (it != g.adj.end() && it->second.contains(w)) continue;
      options.push_back(w);
    }
    if (options.empty()) break;
    Vertex w = options[rng.below(options.size())];
    g.adj[at].insert(w);
    g.adj[w].insert(at);
    trail.push_back(w);
    at = w;
  }
  return {std::move(g), std::move(trail)};
}

std::pair<PrefTable, PrefTable> random_matching_instance(
    SeededRng& rng, std::size_t max_per_side, std::size_t max_list_len) {
  std::size_t men_count = rng.below(max_per_side + 1);
  std::size_t women_count = rng.below(max_per_side + 1);
  std::vector<AgentId> men_ids;
  std::vector<AgentId> women_ids;
  for (std::size_t i = 1; i <= men_count; ++i) {
    men_ids.push_back(static_cast<AgentId>(i));
  }
  for (std::size_t i = 1; i <= women_count; ++i) {
    women_ids.push_back(static_cast<AgentId>(i));
  }

  PrefTable men;
  PrefTable women;
  for (AgentId m : men_ids) {
    men.prefs[m] = random_ranked_subset(rng, women_ids, max_list_len);
  }
  for (AgentId w : women_ids) {
    women.prefs[w] = random_ranked_subset(rng, men_ids, max_list_len);
  }
  return {std::move(men), std::move(women)};
}

PlacementInstance random_placement_instance(SeededRng& rng,
                                            std::size_t max_teachers,
                                            std::size_t max_vacancies) {
  PlacementInstance inst;
  std::size_t teachers = rng.below(max_teachers + 1);
  std::size_t vacancies = 1 + rng.below(std::max<std::size_t>(max_vacancies, 1));
  std::vector<AgentId> vacancy_ids;
  for (std::size_t i = 1; i <= vacancies; ++i) {
    inst.vacancies.insert(static_cast<AgentId>(i));
    vacancy_ids.push_back(static_cast<AgentId>(i));
  }
  for (std::size_t i = 1; i <= teachers; ++i) {
    inst.teachers.push_back(static_cast<AgentId>(i));
  }
  rng.shuffle(inst.teachers);
  for (AgentId t : inst.teachers) {
    inst.preferences.prefs[t] =
        random_ranked_subset(rng, vacancy_ids, vacancy_ids.size());
  }

  // Initial placements: the held vacancy must be the teacher's final
  // preference, and no two teachers may hold the same vacancy.
  std::set<AgentId> held;
  for (AgentId t : inst.teachers) {
    const auto& list = inst.preferences.prefs[t];
    if (list.empty() || !rng.coin()) continue;
    AgentId v = list.back();
    if (held.insert(v).second) {
      inst.initial[t] = v;
    }
  }
  return inst;
}

}  // namespace veralgo::gen
