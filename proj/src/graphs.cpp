#include "veralgo/graphs.hpp"

#include <algorithm>

#include "veralgo/faults.hpp"

namespace veralgo {

namespace {

Edge normalized(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Closed trail from v following smallest unvisited neighbours; returns the
// trail and the remaining graph. With all degrees even the trail ends where
// it started.
std::pair<std::vector<Vertex>, UGraph> closed_trail_from(ContractContext& ctx,
                                                         Vertex v,
                                                         UGraph g) {
  std::vector<Vertex> trail{v};
  Vertex u = v;
  while (!g.adj.at(u).empty()) {
    Vertex w = *g.adj.at(u).begin();
    trail.push_back(w);
    g.adj.at(u).erase(w);
    // find() keeps Log mode alive on asymmetric adjacency input.
    if (auto it = g.adj.find(w); it != g.adj.end()) {
      it->second.erase(u);
    } else {
      break;
    }
    u = w;
  }
  ctx.check_assert("euler.dfs.returnsToStart", [&] { return u == v; });
  ctx.check_assert("euler.dfs.evenRemaining",
                   [&] { return has_even_degrees(g); });
  return {std::move(trail), std::move(g)};
}

}  // namespace

std::size_t UGraph::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& [v, neighbours] : adj) {
    degree_sum += neighbours.size();
  }
  return degree_sum / 2;
}

bool is_valid_graph(const DiGraph& g) {
  for (const auto& [from, to] : g.edges) {
    if (!g.vertices.contains(from) || !g.vertices.contains(to)) return false;
  }
  return true;
}

bool defines_valid_graph(const UGraph& g) {
  for (const auto& [v, neighbours] : g.adj) {
    for (Vertex w : neighbours) {
      if (w == v) return false;
      auto it = g.adj.find(w);
      if (it == g.adj.end() || !it->second.contains(v)) return false;
    }
  }
  return true;
}

bool has_incoming_edges(const DiGraph& g, Vertex v) {
  for (const auto& [from, to] : g.edges) {
    if (to == v) return true;
  }
  return false;
}

DiGraph remove_vertex(Vertex v, const DiGraph& g) {
  DiGraph result;
  result.vertices = g.vertices;
  result.vertices.erase(v);
  for (const Edge& e : g.edges) {
    if (e.first != v && e.second != v) result.edges.insert(e);
  }
  return result;
}

bool is_top_sorting(std::span<const Vertex> s, const DiGraph& g) {
  std::multiset<Vertex> listed(s.begin(), s.end());
  std::multiset<Vertex> expected(g.vertices.begin(), g.vertices.end());
  if (listed != expected) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      if (g.edges.contains(Edge{s[j], s[i]})) return false;
    }
  }
  return true;
}

bool is_acyclic(const DiGraph& g) {
  std::map<Vertex, std::vector<Vertex>> out;
  for (const auto& [from, to] : g.edges) {
    if (from == to) return false;
    out[from].push_back(to);
  }
  enum class Colour { White, Grey, Black };
  std::map<Vertex, Colour> colour;
  for (Vertex v : g.vertices) colour[v] = Colour::White;

  // Iterative DFS; a grey->grey edge is a back edge, hence a cycle.
  for (Vertex root : g.vertices) {
    if (colour[root] != Colour::White) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    colour[root] = Colour::Grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& succ = out[v];
      if (next == succ.size()) {
        colour[v] = Colour::Black;
        stack.pop_back();
        continue;
      }
      Vertex w = succ[next++];
      if (colour[w] == Colour::Grey) return false;
      if (colour[w] == Colour::White) {
        colour[w] = Colour::Grey;
        stack.emplace_back(w, 0);
      }
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> topsort(ContractContext& ctx,
                                           const DiGraph& g) {
  ctx.check_pre("topsort.validGraph", [&] { return is_valid_graph(g); });

  std::vector<Vertex> order;
  DiGraph remaining = g;
  std::size_t iterations = 0;
  while (!remaining.vertices.empty()) {
    // Smallest vertex with no incoming edges; sets iterate in order.
    std::optional<Vertex> pick;
    for (Vertex v : remaining.vertices) {
      if (!has_incoming_edges(remaining, v)) {
        pick = v;
        break;
      }
    }
    if (!pick.has_value()) {
      // Every remaining vertex has an incoming edge: a cycle.
      return std::nullopt;
    }

    ++iterations;
    ctx.check_assert("topsort.iterBound",
                     [&] { return iterations <= g.vertices.size(); });
    ctx.check_assert("topsort.zeroIndegree",
                     [&] { return !has_incoming_edges(remaining, *pick); });

    order.push_back(*pick);
    remaining = remove_vertex(*pick, remaining);
  }

  ctx.check_post("topsort.post.isTopSorting", [&] {
    return is_top_sorting(std::span<const Vertex>(order), g);
  });
  return order;
}

bool has_even_degrees(const UGraph& g) {
  for (const auto& [v, neighbours] : g.adj) {
    if (neighbours.size() % 2 != 0) return false;
  }
  return true;
}

bool is_connected(const UGraph& g) {
  if (g.adj.empty()) return true;
  std::set<Vertex> reached{g.adj.begin()->first};
  std::vector<Vertex> frontier{g.adj.begin()->first};
  while (!frontier.empty()) {
    Vertex v = frontier.back();
    frontier.pop_back();
    auto it = g.adj.find(v);
    if (it == g.adj.end()) continue;
    for (Vertex w : it->second) {
      if (reached.insert(w).second) frontier.push_back(w);
    }
  }
  return reached.size() == g.adj.size();
}

bool traverses_edge(std::span<const Vertex> s, Vertex u, Vertex v) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (normalized(s[i - 1], s[i]) == normalized(u, v)) return true;
  }
  return false;
}

bool is_valid_walk(std::span<const Vertex> s, const UGraph& g) {
  for (Vertex v : s) {
    if (!g.adj.contains(v)) return false;
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!g.adj.at(s[i - 1]).contains(s[i])) return false;
  }
  return true;
}

bool is_valid_trail(std::span<const Vertex> s, const UGraph& g) {
  if (!is_valid_walk(s, g)) return false;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!seen.insert(normalized(s[i - 1], s[i])).second) return false;
  }
  return true;
}

bool is_valid_circuit(std::span<const Vertex> s, const UGraph& g) {
  return is_valid_trail(s, g) && !s.empty() && s.front() == s.back();
}

bool is_euler_circuit(std::span<const Vertex> s, const UGraph& g) {
  if (!is_valid_circuit(s, g)) return false;
  for (const auto& [u, neighbours] : g.adj) {
    for (Vertex v : neighbours) {
      if (!traverses_edge(s, u, v)) return false;
    }
  }
  return true;
}

bool is_euler_trail(std::span<const Vertex> s, const UGraph& g) {
  if (s.empty() || !is_valid_trail(s, g)) return false;
  for (const auto& [u, neighbours] : g.adj) {
    for (Vertex v : neighbours) {
      if (!traverses_edge(s, u, v)) return false;
    }
  }
  return true;
}

UGraph remove_edge(Vertex u, Vertex v, const UGraph& g) {
  UGraph result = g;
  if (auto it = result.adj.find(u); it != result.adj.end()) {
    it->second.erase(v);
  }
  if (auto it = result.adj.find(v); it != result.adj.end()) {
    it->second.erase(u);
  }
  return result;
}

std::vector<Vertex> find_euler_circuit(ContractContext& ctx,
                                       const UGraph& g) {
  ctx.check_pre("nonempty", [&] { return g.vertex_count() > 0; });
  ctx.check_pre("euler.validGraph", [&] { return defines_valid_graph(g); });
  ctx.check_pre("connected", [&] { return is_connected(g); });
  ctx.check_pre("evenDegrees", [&] { return has_even_degrees(g); });
  if (g.adj.empty()) return {};

  Vertex start = g.adj.begin()->first;
  auto [circuit, remaining] = closed_trail_from(ctx, start, g);

  std::size_t total_edges = g.edge_count();
  std::size_t iterations = 0;
  while (true) {
    // Lowest index on the circuit with unexplored edges.
    std::optional<std::size_t> splice_at;
    for (std::size_t i = 0; i < circuit.size(); ++i) {
      auto it = remaining.adj.find(circuit[i]);
      if (it != remaining.adj.end() && !it->second.empty()) {
        splice_at = i;
        break;
      }
    }
    if (!splice_at.has_value()) break;

    ++iterations;
    ctx.check_assert("euler.iterBound",
                     [&] { return iterations <= total_edges; });

    auto [sub, rest] =
        closed_trail_from(ctx, circuit[*splice_at], std::move(remaining));
    remaining = std::move(rest);

    std::size_t keep_from = *splice_at + 1;
    if (faults::armed(faults::Fault::EulerSpliceOffByOne)) {
      keep_from = *splice_at;
    }
    std::vector<Vertex> spliced(circuit.begin(),
                                circuit.begin() +
                                    static_cast<std::ptrdiff_t>(*splice_at));
    spliced.insert(spliced.end(), sub.begin(), sub.end());
    spliced.insert(spliced.end(),
                   circuit.begin() + static_cast<std::ptrdiff_t>(keep_from),
                   circuit.end());
    circuit = std::move(spliced);

    ctx.check_assert("euler.spliceParity",
                     [&] { return has_even_degrees(remaining); });
  }

  ctx.check_post("euler.post.isEulerCircuit", [&] {
    return is_euler_circuit(std::span<const Vertex>(circuit), g);
  });
  return circuit;
}

}  // namespace veralgo
