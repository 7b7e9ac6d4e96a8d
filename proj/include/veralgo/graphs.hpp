/*
 * Directed graphs with Kahn's topological sort, and undirected graphs with
 * Euler circuit construction by closed-trail search and splicing. The
 * specification predicates (topological ordering, walks, trails, circuits,
 * full edge coverage) are runnable checkers used both as contracts and by
 * the solution certifier.
 *
 * All nondeterministic choices are fixed to the smallest candidate: the
 * sort picks the smallest zero-indegree vertex, the trail search starts at
 * the smallest vertex and follows the smallest unvisited neighbour, and
 * splicing happens at the lowest index with remaining edges.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "veralgo/contracts.hpp"

namespace veralgo {

using Vertex = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

// Directed graph as explicit vertex and edge sets.
struct DiGraph {
  std::set<Vertex> vertices;
  std::set<Edge> edges;

  auto operator<=>(const DiGraph&) const = default;
};

// Undirected graph as a symmetric, anti-reflexive adjacency map. Every
// vertex appears as a key, including isolated ones.
struct UGraph {
  std::map<Vertex, std::set<Vertex>> adj;

  auto operator<=>(const UGraph&) const = default;

  std::size_t vertex_count() const { return adj.size(); }
  std::size_t edge_count() const;
};

// Every edge endpoint is a vertex of G.
bool is_valid_graph(const DiGraph& g);

// The adjacency map is anti-reflexive and symmetric with closed keys.
bool defines_valid_graph(const UGraph& g);

bool has_incoming_edges(const DiGraph& g, Vertex v);

// G minus v and all its incident edges.
DiGraph remove_vertex(Vertex v, const DiGraph& g);

// s lists each vertex of G exactly once with no edge pointing backwards.
bool is_top_sorting(std::span<const Vertex> s, const DiGraph& g);

// Linear-time cycle detection (three-colour DFS; a self-loop is a cycle).
// Matches the edge-simple-closed-walk definition evaluated by the
// brute-force oracle.
bool is_acyclic(const DiGraph& g);

// Topological order of G, or nullopt when a cycle blocks progress (no
// zero-indegree vertex remains while vertices do).
//   pre  "topsort.validGraph"
//   loop "topsort.zeroIndegree", "topsort.iterBound"
//   post "topsort.post.isTopSorting" (on success)
std::optional<std::vector<Vertex>> topsort(ContractContext& ctx,
                                           const DiGraph& g);

bool has_even_degrees(const UGraph& g);

// Every pair of vertices is joined by a path; the empty graph is connected.
bool is_connected(const UGraph& g);

// Walk/trail/circuit predicates over vertex sequences.
bool traverses_edge(std::span<const Vertex> s, Vertex u, Vertex v);
bool is_valid_walk(std::span<const Vertex> s, const UGraph& g);
bool is_valid_trail(std::span<const Vertex> s, const UGraph& g);
bool is_valid_circuit(std::span<const Vertex> s, const UGraph& g);

// Closed trail traversing every edge of G exactly once.
bool is_euler_circuit(std::span<const Vertex> s, const UGraph& g);

// Nonempty trail traversing every edge of G exactly once.
bool is_euler_trail(std::span<const Vertex> s, const UGraph& g);

// G minus the undirected edge {u, v}; keys are kept.
UGraph remove_edge(Vertex u, Vertex v, const UGraph& g);

// Euler circuit of G.
//   pre  "nonempty", "euler.validGraph", "connected", "evenDegrees"
//   the inner closed-trail search asserts "euler.dfs.returnsToStart" and
//   "euler.dfs.evenRemaining"; each splice asserts "euler.spliceParity"
//   and "euler.iterBound"
//   post "euler.post.isEulerCircuit"
std::vector<Vertex> find_euler_circuit(ContractContext& ctx, const UGraph& g);

}  // namespace veralgo
