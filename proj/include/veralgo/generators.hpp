/*
 * Seeded instance generators for the property suites and the fuzz command.
 * Sizes are kept inside the oracle enumeration bounds.
 */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "veralgo/common.hpp"
#include "veralgo/graphs.hpp"
#include "veralgo/matching.hpp"
#include "veralgo/rng.hpp"

namespace veralgo::gen {

std::vector<Key> random_keys(SeededRng& rng, std::size_t max_len, Key lo,
                             Key hi);

// Acyclic by construction: vertices are split into layers and edges only
// point from earlier to later layers.
DiGraph random_layered_dag(SeededRng& rng, std::size_t max_vertices);

// Arbitrary digraph (may be cyclic, may have self-loops).
DiGraph random_digraph(SeededRng& rng, std::size_t max_vertices);

// Connected graph with all degrees even, built by superposing edge-disjoint
// cycles that share vertices. Single-vertex graphs are a valid degenerate
// output. Never exceeds max_edges edges.
UGraph random_eulerian_graph(SeededRng& rng, std::size_t max_vertices,
                             std::size_t max_edges);

// Random edge-simple trail and the graph consisting of exactly its edges;
// the trail is an Euler trail of that graph by construction.
std::pair<UGraph, std::vector<Vertex>> random_trail_graph(
    SeededRng& rng, std::size_t max_vertices, std::size_t max_steps);

// Two-sided preference tables with incomplete lists and no ties; cross
// references are closed by construction.
std::pair<PrefTable, PrefTable> random_matching_instance(
    SeededRng& rng, std::size_t max_per_side, std::size_t max_list_len);

// Placement instance satisfying the placement preconditions: ranked
// teachers, vacancy preferences, and an injective initial placement where
// each held vacancy is the teacher's last preference.
PlacementInstance random_placement_instance(SeededRng& rng,
                                            std::size_t max_teachers,
                                            std::size_t max_vacancies);

}  // namespace veralgo::gen
