/*
 * Text formats for problem instances and solutions.
 *
 * Graph files: first significant line is "D" (directed) or "U" (undirected);
 * then "v <id>" declares an isolated vertex and "e <a> <b>" an edge
 * (endpoints are declared implicitly). "#" starts a comment. Undirected
 * files must not repeat an edge in either orientation.
 *
 * Matching instances: "[proposers]" and "[responders]" sections with lines
 * "id: p1 p2 ...". Placement instances: "[vacancies]" (ids), "[teachers]"
 * (one ranked line), "[preferences]" (same line shape as matching),
 * "[initial]" (lines "teacher vacancy").
 *
 * Solution files: one whitespace-separated vertex sequence per line for
 * sequence problems; lines "proposer -> responder" for matchings.
 */
#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "veralgo/common.hpp"
#include "veralgo/graphs.hpp"
#include "veralgo/matching.hpp"

namespace veralgo::io {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class GraphKind { Directed, Undirected };

struct ParsedGraph {
  GraphKind kind = GraphKind::Directed;
  DiGraph digraph;  // set when kind == Directed
  UGraph ugraph;    // set when kind == Undirected
};

struct MatchingInstance {
  PrefTable proposers;
  PrefTable responders;
};

ParsedGraph parse_graph(std::string_view text);
MatchingInstance parse_matching_instance(std::string_view text);
PlacementInstance parse_placement_instance(std::string_view text);

// Whitespace-separated integers, comments allowed.
std::vector<Key> parse_integers(std::string_view text);

// One vertex sequence per nonblank line.
std::vector<std::vector<Vertex>> parse_vertex_sequences(std::string_view text);

// Lines "proposer -> responder".
MatchingResult parse_matching_solution(std::string_view text);

std::string read_file(const std::filesystem::path& path);

std::string format_sequence(std::span<const Vertex> s);
std::string format_matching(const MatchingResult& couples);

}  // namespace veralgo::io
