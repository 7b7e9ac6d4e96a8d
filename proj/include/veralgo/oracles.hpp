/*
 * Deliberately naive reference implementations used to cross-check the
 * solvers and predicates on small instances. Nothing here shares code with
 * the implementations it validates.
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "veralgo/common.hpp"
#include "veralgo/graphs.hpp"
#include "veralgo/matching.hpp"

namespace veralgo::oracles {

// An oracle was asked about an instance beyond its enumeration bound.
class SizeExceeded : public std::runtime_error {
 public:
  explicit SizeExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Literal evaluation of the recursive definition: a nonempty edge-simple
// path u -> v exists. Exponential; |E| must be <= 20.
bool exists_simple_path(const DiGraph& g, Vertex u, Vertex v);

// Exactly the permutations of G's vertices accepted by is_top_sorting.
// |V| must be <= 8.
std::set<std::vector<Vertex>> all_topological_orders(const DiGraph& g);

// Every injective valid (possibly partial) matching that is stable, and no
// other. At most 4 agents per side.
std::set<MatchingResult> all_stable_matchings(const PrefTable& men,
                                              const PrefTable& women);

// Some sequence accepted by is_euler_circuit if one exists, found by
// backtracking over edge orders. At most 8 edges.
std::optional<std::vector<Vertex>> exhaustive_euler_circuit(const UGraph& g);

// ---- Reference models for the containers (their abstract contents) ----

enum class ContainerKind { Heap, HashSet, TreeSet };

struct CmdInsert {
  Key value;
};
struct CmdRemove {
  Key value;
};
struct CmdContains {
  Key value;
};
struct CmdDeleteMax {};
struct CmdGetMax {};
struct CmdMin {};
struct CmdMax {};
struct CmdAsSortedSeq {};

using Command = std::variant<CmdInsert, CmdRemove, CmdContains, CmdDeleteMax,
                             CmdGetMax, CmdMin, CmdMax, CmdAsSortedSeq>;

std::string to_string(const Command& cmd);

// What a container step reports back; compared verbatim between the model
// and the implementation.
struct Observation {
  std::optional<Key> value;
  std::optional<bool> flag;
  std::optional<std::vector<Key>> sequence;

  bool operator==(const Observation&) const = default;
};

std::string to_string(const Observation& obs);

struct HeapModel {
  std::multiset<Key> contents;
};
struct SetModel {
  std::set<Key> contents;
};

// Applies one command to the trivial reference model, returning what a
// correct container must observe. Commands must be legal for the kind
// (e.g. no delete-max on an empty heap).
Observation reference_model_step(HeapModel& model, const Command& cmd);
Observation reference_model_step(SetModel& model, ContainerKind kind,
                                 const Command& cmd);

// One cross-check outcome, printable for fuzz reports.
struct OracleReport {
  std::string instance;
  std::string expected;
  std::string actual;
  bool agree = true;

  std::string render() const;
};

}  // namespace veralgo::oracles
