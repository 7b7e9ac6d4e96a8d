#include <doctest.h>

#include <string>

#include "veralgo/common.hpp"
#include "veralgo/open_hash_set.hpp"
#include "veralgo/rng.hpp"

using namespace veralgo;

namespace {

std::size_t length_hash(const std::string& s) { return s.size(); }

}  // namespace

TEST_CASE("string set follows the pinned trace") {
  ContractContext ctx;
  OpenHashSet<std::string> h(ctx, length_hash);
  CHECK(h.elems().empty());
  h.insert("Hello");
  CHECK(h.elems() == std::set<std::string>({"Hello"}));
  h.insert("World");
  CHECK(h.elems() == std::set<std::string>({"Hello", "World"}));
  // Both words hash to 5; the collision probes to the next slot.
  CHECK(h.state_at(5) == CellState::Some);
  CHECK(h.state_at(6) == CellState::Some);
  CHECK(h.contains("Hello"));
  CHECK_FALSE(h.contains("ANSI"));
  h.remove("Hello");
  CHECK(h.elems() == std::set<std::string>({"World"}));
  CHECK_FALSE(h.contains("Hello"));
  CHECK(h.state_at(5) == CellState::Deleted);
}

TEST_CASE("empty set contains nothing") {
  ContractContext ctx;
  OpenHashSet<std::string> h(ctx, length_hash);
  CHECK_FALSE(h.contains("anything"));
}

TEST_CASE("filling a 3-slot table rehashes to 7 slots") {
  ContractContext ctx;
  OpenHashSet<Key> h(
      ctx, [](const Key& k) { return static_cast<std::size_t>(k); }, 3);
  h.insert(0);
  h.insert(1);
  h.insert(2);
  CHECK(h.table_size() == 3);
  CHECK(h.full());
  h.insert(9);
  CHECK(h.table_size() == 7);
  CHECK(h.elems() == std::set<Key>({0, 1, 2, 9}));
  CHECK(h.deleted_count() == 0);
}

TEST_CASE("a colliding insert reuses the tombstone") {
  ContractContext ctx;
  // Constant hash: everything probes from slot 0.
  OpenHashSet<Key> h(ctx, [](const Key&) { return std::size_t{0}; }, 7);
  h.insert(10);
  CHECK(h.state_at(0) == CellState::Some);
  h.remove(10);
  CHECK(h.state_at(0) == CellState::Deleted);
  h.insert(20);
  CHECK(h.state_at(0) == CellState::Some);
  CHECK(h.value_at(0) == 20);
  CHECK(h.deleted_count() == 0);
}

TEST_CASE("deleting the sole element keeps the counting identity") {
  ContractContext ctx;
  OpenHashSet<Key> h(
      ctx, [](const Key& k) { return static_cast<std::size_t>(k); }, 5);
  h.insert(3);
  h.remove(3);
  CHECK(h.elems().empty());
  CHECK(h.used() == 0);
  CHECK(h.deleted_count() == 1);
  CHECK(h.counting_holds());
  CHECK(h.invariant_holds());
}

TEST_CASE("duplicate insert violates its precondition") {
  ContractContext ctx;
  OpenHashSet<std::string> h(ctx, length_hash);
  h.insert("x");
  try {
    h.insert("x");
    FAIL("expected a throw");
  } catch (const ContractViolation& v) {
    CHECK(v.label() == "x !in elems");
    CHECK(v.kind() == ContractKind::Pre);
  }
}

TEST_CASE("removing an absent value violates its precondition") {
  ContractContext ctx;
  OpenHashSet<std::string> h(ctx, length_hash);
  try {
    h.remove("missing");
    FAIL("expected a throw");
  } catch (const ContractViolation& v) {
    CHECK(v.label() == "x in elems");
    CHECK(v.kind() == ContractKind::Pre);
  }
}

TEST_CASE("a value parked beyond a tombstone stays reachable") {
  ContractContext ctx;
  OpenHashSet<Key> h(ctx, [](const Key&) { return std::size_t{0}; }, 7);
  h.insert(1);
  h.insert(2);  // probes past 1, lands at slot 1
  h.remove(1);  // tombstone at slot 0
  CHECK(h.contains(2));
  CHECK_FALSE(h.contains(1));
  CHECK(h.invariant_holds());
}

TEST_CASE("counting identity and full/Nil census hold through random runs") {
  SeededRng rng(31);
  ContractContext ctx;
  OpenHashSet<Key> h(
      ctx, [](const Key& k) { return static_cast<std::size_t>(k / 3); }, 5);
  std::set<Key> model;
  for (int step = 0; step < 600; ++step) {
    std::uint64_t roll = rng.below(10);
    if (roll < 5) {
      Key k = rng.int_in(0, 40);
      if (!model.contains(k)) {
        h.insert(k);
        model.insert(k);
      }
    } else if (roll < 8 && !model.empty()) {
      auto it = model.begin();
      std::advance(it, static_cast<std::ptrdiff_t>(rng.below(model.size())));
      h.remove(*it);
      model.erase(it);
    } else {
      Key k = rng.int_in(0, 40);
      CHECK(h.contains(k) == model.contains(k));
    }
    CHECK(h.counting_holds());
    CHECK(h.invariant_holds());
    std::size_t nil_cells = 0;
    for (std::size_t i = 0; i < h.table_size(); ++i) {
      if (h.state_at(i) == CellState::Nil) ++nil_cells;
    }
    CHECK(h.full() == (nil_cells == 0));
    CHECK(h.elems() == model);
  }
}
