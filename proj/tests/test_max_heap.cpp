#include <doctest.h>

#include <algorithm>
#include <vector>

#include "veralgo/max_heap.hpp"
#include "veralgo/rng.hpp"

using namespace veralgo;

TEST_CASE("insert and delete-max follow the pinned trace") {
  ContractContext ctx;
  MaxHeap h(ctx);
  CHECK(h.is_empty());
  h.insert(2);
  h.insert(5);
  h.insert(1);
  h.insert(1);
  CHECK(h.elems() == std::multiset<Key>({1, 1, 2, 5}));
  CHECK(h.delete_max() == 5);
  CHECK(h.delete_max() == 2);
  CHECK(h.delete_max() == 1);
  CHECK(h.delete_max() == 1);
  CHECK(h.is_empty());
}

TEST_CASE("single insert forms a singleton") {
  ContractContext ctx;
  MaxHeap h(ctx);
  h.insert(7);
  CHECK(h.elems() == std::multiset<Key>({7}));
  CHECK(h.get_max() == 7);
  CHECK(h.delete_max() == 7);
  CHECK(h.is_empty());
}

TEST_CASE("delete-max on empty violates !isEmpty") {
  ContractContext ctx;
  MaxHeap h(ctx);
  try {
    h.delete_max();
    FAIL("expected a throw");
  } catch (const ContractViolation& v) {
    CHECK(v.label() == "!isEmpty");
    CHECK(v.kind() == ContractKind::Pre);
  }
  CHECK_THROWS_AS(h.get_max(), ContractViolation);
}

TEST_CASE("get_max reads without mutating") {
  ContractContext ctx;
  MaxHeap h(ctx);
  h.insert(2);
  h.insert(5);
  h.insert(1);
  CHECK(h.get_max() == 5);
  CHECK(h.elems() == std::multiset<Key>({1, 2, 5}));
  CHECK(h.delete_max() == 5);
  CHECK(h.get_max() == 2);
}

TEST_CASE("the buffer doubles when full") {
  ContractContext ctx;
  MaxHeap h(ctx, 10);
  std::multiset<Key> inserted;
  for (Key k = 0; k < 11; ++k) {
    h.insert(k);
    inserted.insert(k);
  }
  CHECK(h.capacity() == 20);
  CHECK(h.elems() == inserted);

  MaxHeap small(ctx, 2);
  small.insert(1);
  small.insert(2);
  CHECK(small.capacity() == 2);
  small.insert(3);
  CHECK(small.capacity() == 4);
}

TEST_CASE("delete-max drains in descending sorted order") {
  SeededRng rng(21);
  for (int round = 0; round < 60; ++round) {
    ContractContext ctx;
    MaxHeap h(ctx, 4);
    std::vector<Key> values;
    std::size_t n = 1 + rng.below(40);
    for (std::size_t i = 0; i < n; ++i) {
      Key k = rng.int_in(-30, 30);
      values.push_back(k);
      h.insert(k);
    }
    std::sort(values.rbegin(), values.rend());
    for (Key expected : values) {
      CHECK(h.delete_max() == expected);
    }
    CHECK(h.is_empty());
  }
}

TEST_CASE("the maximum stays at the top through mixed operations") {
  SeededRng rng(22);
  ContractContext ctx;
  MaxHeap h(ctx, 4);
  for (int step = 0; step < 500; ++step) {
    if (h.is_empty() || rng.below(3) != 0) {
      h.insert(rng.int_in(-99, 99));
    } else {
      h.delete_max();
    }
    CHECK(h.invariant_holds());
    auto items = h.items();
    for (Key k : items) {
      CHECK(k <= items.front());
    }
  }
}
