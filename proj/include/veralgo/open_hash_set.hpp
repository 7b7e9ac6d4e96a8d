/*
 * Hash set with open addressing and linear probing.
 *
 * Cells are Nil (never used), Deleted (tombstone) or occupied. Probing
 * starts at hash(x) mod table size, walks to the end and wraps to the
 * front. Deleting writes a tombstone so later probes pass over the slot;
 * inserting reuses the first tombstone on the probe path. When no Nil cell
 * remains the table rehashes into 2n+1 slots, dropping all tombstones.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "veralgo/contracts.hpp"
#include "veralgo/faults.hpp"

namespace veralgo {

enum class CellState { Nil, Deleted, Some };

template <typename T>
class OpenHashSet {
 public:
  using HashFn = std::function<std::size_t(const T&)>;

  // The context must outlive the set. hash must be a pure function of the
  // value; it is reduced modulo the current table size.
  OpenHashSet(ContractContext& ctx, HashFn hash,
              std::size_t initial_capacity = 101)
      : ctx_(&ctx),
        hash_(std::move(hash)),
        table_(initial_capacity == 0 ? 1 : initial_capacity) {}

  std::size_t used() const noexcept { return used_; }
  std::size_t deleted_count() const noexcept { return deleted_; }
  std::size_t table_size() const noexcept { return table_.size(); }

  CellState state_at(std::size_t i) const { return table_[i].state; }
  const T& value_at(std::size_t i) const { return table_[i].value; }

  // All positions hold a value or a tombstone; an insert may not find room
  // without rehashing.
  bool full() const noexcept { return used_ + deleted_ == table_.size(); }

  // The abstract contents: the set of occupied values.
  std::set<T> elems() const {
    std::set<T> result;
    for (const Cell& cell : table_) {
      if (cell.state == CellState::Some) result.insert(cell.value);
    }
    return result;
  }

  // post "hs.contains.iff": result holds iff x is a member.
  bool contains(const T& x) {
    ctx_->check_invariant("hashInv", [&] { return invariant_holds(); });
    std::ptrdiff_t pos = locate(x);
    bool found = pos >= 0 &&
                 table_[static_cast<std::size_t>(pos)].state ==
                     CellState::Some &&
                 table_[static_cast<std::size_t>(pos)].value == x;
    ctx_->check_post("hs.contains.iff",
                     [&] { return found == (elems().count(x) > 0); });
    return found;
  }

  // pre "x !in elems"; post "hs.insert.elems": contents gain exactly x.
  void insert(const T& x) {
    ctx_->check_invariant("hashInv", [&] { return invariant_holds(); });
    ctx_->check_pre("x !in elems", [&] { return elems().count(x) == 0; });
    auto old = ctx_->capture_old([&] { return snapshot(elems()); });

    if (full()) {
      rehash();
    }
    insert_aux(x);

    ctx_->check_post("hs.insert.elems", [&] {
      auto expected = old->value();
      expected.insert(x);
      return elems() == expected;
    });
    ctx_->check_invariant("hashInv", [&] { return invariant_holds(); });
    ctx_->check_invariant("counting", [&] { return counting_holds(); });
  }

  // pre "x in elems"; post "hs.delete.elems": contents lose exactly x.
  // The cell becomes a tombstone, not Nil, so probe chains stay intact.
  void remove(const T& x) {
    ctx_->check_invariant("hashInv", [&] { return invariant_holds(); });
    ctx_->check_pre("x in elems", [&] { return elems().count(x) > 0; });
    auto old = ctx_->capture_old([&] { return snapshot(elems()); });

    std::ptrdiff_t pos = locate(x);
    if (pos >= 0 && table_[static_cast<std::size_t>(pos)].state ==
                        CellState::Some &&
        table_[static_cast<std::size_t>(pos)].value == x) {
      Cell& cell = table_[static_cast<std::size_t>(pos)];
      cell.state = faults::armed(faults::Fault::TombstoneWrittenAsNil)
                       ? CellState::Nil
                       : CellState::Deleted;
      cell.value = T{};
      ++deleted_;
      --used_;
    }

    ctx_->check_post("hs.delete.elems", [&] {
      auto expected = old->value();
      expected.erase(x);
      return elems() == expected;
    });
    ctx_->check_invariant("hashInv", [&] { return invariant_holds(); });
    ctx_->check_invariant("counting", [&] { return counting_holds(); });
  }

  // Probe-chain validity: every stored value is reachable from its home
  // slot without crossing a Nil cell or another copy of itself, and the
  // used/deleted counters match the table.
  bool invariant_holds() const {
    if (!counting_holds()) return false;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i].state != CellState::Some) continue;
      if (!valid_pos(table_[i].value, i)) return false;
    }
    return true;
  }

  // used + deleted + nil cells account for every slot.
  bool counting_holds() const {
    std::size_t some = 0;
    std::size_t dead = 0;
    std::size_t nil = 0;
    for (const Cell& cell : table_) {
      switch (cell.state) {
        case CellState::Some:
          ++some;
          break;
        case CellState::Deleted:
          ++dead;
          break;
        case CellState::Nil:
          ++nil;
          break;
      }
    }
    return some == used_ && dead == deleted_ &&
           used_ + deleted_ + nil == table_.size();
  }

 private:
  struct Cell {
    CellState state = CellState::Nil;
    T value{};
  };

  std::size_t home_slot(const T& x) const { return hash_(x) % table_.size(); }

  // Position of x if present; otherwise a free slot on x's probe path,
  // preferring the first tombstone; -1 when the table is full of other
  // values. Scans home..end then wraps 0..home.
  std::ptrdiff_t locate(const T& x) const {
    std::size_t h = home_slot(x);
    std::ptrdiff_t reuse = -1;
    auto scan = [&](std::size_t begin,
                    std::size_t end) -> std::ptrdiff_t {
      for (std::size_t i = begin; i < end; ++i) {
        if (table_[i].state == CellState::Nil) {
          return reuse >= 0 ? reuse : static_cast<std::ptrdiff_t>(i);
        }
        if (table_[i].state == CellState::Some && table_[i].value == x) {
          return static_cast<std::ptrdiff_t>(i);
        }
        if (table_[i].state == CellState::Deleted && reuse < 0) {
          reuse = static_cast<std::ptrdiff_t>(i);
        }
      }
      return -2;  // keep scanning
    };
    std::ptrdiff_t pos = scan(h, table_.size());
    if (pos != -2) return pos;
    pos = scan(0, h);
    if (pos != -2) return pos;
    return reuse;
  }

  // Insert into a table known not to be full.
  void insert_aux(const T& x) {
    std::ptrdiff_t pos = locate(x);
    if (pos < 0) return;  // unreachable when !full(); defensive for Log mode
    Cell& cell = table_[static_cast<std::size_t>(pos)];
    if (cell.state == CellState::Some) {
      return;  // duplicate insert in Log mode: leave contents untouched
    }
    if (cell.state == CellState::Deleted) {
      --deleted_;
    }
    cell.state = CellState::Some;
    cell.value = x;
    ++used_;
  }

  // Grow to 2n+1 slots, re-inserting occupied values and forgetting
  // tombstones.
  void rehash() {
    std::vector<Cell> old_table = std::move(table_);
    table_.assign(old_table.size() * 2 + 1, Cell{});
    used_ = 0;
    deleted_ = 0;
    for (const Cell& cell : old_table) {
      if (cell.state == CellState::Some) {
        insert_aux(cell.value);
      }
    }
    ctx_->check_invariant("counting", [&] { return counting_holds(); });
  }

  bool valid_pos(const T& x, std::size_t pos) const {
    std::size_t h = home_slot(x);
    std::size_t i = h;
    while (i != pos) {
      if (table_[i].state == CellState::Nil) return false;
      if (table_[i].state == CellState::Some && table_[i].value == x) {
        return false;
      }
      i = (i + 1) % table_.size();
      if (i == h) return false;  // wrapped all the way around
    }
    return true;
  }

  ContractContext* ctx_;
  HashFn hash_;
  std::vector<Cell> table_;
  std::size_t used_ = 0;
  std::size_t deleted_ = 0;
};

}  // namespace veralgo
