/*
 * Max-priority queue on a binary heap stored in a flat buffer.
 *
 * The heap property (every node <= its parent) is the class invariant and is
 * evaluated at the boundary of every public operation; the sift loops check
 * their own relaxed invariants per iteration.
 */
#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "veralgo/common.hpp"
#include "veralgo/contracts.hpp"

namespace veralgo {

class MaxHeap {
 public:
  // The context must outlive the heap. Capacity grows by doubling when full.
  explicit MaxHeap(ContractContext& ctx, std::size_t initial_capacity = 10);

  bool is_empty() const noexcept { return size_ == 0; }
  std::size_t size() const noexcept { return size_; }
  std::size_t capacity() const noexcept { return buffer_.size(); }

  // Live slots in heap order; the multiset of this span is the container's
  // abstract contents.
  std::span<const Key> items() const noexcept {
    return {buffer_.data(), size_};
  }
  std::multiset<Key> elems() const { return as_multiset(items()); }

  // post "heap.insert.elems": contents gain exactly one x.
  void insert(Key x);

  // pre "!isEmpty"
  // post "heap.deleteMax.isMax", "heap.deleteMax.elems"
  // In Log mode on an empty heap, the violation is recorded and 0 returned.
  Key delete_max();

  // pre "getMax.!isEmpty"; post "heap.getMax.isMax"; no mutation.
  Key get_max();

  bool invariant_holds() const;

 private:
  void grow();
  void heapify_up();
  void heapify_down();
  bool heapify_up_inv(std::size_t k) const;
  bool heapify_down_inv(std::size_t k) const;

  ContractContext* ctx_;
  std::vector<Key> buffer_;
  std::size_t size_ = 0;
  std::size_t initial_capacity_;
};

}  // namespace veralgo
