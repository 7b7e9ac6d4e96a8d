#include "veralgo/max_heap.hpp"

#include <algorithm>

#include "veralgo/faults.hpp"

namespace veralgo {

namespace {

bool is_max_of(Key x, const std::multiset<Key>& m) {
  if (m.count(x) == 0) return false;
  return std::all_of(m.begin(), m.end(), [&](Key y) { return y <= x; });
}

}  // namespace

MaxHeap::MaxHeap(ContractContext& ctx, std::size_t initial_capacity)
    : ctx_(&ctx),
      buffer_(std::max<std::size_t>(initial_capacity, 1)),
      initial_capacity_(std::max<std::size_t>(initial_capacity, 1)) {}

bool MaxHeap::invariant_holds() const {
  if (size_ > buffer_.size()) return false;
  for (std::size_t i = 1; i < size_; ++i) {
    if (buffer_[i] > buffer_[(i - 1) / 2]) return false;
  }
  return true;
}

void MaxHeap::insert(Key x) {
  ctx_->check_invariant("heapInv", [&] { return invariant_holds(); });
  auto old = ctx_->capture_old([&] { return snapshot(elems()); });

  if (size_ == buffer_.size()) {
    grow();
  }
  buffer_[size_] = x;
  ++size_;
  heapify_up();

  ctx_->check_post("heap.insert.elems", [&] {
    auto expected = old->value();
    expected.insert(x);
    return elems() == expected;
  });
  ctx_->check_invariant("heapInv", [&] { return invariant_holds(); });
}

Key MaxHeap::delete_max() {
  ctx_->check_invariant("heapInv", [&] { return invariant_holds(); });
  ctx_->check_pre("!isEmpty", [&] { return !is_empty(); });
  if (is_empty()) return 0;

  auto old = ctx_->capture_old([&] { return snapshot(elems()); });
  Key x = buffer_[0];
  --size_;
  if (size_ > 0) {
    buffer_[0] = buffer_[size_];
    heapify_down();
  }

  ctx_->check_post("heap.deleteMax.isMax",
                   [&] { return is_max_of(x, old->value()); });
  ctx_->check_post("heap.deleteMax.elems", [&] {
    auto expected = old->value();
    expected.erase(expected.find(x));
    return elems() == expected;
  });
  ctx_->check_invariant("heapInv", [&] { return invariant_holds(); });
  return x;
}

Key MaxHeap::get_max() {
  ctx_->check_pre("getMax.!isEmpty", [&] { return !is_empty(); });
  if (is_empty()) return 0;
  Key x = buffer_[0];
  ctx_->check_post("heap.getMax.isMax", [&] { return is_max_of(x, elems()); });
  return x;
}

void MaxHeap::grow() {
  std::size_t new_capacity = size_ == 0 ? initial_capacity_ : 2 * size_;
  buffer_.resize(new_capacity);
}

void MaxHeap::heapify_up() {
  std::size_t k = size_ - 1;
  while (k > 0 && buffer_[k] > buffer_[(k - 1) / 2]) {
    ctx_->check_invariant("heapifyUpInv", [&] { return heapify_up_inv(k); });
    std::swap(buffer_[k], buffer_[(k - 1) / 2]);
    k = (k - 1) / 2;
  }
}

void MaxHeap::heapify_down() {
  std::size_t k = 0;
  while (true) {
    ctx_->check_invariant("heapifyDownInv",
                          [&] { return heapify_down_inv(k); });
    std::size_t left = 2 * k + 1;
    std::size_t right = 2 * k + 2;
    if (left >= size_) {
      return;  // reached the bottom
    }
    bool right_wins = right < size_ && buffer_[right] > buffer_[left];
    if (faults::armed(faults::Fault::HeapChildComparisonFlipped)) {
      right_wins = right < size_ && buffer_[right] < buffer_[left];
    }
    std::size_t max_child = right_wins ? right : left;
    if (buffer_[k] > buffer_[max_child]) {
      return;  // already ordered
    }
    std::swap(buffer_[k], buffer_[max_child]);
    k = max_child;
  }
}

// While a node moves up at index k: all other nodes are ordered with their
// parents, and k's children are ordered with k's parent.
bool MaxHeap::heapify_up_inv(std::size_t k) const {
  if (size_ > buffer_.size()) return false;
  for (std::size_t i = 1; i < size_; ++i) {
    if (i != k && buffer_[i] > buffer_[(i - 1) / 2]) return false;
  }
  if (k > 0) {
    for (std::size_t i = 1; i < size_; ++i) {
      if ((i - 1) / 2 == k &&
          buffer_[i] > buffer_[((i - 1) / 2 - 1) / 2]) {
        return false;
      }
    }
  }
  return true;
}

// While a node moves down at index k: nodes whose parent is not k are
// ordered, and k's children are ordered with k's parent.
bool MaxHeap::heapify_down_inv(std::size_t k) const {
  if (size_ > buffer_.size()) return false;
  for (std::size_t i = 1; i < size_; ++i) {
    if ((i - 1) / 2 != k && buffer_[i] > buffer_[(i - 1) / 2]) return false;
  }
  if (k > 0) {
    for (std::size_t i = 1; i < size_; ++i) {
      if ((i - 1) / 2 == k &&
          buffer_[i] > buffer_[((i - 1) / 2 - 1) / 2]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace veralgo
