#include "veralgo/bst_set.hpp"

#include <span>

#include "veralgo/faults.hpp"

namespace veralgo {

void BstSet::insert(Key x) {
  ctx_->check_invariant("bstInv", [&] { return invariant_holds(); });
  auto old = ctx_->capture_old([&] { return snapshot(elems()); });

  insert_node(root_, x);

  ctx_->check_post("bst.insert.elems", [&] {
    auto expected = old->value();
    expected.insert(x);
    return elems() == expected;
  });
  ctx_->check_invariant("bstInv", [&] { return invariant_holds(); });
}

bool BstSet::contains(Key x) const {
  const Node* node = root_.get();
  while (node != nullptr) {
    if (x == node->value) break;
    node = x < node->value ? node->left.get() : node->right.get();
  }
  bool found = node != nullptr;
  ctx_->check_post("bst.contains.iff",
                   [&] { return found == (elems().count(x) > 0); });
  return found;
}

Key BstSet::min() const {
  ctx_->check_pre("min.nonempty", [&] { return !empty(); });
  if (empty()) return 0;
  Key m = subtree_min(*root_);
  ctx_->check_post("bst.min.isMin", [&] {
    auto all = elems();
    return all.count(m) > 0 && *all.begin() == m;
  });
  return m;
}

Key BstSet::max() const {
  ctx_->check_pre("max.nonempty", [&] { return !empty(); });
  if (empty()) return 0;
  Key m = subtree_max(*root_);
  ctx_->check_post("bst.max.isMax", [&] {
    auto all = elems();
    return all.count(m) > 0 && *all.rbegin() == m;
  });
  return m;
}

void BstSet::remove(Key x) {
  ctx_->check_invariant("bstInv", [&] { return invariant_holds(); });
  auto old = ctx_->capture_old([&] { return snapshot(elems()); });

  root_ = delete_node(std::move(root_), x);

  ctx_->check_post("bst.delete.elems", [&] {
    auto expected = old->value();
    expected.erase(x);
    return elems() == expected;
  });
  ctx_->check_invariant("bstInv", [&] { return invariant_holds(); });
}

std::vector<Key> BstSet::as_sorted_vector() const {
  std::vector<Key> out;
  in_order(root_.get(), out);
  ctx_->check_post("bst.asSeq.sorted", [&] {
    return is_strictly_increasing(std::span<const Key>(out)) &&
           as_set(std::span<const Key>(out)) == elems();
  });
  return out;
}

std::set<Key> BstSet::elems() const {
  std::vector<Key> seq;
  in_order(root_.get(), seq);
  return std::set<Key>(seq.begin(), seq.end());
}

bool BstSet::invariant_holds() const {
  std::vector<Key> seq;
  in_order(root_.get(), seq);
  return is_strictly_increasing(std::span<const Key>(seq));
}

void BstSet::insert_node(std::unique_ptr<Node>& node, Key x) {
  if (node == nullptr) {
    node = std::make_unique<Node>(x);
    return;
  }
  if (x == node->value) {
    return;
  }
  insert_node(x < node->value ? node->left : node->right, x);
}

std::unique_ptr<BstSet::Node> BstSet::delete_node(std::unique_ptr<Node> node,
                                                  Key x) {
  if (node == nullptr) return nullptr;
  if (x == node->value) {
    if (node->left == nullptr) return std::move(node->right);
    if (node->right == nullptr) return std::move(node->left);
    // Two children: take the predecessor and remove it from the left
    // subtree so it appears exactly once.
    node->value = subtree_max(*node->left);
    if (!faults::armed(faults::Fault::BstDeleteSkipsRestore)) {
      node->left = delete_node(std::move(node->left), node->value);
    }
  } else if (x > node->value) {
    node->right = delete_node(std::move(node->right), x);
  } else {
    node->left = delete_node(std::move(node->left), x);
  }
  return node;
}

Key BstSet::subtree_max(const Node& node) {
  return node.right == nullptr ? node.value : subtree_max(*node.right);
}

Key BstSet::subtree_min(const Node& node) {
  return node.left == nullptr ? node.value : subtree_min(*node.left);
}

void BstSet::in_order(const Node* node, std::vector<Key>& out) {
  if (node == nullptr) return;
  in_order(node->left.get(), out);
  out.push_back(node->value);
  in_order(node->right.get(), out);
}

}  // namespace veralgo
