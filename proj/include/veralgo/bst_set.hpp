/*
 * Sorted integer set on an unbalanced binary search tree.
 *
 * The class invariant is checked structurally: the in-order sequence must be
 * strictly increasing, which is equivalent to BST ordering with no
 * duplicates. Deleting a two-child node replaces it with the left subtree's
 * maximum (the predecessor), a fixed deterministic rule.
 */
#pragma once

#include <memory>
#include <set>
#include <vector>

#include "veralgo/common.hpp"
#include "veralgo/contracts.hpp"

namespace veralgo {

class BstSet {
 public:
  explicit BstSet(ContractContext& ctx) : ctx_(&ctx) {}

  bool empty() const noexcept { return root_ == nullptr; }

  // post "bst.insert.elems": contents gain x; inserting an existing value
  // does nothing.
  void insert(Key x);

  // post "bst.contains.iff"
  bool contains(Key x) const;

  // pre "min.nonempty" / "max.nonempty"; post extremal member.
  Key min() const;
  Key max() const;

  // post "bst.delete.elems": contents lose x; deleting an absent value does
  // nothing.
  void remove(Key x);

  // post "bst.asSeq.sorted": strictly increasing, element set == contents.
  std::vector<Key> as_sorted_vector() const;

  std::set<Key> elems() const;

  bool invariant_holds() const;

  // Value at the root, for tests that pin down the deterministic delete
  // rule. Requires a nonempty tree.
  Key root_value() const { return root_->value; }

 private:
  struct Node {
    explicit Node(Key v) : value(v) {}
    Key value;
    std::unique_ptr<Node> left;
    std::unique_ptr<Node> right;
  };

  static void insert_node(std::unique_ptr<Node>& node, Key x);
  static std::unique_ptr<Node> delete_node(std::unique_ptr<Node> node, Key x);
  static Key subtree_max(const Node& node);
  static Key subtree_min(const Node& node);
  static void in_order(const Node* node, std::vector<Key>& out);

  ContractContext* ctx_;
  std::unique_ptr<Node> root_;
};

}  // namespace veralgo
