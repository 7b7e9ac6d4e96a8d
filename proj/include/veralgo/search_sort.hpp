/*
 * Binary search over sorted sequences and in-place insertion sort, with
 * sortedness and permutation contracts.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "veralgo/common.hpp"
#include "veralgo/contracts.hpp"

namespace veralgo {

// True iff s is nondecreasing.
bool is_sorted_seq(std::span<const Key> s);

// Index of some occurrence of x in sorted s, or nullopt when absent.
//   pre  "isSorted": is_sorted_seq(s)
//   loop "bsearch.loopInv": x occurs in neither s[..low) nor s[high..)
//   post "bsearch.post"
// With duplicates any matching index is a correct answer.
std::optional<std::size_t> binary_search_seq(ContractContext& ctx,
                                             std::span<const Key> s, Key x);

// Sorts s in place.
//   inner loop "sort.innerInv": everything left of the hole is pairwise
//   ordered, ignoring the hole itself
//   post "sort.post.isSorted", "sort.post.permutation"
void insertion_sort(ContractContext& ctx, std::vector<Key>& s);

}  // namespace veralgo
