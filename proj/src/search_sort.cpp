#include "veralgo/search_sort.hpp"

#include <algorithm>

namespace veralgo {

namespace {

bool occurs_in(std::span<const Key> s, Key x) {
  return std::find(s.begin(), s.end(), x) != s.end();
}

}  // namespace

bool is_sorted_seq(std::span<const Key> s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] > s[i]) return false;
  }
  return true;
}

std::optional<std::size_t> binary_search_seq(ContractContext& ctx,
                                             std::span<const Key> s, Key x) {
  ctx.check_pre("isSorted", [&] { return is_sorted_seq(s); });

  std::size_t low = 0;
  std::size_t high = s.size();
  std::optional<std::size_t> found;
  while (low < high) {
    ctx.check_invariant("bsearch.loopInv", [&] {
      return !occurs_in(s.subspan(0, low), x) &&
             !occurs_in(s.subspan(high), x);
    });
    std::size_t mid = low + (high - low) / 2;
    if (s[mid] < x) {
      low = mid + 1;
    } else if (s[mid] > x) {
      high = mid;
    } else {
      found = mid;
      break;
    }
  }

  ctx.check_post("bsearch.post", [&] {
    if (found.has_value()) return *found < s.size() && s[*found] == x;
    return !occurs_in(s, x);
  });
  return found;
}

void insertion_sort(ContractContext& ctx, std::vector<Key>& s) {
  auto old = ctx.capture_old(
      [&] { return snapshot(as_multiset(std::span<const Key>(s))); });

  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && s[j - 1] > s[j]) {
      ctx.check_invariant("sort.innerInv", [&] {
        for (std::size_t l = 0; l < i; ++l) {
          for (std::size_t r = l + 1; r <= i; ++r) {
            if (r != j && s[l] > s[r]) return false;
          }
        }
        return true;
      });
      std::swap(s[j - 1], s[j]);
      --j;
    }
  }

  ctx.check_post("sort.post.isSorted",
                 [&] { return is_sorted_seq(std::span<const Key>(s)); });
  ctx.check_post("sort.post.permutation", [&] {
    return as_multiset(std::span<const Key>(s)) == old->value();
  });
}

}  // namespace veralgo
