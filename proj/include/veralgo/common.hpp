#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace veralgo {

// Element type shared by the searching/sorting routines and the containers.
using Key = std::int64_t;

template <typename T>
bool has_duplicates(std::span<const T> s) {
  std::set<T> seen;
  for (const T& x : s) {
    if (!seen.insert(x).second) return true;
  }
  return false;
}

template <typename T>
std::set<T> as_set(std::span<const T> s) {
  return std::set<T>(s.begin(), s.end());
}

template <typename T>
std::multiset<T> as_multiset(std::span<const T> s) {
  return std::multiset<T>(s.begin(), s.end());
}

template <typename T>
bool is_strictly_increasing(std::span<const T> s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i - 1] < s[i])) return false;
  }
  return true;
}

}  // namespace veralgo
