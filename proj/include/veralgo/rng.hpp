/*
 * Seeded random source used by fuzzing and the property suites.
 *
 * std::mt19937_64 output is fully pinned by the standard, but the standard
 * distributions are not, so the derived draws below stick to raw engine
 * output and modulo reduction. Identical seeds replay identical traces on
 * any conforming implementation.
 */
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace veralgo {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish in [0, n); n must be positive. The modulo bias is
  // irrelevant at the instance sizes used here.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  // Uniform-ish in [lo, hi], inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (engine_() & 1) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace veralgo
