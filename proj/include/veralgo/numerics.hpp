/*
 * Euclidean integer division and O(log n) natural-number exponentiation,
 * with their contracts evaluated at runtime.
 *
 * Arithmetic is over exact rationals so "equals the naive definition" is a
 * literally testable equality; repeated squaring and repeated products
 * would round differently in floating point.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "veralgo/contracts.hpp"

namespace veralgo {

// Exact rational number. Always stored in lowest terms with a positive
// denominator; equality and ordering are exact.
class Rational {
 public:
  using BigInt = boost::multiprecision::cpp_int;

  Rational() : value_(0) {}
  Rational(std::int64_t n) : value_(n) {}  // NOLINT: implicit by design
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Parses "n" or "n/d"; throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.value_ + b.value_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.value_ - b.value_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.value_ * b.value_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }

 private:
  using Backend = boost::multiprecision::cpp_rational;

  explicit Rational(Backend value) : value_(std::move(value)) {}

  Backend value_;
};

struct DivResult {
  std::uint64_t quotient = 0;
  std::uint64_t remainder = 0;

  bool operator==(const DivResult&) const = default;
};

// Quotient and remainder of dividing n by d.
//   pre  "d>0":       d > 0
//   post "div.post":  q*d + r == n and r < d
// In checking modes, small quotients run the repeated-subtraction loop and
// evaluate its invariant ("div.loopInv") each iteration; large quotients and
// Off mode use the builtin division, which produces the same result.
DivResult div_euclid(ContractContext& ctx, std::uint64_t n, std::uint64_t d);

// x^n by the defining product of n copies of x; power_naive(x, 0) == 1.
Rational power_naive(const Rational& x, std::uint64_t n);

// x^n by repeated squaring, O(log n) multiplications.
//   post "power.post": result equals power_naive(x, n), checked per
//   recursive call in checking modes.
Rational power_dc(ContractContext& ctx, const Rational& x, std::uint64_t n);

}  // namespace veralgo
