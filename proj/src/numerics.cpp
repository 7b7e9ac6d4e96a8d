#include "veralgo/numerics.hpp"

#include <stdexcept>

namespace veralgo {

namespace {

// Above this quotient the subtraction loop is pointless busywork; the
// contract, not the loop, is the exported behaviour.
constexpr std::uint64_t kSubtractionLoopLimit = 1u << 16;

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : value_(0) {
  if (denominator == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  BigInt num(numerator);
  BigInt den(denominator);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  value_ = Backend(num, den);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Backend(BigInt(std::string(text))));
    }
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(Backend(num, den));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("Rational: malformed literal '" +
                                std::string(text) + "'");
  }
}

std::string Rational::to_string() const {
  if (denominator() == 1) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

DivResult div_euclid(ContractContext& ctx, std::uint64_t n, std::uint64_t d) {
  ctx.check_pre("d>0", [&] { return d > 0; });
  if (d == 0) {
    // Log mode continues past the violated precondition; division degrades
    // to the identity split so callers get a defined value.
    return DivResult{0, n};
  }

  DivResult result;
  if (ctx.mode() != ContractMode::Off && n / d <= kSubtractionLoopLimit) {
    std::uint64_t q = 0;
    std::uint64_t r = n;
    while (r >= d) {
      ctx.check_invariant("div.loopInv", [&] { return q * d + r == n; });
      q += 1;
      r -= d;
    }
    result = DivResult{q, r};
  } else {
    result = DivResult{n / d, n % d};
  }

  ctx.check_post("div.post", [&] {
    return result.quotient * d + result.remainder == n && result.remainder < d;
  });
  return result;
}

Rational power_naive(const Rational& x, std::uint64_t n) {
  Rational product(1);
  for (std::uint64_t i = 0; i < n; ++i) {
    product = product * x;
  }
  return product;
}

Rational power_dc(ContractContext& ctx, const Rational& x, std::uint64_t n) {
  Rational result(1);
  if (n == 0) {
    result = Rational(1);
  } else if (n == 1) {
    result = x;
  } else if (n % 2 == 0) {
    Rational half = power_dc(ctx, x, n / 2);
    result = half * half;
  } else {
    Rational half = power_dc(ctx, x, (n - 1) / 2);
    result = half * half * x;
  }
  ctx.check_post("power.post", [&] { return result == power_naive(x, n); });
  return result;
}

}  // namespace veralgo
