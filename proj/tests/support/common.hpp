#pragma once

#include <random>
#include <string>

#include "dilog/precision.hpp"

namespace testsupport {

using dilog::BigReal;
using dilog::Int;
using dilog::PrecisionContext;
using dilog::Rational;

// |a - b| < 10^-digits, with b given as a decimal oracle string
inline bool close_to(const BigReal& a, const std::string& frozen, int digits,
                     const PrecisionContext& ctx) {
  BigReal b(frozen, ctx);
  return abs(a - b) < BigReal::pow10(-digits, ctx);
}

inline bool below(const BigReal& a, int neg_exp10, const PrecisionContext& ctx) {
  return abs(a) < BigReal::pow10(-neg_exp10, ctx);
}

// deterministic uniform rationals in (lo, hi) with 64-bit dyadic resolution
class RandomReals {
 public:
  explicit RandomReals(uint64_t seed) : rng_(seed) {}

  Rational next_unit() {
    uint64_t k = rng_();
    // keep away from the endpoints
    Rational r(Int(k), Int(1) << 64);
    return Rational(1, 1024) + r * Rational(1022, 1024);
  }

  BigReal next(const PrecisionContext& ctx) { return BigReal(next_unit(), ctx); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testsupport
