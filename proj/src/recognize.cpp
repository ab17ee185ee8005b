#include "dilog/recognize.hpp"

namespace dilog {

std::optional<Rational> recognize_rational(const BigReal& v, const Int& qmax, int tol_digits) {
  if (v.is_nan()) return std::nullopt;
  if (qmax < 1) throw Error("qmax must be >= 1");
  PrecisionContext at{tol_digits, v.precision()};
  BigReal tol = BigReal::pow10(-tol_digits, at);

  Int p0(1), q0(0);
  Int a0 = v.floor();
  Int p1 = a0, q1(1);
  BigReal frac = v - BigReal(a0, at);

  // stop once the remainder is below the working resolution: further
  // continued-fraction digits would be noise
  BigReal noise = ldexp2(abs(v) + 1, -static_cast<long>(v.precision()) + 8);

  for (int step = 0; step < 4 * tol_digits + 64; ++step) {
    if (q1 > qmax) return std::nullopt;
    Rational cand(p1, q1);
    if (abs(v - BigReal(cand, at)) < tol) return cand;
    if (frac < noise) return std::nullopt;
    BigReal inv = 1 / frac;
    Int a = inv.floor();
    frac = inv - BigReal(a, at);
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return std::nullopt;
}

std::optional<Rational> recognize_confirmed(
    const std::function<BigReal(const PrecisionContext&)>& eval, const PrecisionContext& ctx,
    const Int& qmax, int tol_digits) {
  auto first = recognize_rational(eval(ctx), qmax, tol_digits);
  if (!first) return std::nullopt;
  PrecisionContext ctx2 = ctx.doubled();
  int tol2 = 2 * ctx.target_digits - 20;
  BigReal v2 = eval(ctx2);
  if (abs(v2 - BigReal(*first, ctx2)) < BigReal::pow10(-tol2, ctx2)) return first;
  return std::nullopt;
}

}  // namespace dilog
