#include "dilog/polylog.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace dilog {

namespace {

void check_policy(const PolylogDomainPolicy& p) {
  if (!(p.series_cutoff >= 0.25 && p.series_cutoff <= 0.75))
    throw Error("series_cutoff outside [0.25, 0.75]");
}

BigReal pi2_over_6(const PrecisionContext& ctx) {
  BigReal pi = BigReal::pi(ctx);
  return pi * pi / 6;
}

// Bernoulli numbers B_0, B_1, ... (B_1 = -1/2), cached across calls.
const Rational& bernoulli(size_t n) {
  static std::vector<Rational> table{Rational(1)};
  static std::vector<Int> binom_row;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) {
    size_t m = table.size();  // computing B_m
    // binomials C(m+1, k) for k = 0..m-1
    Rational acc(0);
    Int c(1);  // C(m+1, 0)
    for (size_t k = 0; k < m; ++k) {
      acc += Rational(c) * table[k];
      c = c * Int(m + 1 - k) / Int(k + 1);
    }
    table.push_back(-acc / Rational(Int(m + 1)));
  }
  return table[n];
}

}  // namespace

long li_series_order(const BigReal& abs_z, int m, int digits) {
  if (abs_z.is_zero()) return 1;
  double az = abs_z.to_double();
  if (az >= 1.0) throw Error("series order undefined for |z| >= 1");
  // smallest N with az^(N+1) / ((N+1)^m (1-az)) < 10^-digits; the n^m factor
  // only helps, so the log-linear bound is safe
  double need = digits * std::log(10.0) + std::log(1.0 / (1.0 - az));
  long n = static_cast<long>(std::ceil(need / -std::log(az))) + 2;
  return std::max(n, 4L);
}

BigReal li_series_direct(const BigReal& z, int m, long order, const PrecisionContext& ctx) {
  BigReal sum(ctx);
  BigReal zpow(1, ctx);
  for (long n = 1; n <= order; ++n) {
    zpow = zpow * z;
    BigReal term = zpow;
    for (int i = 0; i < m; ++i) term = term / n;
    sum += term;
  }
  return sum;
}

BigReal li2_real(const BigReal& z, const PrecisionContext& ctx, const PolylogDomainPolicy& policy) {
  check_policy(policy);
  if (z > 1L) throw Error("li2_real domain is z <= 1");
  if (z.is_zero()) return BigReal(ctx);
  if (z == 1L) return pi2_over_6(ctx);

  int digits = ctx.target_digits + 6;
  BigReal cutoff(Rational(Int(static_cast<long>(policy.series_cutoff * 1000)), Int(1000)), ctx);

  if (z.sign() < 0) {
    // Landen: Li2(z) = -Li2(z/(z-1)) - log^2(1-z)/2, with z/(z-1) in (0,1)
    BigReal w = z / (z - 1);
    BigReal l = log(1 - z);
    return -li_series_direct(w, 2, li_series_order(w, 2, digits), ctx) - l * l / 2;
  }
  if (z <= cutoff) return li_series_direct(z, 2, li_series_order(z, 2, digits), ctx);
  // Euler reflection: Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)
  BigReal w = 1 - z;
  BigReal tail = li_series_direct(w, 2, li_series_order(w, 2, digits), ctx);
  return pi2_over_6(ctx) - log(z) * log(w) - tail;
}

BigReal li_m(const BigReal& z, int m, const PrecisionContext& ctx,
             const PolylogDomainPolicy& policy) {
  check_policy(policy);
  if (m < 2) throw Error("li_m requires m >= 2");
  BigReal az = abs(z);
  if (az > 1L) throw Error("li_m domain is |z| <= 1");
  if (m == 2) return li2_real(z, ctx, policy);
  if (az == 1L) {
    // zeta-based closed forms at the boundary
    BigReal zeta(ctx);
    mpfr_zeta_ui(zeta.raw(), static_cast<unsigned long>(m), MPFR_RNDN);
    if (z.sign() > 0) return zeta;
    BigReal two_pow(Rational(Int(1), Int(1) << (m - 1)), ctx);
    return -(1 - two_pow) * zeta;  // -eta(m)
  }
  return li_series_direct(z, m, li_series_order(az, m, ctx.target_digits + 6), ctx);
}

namespace {

BigComplex li2_complex_series(const BigComplex& z, const PrecisionContext& ctx) {
  long order = li_series_order(abs(z), 2, ctx.target_digits + 6);
  BigComplex sum(0, ctx);
  BigComplex zpow{BigReal(1, ctx), BigReal(0, ctx)};
  for (long n = 1; n <= order; ++n) {
    zpow = zpow * z;
    long n2 = n * n;
    sum = sum + BigComplex{zpow.re / n2, zpow.im / n2};
  }
  return sum;
}

// Li2(z) = sum_{n>=0} B_n u^{n+1} / (n+1)!  with u = -log(1-z); converges for
// |u| < 2pi, which covers the annulus that inversion/reflection leave behind.
BigComplex li2_complex_log_series(const BigComplex& z, const PrecisionContext& ctx) {
  BigComplex one(1, ctx);
  BigComplex u = -log(one - z);
  BigReal threshold = BigReal::pow10(-(ctx.target_digits + 8), ctx);
  BigComplex term = u;  // u^{n+1}/(n+1)! for n = 0
  BigComplex sum = term;
  for (size_t n = 1; n < 4096; ++n) {
    term = term * u;
    term = {term.re / static_cast<long>(n + 1), term.im / static_cast<long>(n + 1)};
    if (n >= 2 && (n % 2) == 1) continue;  // odd Bernoulli numbers vanish
    BigReal bn(bernoulli(n), ctx);
    BigComplex contrib{term.re * bn, term.im * bn};
    sum = sum + contrib;
    if (abs(contrib) < threshold) return sum;
  }
  throw Error("log-series for Li2 did not converge");
}

}  // namespace

BigComplex li2_complex(const BigComplex& z, const PrecisionContext& ctx,
                       const PolylogDomainPolicy& policy) {
  check_policy(policy);
  if (z.im.is_zero()) {
    if (z.re > 1L) throw Error("li2_complex: argument on the branch cut [1, inf)");
    return {li2_real(z.re, ctx, policy), BigReal(0, ctx)};
  }
  BigReal az = abs(z);
  BigReal half(Rational(Int(1), Int(2)), ctx);
  BigComplex one(1, ctx);
  if (az <= half) return li2_complex_series(z, ctx);
  if (az > 1L) {
    // inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2
    BigComplex inv = one / z;
    BigComplex l = log(-z);
    BigComplex l2 = l * l;
    BigComplex rest = li2_complex(inv, ctx, policy);
    BigReal p6 = pi2_over_6(ctx);
    return {-rest.re - p6 - l2.re / 2, -rest.im - l2.im / 2};
  }
  BigComplex w = one - z;
  if (abs(w) <= half) {
    // reflection: Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)
    BigComplex cross = log(z) * log(w);
    BigComplex rest = li2_complex_series(w, ctx);
    BigReal p6 = pi2_over_6(ctx);
    return {p6 - cross.re - rest.re, -cross.im - rest.im};
  }
  return li2_complex_log_series(z, ctx);
}

BigReal rogers_L(const BigReal& z, const PrecisionContext& ctx) {
  if (abs(z) > 1L) throw Error("rogers_L domain is [-1, 1]");
  if (z.is_zero()) return BigReal(ctx);
  if (z == 1L) return pi2_over_6(ctx);
  if (z == -1L) return -pi2_over_6(ctx) / 2;
  BigReal half(Rational(Int(1), Int(2)), ctx);
  if (z > half) return pi2_over_6(ctx) - rogers_L(1 - z, ctx);
  return li2_real(z, ctx) + log(abs(z)) * log(1 - z) / 2;
}

BigReal five_term_residual(const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
  if (x.is_zero() || y.is_zero()) return BigReal(ctx);
  if (x.sign() < 0 || y.sign() < 0 || x >= 1L || y >= 1L)
    throw Error("five_term_residual domain is the open unit square");
  BigReal xy = x * y;
  BigReal d = 1 - xy;
  BigReal u = x * (1 - y) / d;
  BigReal v = y * (1 - x) / d;
  return rogers_L(x, ctx) + rogers_L(y, ctx) - rogers_L(xy, ctx) - rogers_L(u, ctx) -
         rogers_L(v, ctx);
}

}  // namespace dilog
