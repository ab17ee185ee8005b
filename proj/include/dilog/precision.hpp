#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "dilog/rational.hpp"

namespace dilog {

/// Precision contract for all analytic evaluation: target_digits is what the
/// caller may rely on, working_bits is what the arithmetic actually carries.
/// working_bits >= ceil(target_digits * log2(10)) + 64 guard bits.
struct PrecisionContext {
  int target_digits;
  mpfr_prec_t working_bits;

  static PrecisionContext digits(int d);
  PrecisionContext doubled() const { return digits(2 * target_digits); }
};

/// Multiprecision real bound to an explicit bit precision. Every operation
/// rounds correctly (MPFR, round-to-nearest) at max(precision of operands),
/// so results are deterministic functions of (inputs, working_bits).
class BigReal {
 public:
  BigReal();  // NaN at minimal precision; assign before use
  explicit BigReal(const PrecisionContext& ctx);
  BigReal(long v, const PrecisionContext& ctx);
  BigReal(const Rational& q, const PrecisionContext& ctx);
  BigReal(const Int& z, const PrecisionContext& ctx);
  BigReal(const std::string& decimal, const PrecisionContext& ctx);
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Int floor() const;
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  /// Scientific-notation string with the given number of significant digits.
  std::string str(int digits) const;

  static BigReal pi(const PrecisionContext& ctx);
  /// 10^k at ctx precision (k may be negative); used for explicit tolerances.
  static BigReal pow10(long k, const PrecisionContext& ctx);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a);
  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator+(long a, const BigReal& b) { return b + a; }
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator*(const BigReal& a, const Rational& q);
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator/(long a, const BigReal& b);
  BigReal& operator+=(const BigReal& b);
  BigReal& operator-=(const BigReal& b);
  BigReal& operator*=(const BigReal& b);
  BigReal& operator/=(const BigReal& b);

  friend int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  friend BigReal abs(const BigReal& a);
  friend BigReal sqrt(const BigReal& a);
  friend BigReal log(const BigReal& a);
  friend BigReal exp(const BigReal& a);
  friend BigReal sin(const BigReal& a);
  friend BigReal cos(const BigReal& a);
  friend BigReal sec(const BigReal& a);
  friend BigReal atan2(const BigReal& y, const BigReal& x);
  friend BigReal pow(const BigReal& base, const BigReal& e);
  /// base^(p/q) for base > 0, via mpfr_pow (correctly rounded).
  friend BigReal pow(const BigReal& base, const Rational& e);
  friend BigReal ldexp2(const BigReal& a, long k);  // a * 2^k

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  explicit BigReal(mpfr_prec_t prec);
  static BigReal like(const BigReal& a, const BigReal& b);  // uninitialized at joint precision
  mpfr_t v_;
};

/// Rectangular complex value over BigReal; just enough for the dilogarithm.
struct BigComplex {
  BigReal re, im;

  BigComplex() = default;
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(long r, const PrecisionContext& ctx) : re(r, ctx), im(0, ctx) {}

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

  BigReal norm2() const { return re * re + im * im; }
  friend BigReal abs(const BigComplex& a) { return sqrt(a.norm2()); }
  /// Principal log: log|z| + i arg(z), arg in (-pi, pi].
  friend BigComplex log(const BigComplex& a);
};

}  // namespace dilog
