#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dilog/precision.hpp"
#include "dilog/rational.hpp"

namespace dilog {

/// Dense integer polynomial, coefficients in ascending degree order.
/// The zero polynomial has an empty coefficient vector (degree -1).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial x_power(int k);  // x^k
  static IntPolynomial constant(Int v);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0); }
  const Int& leading() const;

  friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator-(const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) { return p.c_ == q.c_; }

  IntPolynomial scaled(const Int& k) const;
  IntPolynomial pow(unsigned e) const;
  IntPolynomial derivative() const;

  /// Exact Euclidean division. Every elimination step must divide exactly
  /// over the integers (always true for divisors monic up to sign); a
  /// non-exact step throws.
  static std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& num,
                                                        const IntPolynomial& den);

  /// gcd over Q, returned as a primitive integer polynomial with positive
  /// leading coefficient.
  static IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);

  /// Squarefree decomposition (Yun): list of (factor, multiplicity) with
  /// distinct-root factors; product of factor^mult equals p up to a rational
  /// constant.
  static std::vector<std::pair<IntPolynomial, int>> squarefree_decompose(const IntPolynomial& p);

  Int content() const;
  IntPolynomial primitive() const;

  BigReal eval(const BigReal& x) const;          // Horner at x's precision
  Rational eval(const Rational& x) const;        // exact
  int sign_at(const Rational& x) const;

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Int> c_;
};

}  // namespace dilog
