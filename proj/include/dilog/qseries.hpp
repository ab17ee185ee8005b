#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dilog/rational.hpp"

namespace dilog {

/// Truncated series in q with exact integer coefficients (index = exponent),
/// valid through q^order.
struct PowerSeries {
  std::vector<Int> c;
  int order = 0;

  static PowerSeries zero(int order);
  static PowerSeries one(int order);

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.order == b.order && a.c == b.c;
  }
  PowerSeries shifted(int k) const;  // multiply by q^k
};

/// 1/(q^step; q^step)_m to q^order: the generating function of partitions
/// into parts from {step, 2 step, ..., m step} (m unset = infinity).
PowerSeries inv_pochhammer_series(int step, std::optional<int> parts_bound, int order);

/// Rank-2 Nahm sum F_{A,B,C,J}: A symmetric positive definite with even
/// diagonal (so the quadratic form is integral), J positive.
struct NahmSumSpec {
  long a11, a12, a22;
  long b1, b2;
  long c0;
  int j1, j2;
};

PowerSeries nahm_sum_series(const NahmSumSpec& spec, int order);

/// Partitions into parts congruent to one of the residues mod modulus
/// (residue == modulus means multiples of the modulus).
struct ProductSpec {
  int modulus;
  std::vector<int> residues;
};

PowerSeries product_side_series(const ProductSpec& spec, int order);

struct QSeriesReport {
  int which;
  int order;
  bool match;
  std::optional<int> first_mismatch;
  std::vector<Int> nahm_prefix, product_prefix;  // first few coefficients
};

/// The three sum-product identities at A = (2,3;3,6), J = (1,3), C = 0 with
/// B = (0,0), (1,3), (2,3); product sides mod 9 with residues {1,3,6,8},
/// {2,3,6,7}, {3,4,5,6}. (The first residue set is the corrected one: the
/// commonly printed {1,3,6,9} variant fails at q^8, which
/// kursungoz_printed_variant demonstrates.)
QSeriesReport kursungoz_check(int which, int order);

/// Identity `which` compared against an explicit product side.
QSeriesReport kursungoz_check_against(int which, const ProductSpec& product, int order);

/// The printed-variant product side for identity 1 (residues {1,3,6,9}).
QSeriesReport kursungoz_printed_variant(int order);

}  // namespace dilog
