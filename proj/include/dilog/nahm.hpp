#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dilog/expr.hpp"
#include "dilog/polynomial.hpp"
#include "dilog/precision.hpp"
#include "dilog/rational.hpp"

namespace dilog {

/// Symmetric rank-2 system  1 - x = x^a y^b,  1 - y^a1 = x^b y^d
/// (a1 = 1 is the standard case).
struct NahmMatrix {
  Rational a, b, d;
  Rational a1 = Rational(1);
};

struct NahmSolution {
  BigReal x, y;
  BigReal res1, res2;  // defining-equation residuals at (x, y)
};

/// All distinct solutions in the open unit square found from a grid of
/// damped-Newton seeds; refined to ctx precision, re-converged at doubled
/// precision, deduplicated at 1e-20, sorted by (x, y).
std::vector<NahmSolution> solve_system(const NahmMatrix& A, const PrecisionContext& ctx,
                                       int grid_size = 32);

/// L(y^a1) + a1 L(x) and its recognized ratio to L(1) (q <= qmax).
/// For a1 = 1 this is L(x) + L(y) = L(xi_A).
std::pair<BigReal, std::optional<Rational>> xi_value(const NahmSolution& sol, const NahmMatrix& A,
                                                     const PrecisionContext& ctx, const Int& qmax);

struct TableRow {
  NahmMatrix A;
  Rational expected;
  std::optional<Rational> ratio;
  std::optional<NahmSolution> solution;
  bool ambiguous = false;  // several solutions recognize to different ratios
  bool pass = false;
};

/// The eleven standard-matrix rows with their L(xi_A)/L(1) ratios.
std::vector<TableRow> reproduce_table(const PrecisionContext& ctx, int grid_size = 32);

/// d from the remaining system equation at u0 = ((1-u1)/u1^a)^(1/b):
/// d = log((1 - u0^a1)/u1^b) / log(u0), recognized as a rational and
/// confirmed at doubled precision.
std::optional<Rational> derive_d(const ExprPtr& u1, const Rational& a, const Rational& b,
                                 const Rational& a1, const PrecisionContext& ctx, const Int& qmax);

struct PolyIdentityReport {
  bool deg7_product_ok;        // (U^2-U+1)^2 (U^3-3U^2+1) expands to the septic
  bool deg42_division_ok;      // zero remainder against the degree-42 cofactor
  bool deg42_coefficients_ok;  // quotient matches the transcribed cofactor
  bool deg42_product_ok;       // cofactor * septic reproduces the full polynomial
  bool numeric_u19_ok;         // |j^19 - (1-alpha)^3 alpha^2| below tolerance
  bool numeric_u19_scaled_ok;  // |(w/(w+1))^19 (1-alpha)^7 - alpha^8| below tolerance
  std::vector<int> mismatched_degrees;

  bool all_ok() const {
    return deg7_product_ok && deg42_division_ok && deg42_coefficients_ok && deg42_product_ok &&
           numeric_u19_ok && numeric_u19_scaled_ok;
  }
};

/// Exact verification of the factorization identities behind the two modified
/// matrices, plus their numeric corollaries at ctx precision.
PolyIdentityReport check_poly_identities(const PrecisionContext& ctx);

/// The degree-42 cofactor of (U-1)^14 (U^2(U-1)^3+1)^7 - U^35 after removing
/// (U^2-U+1)^2 (U^3-3U^2+1); ascending coefficients.
const IntPolynomial& deg42_cofactor();

}  // namespace dilog
