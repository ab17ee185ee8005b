#include "dilog/nahm.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dilog/polylog.hpp"
#include "dilog/recognize.hpp"

namespace dilog {

namespace {

struct DoubleSeed {
  double x, y;
};

// double-precision Newton pass over the seed grid; cheap basin discovery
std::vector<DoubleSeed> seed_pass(const NahmMatrix& A, int grid_size) {
  double a = static_cast<double>(A.a);
  double b = static_cast<double>(A.b);
  double d = static_cast<double>(A.d);
  double a1 = static_cast<double>(A.a1);
  std::vector<DoubleSeed> found;
  const double lo = 1e-3, hi = 1.0 - 1e-3;
  for (int i = 0; i < grid_size; ++i) {
    for (int j = 0; j < grid_size; ++j) {
      double x = lo + (hi - lo) * (i + 0.5) / grid_size;
      double y = lo + (hi - lo) * (j + 0.5) / grid_size;
      bool ok = false;
      for (int it = 0; it < 200; ++it) {
        double t1 = std::pow(x, a) * std::pow(y, b);
        double t2 = std::pow(x, b) * std::pow(y, d);
        double t3 = std::pow(y, a1);
        double g1 = t1 - (1.0 - x);
        double g2 = t2 - (1.0 - t3);
        if (!std::isfinite(g1) || !std::isfinite(g2)) break;
        if (std::abs(g1) + std::abs(g2) < 1e-13) {
          ok = true;
          break;
        }
        double j11 = a * t1 / x + 1.0;
        double j12 = b * t1 / y;
        double j21 = b * t2 / x;
        double j22 = d * t2 / y + a1 * t3 / y;
        double det = j11 * j22 - j12 * j21;
        if (det == 0.0 || !std::isfinite(det)) break;
        double dx = (g1 * j22 - g2 * j12) / det;
        double dy = (g2 * j11 - g1 * j21) / det;
        double lam = 1.0;
        while (lam > 1e-18 &&
               (x - lam * dx <= 0.0 || x - lam * dx >= 1.0 || y - lam * dy <= 0.0 ||
                y - lam * dy >= 1.0))
          lam *= 0.5;
        if (lam <= 1e-18) break;
        x -= lam * dx;
        y -= lam * dy;
      }
      if (!ok) continue;
      bool dup = false;
      for (const auto& f : found)
        if (std::abs(f.x - x) + std::abs(f.y - y) < 1e-9) {
          dup = true;
          break;
        }
      if (!dup) found.push_back(DoubleSeed{x, y});
    }
  }
  return found;
}

struct NewtonOutcome {
  BigReal x, y, g1, g2;
  bool converged;
};

NewtonOutcome newton_refine(const NahmMatrix& A, const BigReal& x0, const BigReal& y0,
                            const PrecisionContext& ctx) {
  BigReal x = x0, y = y0;
  BigReal a(A.a, ctx), b(A.b, ctx), d(A.d, ctx), a1(A.a1, ctx);
  BigReal one(1, ctx);
  BigReal eps = ldexp2(one, -static_cast<long>(ctx.working_bits) + 8);
  BigReal g1(ctx), g2(ctx);
  bool converged = false;
  for (int it = 0; it < 200; ++it) {
    BigReal t1 = pow(x, A.a) * pow(y, A.b);
    BigReal t2 = pow(x, A.b) * pow(y, A.d);
    BigReal t3 = pow(y, A.a1);
    g1 = t1 - (one - x);
    g2 = t2 - (one - t3);
    BigReal j11 = a * t1 / x + one;
    BigReal j12 = b * t1 / y;
    BigReal j21 = b * t2 / x;
    BigReal j22 = d * t2 / y + a1 * t3 / y;
    BigReal det = j11 * j22 - j12 * j21;
    if (det.is_zero()) break;
    BigReal dx = (g1 * j22 - g2 * j12) / det;
    BigReal dy = (g2 * j11 - g1 * j21) / det;
    BigReal lam = one;
    for (int k = 0; k < 120; ++k) {
      BigReal nx = x - lam * dx, ny = y - lam * dy;
      if (nx > 0L && nx < 1L && ny > 0L && ny < 1L) break;
      lam = lam / 2;
    }
    x -= lam * dx;
    y -= lam * dy;
    if (abs(dx) + abs(dy) < eps * (abs(x) + abs(y) + 1)) {
      converged = true;
      break;
    }
  }
  // final residuals at the accepted point
  BigReal t1 = pow(x, A.a) * pow(y, A.b);
  BigReal t2 = pow(x, A.b) * pow(y, A.d);
  g1 = t1 - (one - x);
  g2 = t2 - (one - pow(y, A.a1));
  return NewtonOutcome{std::move(x), std::move(y), std::move(g1), std::move(g2), converged};
}

}  // namespace

std::vector<NahmSolution> solve_system(const NahmMatrix& A, const PrecisionContext& ctx,
                                       int grid_size) {
  if (!(A.a1 > 0)) throw Error("solve_system: a1 must be positive");
  if (grid_size < 2) throw Error("solve_system: grid_size must be >= 2");
  auto seeds = seed_pass(A, grid_size);
  if (seeds.empty()) throw Error("solve_system: no seed converged; system may have no solution in (0,1)^2");

  BigReal res_tol = BigReal::pow10(-(ctx.target_digits - 10), ctx);
  BigReal dedup_tol = BigReal::pow10(-20, ctx);
  BigReal move_tol = BigReal::pow10(-(ctx.target_digits - 2), ctx);

  std::vector<NahmSolution> sols;
  for (const auto& s : seeds) {
    BigReal sx(ctx), sy(ctx);
    mpfr_set_d(sx.raw(), s.x, MPFR_RNDN);
    mpfr_set_d(sy.raw(), s.y, MPFR_RNDN);
    auto r = newton_refine(A, sx, sy, ctx);
    if (!r.converged || !(r.x > 0L && r.x < 1L && r.y > 0L && r.y < 1L)) continue;
    if (!(abs(r.g1) < res_tol && abs(r.g2) < res_tol)) continue;
    // stability check: re-converge at doubled precision; keep the point only
    // if it barely moves
    PrecisionContext ctx2 = ctx.doubled();
    auto r2 = newton_refine(A, BigReal(r.x), BigReal(r.y), ctx2);
    if (!r2.converged) continue;
    if (!(abs(r2.x - r.x) < move_tol && abs(r2.y - r.y) < move_tol)) continue;
    bool dup = false;
    for (const auto& have : sols)
      if (abs(have.x - r.x) + abs(have.y - r.y) < dedup_tol) {
        dup = true;
        break;
      }
    if (!dup) sols.push_back(NahmSolution{r.x, r.y, r.g1, r.g2});
  }
  if (sols.empty()) throw Error("solve_system: no solution survived refinement");
  std::sort(sols.begin(), sols.end(), [](const NahmSolution& p, const NahmSolution& q) {
    if (p.x < q.x) return true;
    if (q.x < p.x) return false;
    return p.y < q.y;
  });
  return sols;
}

std::pair<BigReal, std::optional<Rational>> xi_value(const NahmSolution& sol, const NahmMatrix& A,
                                                     const PrecisionContext& ctx,
                                                     const Int& qmax) {
  BigReal ya1 = pow(sol.y, A.a1);
  if (ya1 < 0L || ya1 > 1L || sol.x < 0L || sol.x > 1L)
    throw Error("xi_value: argument outside [0, 1]");
  BigReal value = rogers_L(ya1, ctx) + BigReal(A.a1, ctx) * rogers_L(sol.x, ctx);
  BigReal l1 = BigReal::pi(ctx);
  l1 = l1 * l1 / 6;
  auto ratio = recognize_rational(value / l1, qmax, ctx.target_digits - 20);
  return {std::move(value), std::move(ratio)};
}

std::vector<TableRow> reproduce_table(const PrecisionContext& ctx, int grid_size) {
  // (a, b; b, d) with expected L(xi_A)/L(1)
  const std::vector<std::pair<std::array<Rational, 3>, Rational>> table = {
      {{Rational(2), Rational(1), Rational(1)}, Rational(5, 4)},
      {{Rational(4), Rational(1), Rational(1)}, Rational(13, 10)},
      {{Rational(4), Rational(2), Rational(2)}, Rational(10, 7)},
      {{Rational(4), Rational(3), Rational(3)}, Rational(3, 2)},
      {{Rational(8), Rational(3), Rational(2)}, Rational(3, 2)},
      {{Rational(8), Rational(5), Rational(4)}, Rational(8, 5)},
      {{Rational(11), Rational(9), Rational(8)}, Rational(17, 10)},
      {{Rational(24), Rational(19), Rational(16)}, Rational(9, 5)},
      {{Rational(2), Rational(1), Rational(3, 2)}, Rational(9, 7)},
      {{Rational(5, 2), Rational(2), Rational(2)}, Rational(7, 5)},
      {{Rational(8, 3), Rational(1, 3), Rational(2, 3)}, Rational(8, 7)},
  };
  const Int ratio_qmax(100);
  std::vector<TableRow> rows;
  for (const auto& [abd, expected] : table) {
    TableRow row;
    row.A = NahmMatrix{abd[0], abd[1], abd[2], Rational(1)};
    row.expected = expected;
    try {
      auto sols = solve_system(row.A, ctx, grid_size);
      std::vector<Rational> seen;
      for (const auto& sol : sols) {
        auto [value, ratio] = xi_value(sol, row.A, ctx, ratio_qmax);
        if (!ratio) continue;
        if (std::find(seen.begin(), seen.end(), *ratio) == seen.end()) seen.push_back(*ratio);
        if (!row.ratio) {
          row.ratio = ratio;
          row.solution = sol;
        }
      }
      row.ambiguous = seen.size() > 1;
      row.pass = !row.ambiguous && row.ratio && *row.ratio == expected;
    } catch (const Error&) {
      row.pass = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<Rational> derive_d(const ExprPtr& u1e, const Rational& a, const Rational& b,
                                 const Rational& a1, const PrecisionContext& ctx,
                                 const Int& qmax) {
  if (b == 0) throw Error("derive_d: b must be nonzero");
  auto dval = [&](const PrecisionContext& c) {
    BigReal u1 = eval_expr(u1e, c);
    if (!(u1 > 0L && u1 < 1L)) throw Error("derive_d: u1 outside (0,1)");
    BigReal u0 = pow((1 - u1) / pow(u1, a), Rational(1) / b);
    if (!(u0 > 0L && u0 < 1L)) throw Error("derive_d: implied u0 outside (0,1)");
    return log((1 - pow(u0, a1)) / pow(u1, b)) / log(u0);
  };
  return recognize_confirmed(dval, ctx, qmax, ctx.target_digits - 20);
}

const IntPolynomial& deg42_cofactor() {
  // ascending coefficients of the degree-42 cofactor
  static const IntPolynomial p{
      1,         -12,       60,         -130,      -120,       1669,      -5001,
      5446,      12125,     -64060,     125369,    -72743,     -288713,   992398,
      -1527759,  727191,    2504484,    -7609119,  11123588,   -7622922,  -6436996,
      28082296,  -46529398, 47930033,   -24118462, -20776873,  71272212,  -108870628,
      121976391, -110719222, 84434725,  -54938101, 30674628,   -14697360, 6017316,
      -2087974,  606454,    -144820,    27706,     -4085,      436,       -30,
      1};
  return p;
}

PolyIdentityReport check_poly_identities(const PrecisionContext& ctx) {
  PolyIdentityReport rep{};

  IntPolynomial u{0, 1};
  IntPolynomial u2_u_1{1, -1, 1};       // U^2 - U + 1
  IntPolynomial u3_3u2_1{1, 0, -3, 1};  // U^3 - 3U^2 + 1
  IntPolynomial septic_expected{1, -2, 0, 5, -10, 9, -5, 1};
  IntPolynomial septic = u2_u_1.pow(2) * u3_3u2_1;
  rep.deg7_product_ok = septic == septic_expected;

  // (U-1)^14 (U^2 (U-1)^3 + 1)^7 - U^35
  IntPolynomial um1{-1, 1};
  IntPolynomial inner = IntPolynomial{0, 0, 1} * um1.pow(3) + IntPolynomial{1};
  IntPolynomial lhs = um1.pow(14) * inner.pow(7) - IntPolynomial::x_power(35);
  auto [quot, rem] = IntPolynomial::divmod(lhs, septic);
  rep.deg42_division_ok = rem.is_zero();
  const IntPolynomial& cof = deg42_cofactor();
  rep.deg42_coefficients_ok = quot == cof;
  if (!rep.deg42_coefficients_ok) {
    for (int i = 0; i <= std::max(quot.degree(), cof.degree()); ++i)
      if (quot.coeff(i) != cof.coeff(i)) rep.mismatched_degrees.push_back(i);
  }
  rep.deg42_product_ok = septic * cof == lhs;

  // numeric corollaries
  BigReal tol = BigReal::pow10(-(ctx.target_digits - 20), ctx);
  BigReal j = eval_expr(parse_expr("sec(2*pi/9)/2"), ctx);
  BigReal alpha = eval_expr(parse_expr("root([1,-57,54,1],smallest-positive)"), ctx);
  BigReal lhs1 = pow(j, Rational(19));
  BigReal rhs1 = pow(1 - alpha, Rational(3)) * pow(alpha, Rational(2));
  rep.numeric_u19_ok = abs(lhs1 - rhs1) < tol;
  BigReal w = eval_expr(parse_expr("root([-1,3,6,1],positive)"), ctx);
  BigReal u1b = w / (w + 1);
  BigReal lhs2 = pow(u1b, Rational(19)) * pow(1 - alpha, Rational(7));
  BigReal rhs2 = pow(alpha, Rational(8));
  rep.numeric_u19_scaled_ok = abs(lhs2 - rhs2) < tol;
  return rep;
}

}  // namespace dilog
