// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Criteria run at their stated precisions and tolerances.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dilog/expr.hpp"
#include "dilog/ladder.hpp"
#include "dilog/nahm.hpp"
#include "dilog/polylog.hpp"
#include "dilog/qseries.hpp"
#include "dilog/recognize.hpp"
#include "dilog/relations.hpp"
#include "support/common.hpp"

using namespace dilog;
using testsupport::RandomReals;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%2d] %s  %s%s%s  (%.2f s)\n", number, ok ? "PASS" : "FAIL", label.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str(), secs);
  if (!ok) ++failures;
}

BigReal pi2(const PrecisionContext& ctx) {
  BigReal p = BigReal::pi(ctx);
  return p * p;
}

}  // namespace

int main() {
  const PrecisionContext ctx120 = PrecisionContext::digits(120);
  const PrecisionContext ctx60 = PrecisionContext::digits(60);
  const Int qmax(10000);

  criterion(1, "Kanade identity to 1e-100 at 120 digits", [&](std::string& d) {
    BigReal q1 = eval_expr(parse_expr("1-2*sin(pi/18)"), ctx120);
    BigReal q23 = eval_expr(parse_expr("4*sin(pi/18)^2+4*sin(pi/18)"), ctx120);
    BigReal resid =
        abs(rogers_L(q1, ctx120) + rogers_L(q23, ctx120) / 3 - pi2(ctx120) * Rational(4, 27));
    d = "residual " + resid.str(3);
    return resid < BigReal::pow10(-100, ctx120);
  });

  criterion(2, "registry sweep recognizes every stated rational (confirmed at 240)",
            [&](std::string& d) {
              const Rational wanted[] = {
                  Rational(1, 6),  Rational(-1, 12), Rational(1, 12),  Rational(1, 10),
                  Rational(1, 15), Rational(1, 8),   Rational(13, 12), Rational(11, 24),
                  Rational(1, 3),  Rational(2, 15),  Rational(1, 3),   Rational(1, 2),
                  Rational(4, 27), Rational(2),      Rational(13, 18), Rational(4, 21),
                  Rational(41, 75)};
              auto regs = builtin_registry();
              size_t pass = 0, total = 0;
              for (const auto& r : regs) {
                if (!r.rhs) continue;
                ++total;
                auto rec = complete_relation(r, ctx120, qmax);
                if (rec && *rec == *r.rhs) ++pass;
              }
              std::vector<bool> covered(std::size(wanted), false);
              for (size_t i = 0; i < std::size(wanted); ++i)
                for (const auto& r : regs)
                  if (r.rhs && *r.rhs == wanted[i]) covered[i] = true;
              bool all_covered = true;
              for (bool c : covered) all_covered = all_covered && c;
              d = std::to_string(pass) + "/" + std::to_string(total) + " records";
              return pass == total && total >= 18 && all_covered;
            });

  criterion(3, "elimination certificate for 3L(y)-L(b) with constant 5/18", [&](std::string& d) {
    auto sys = kirillov_system(parse_expr("sec(pi/9)/2"), ctx120, qmax);
    auto target = basis_vector(sys.basis, "3L(y)-L(b)",
                               {{"y", Rational(3)}, {"b", Rational(-1)}}, std::nullopt);
    auto cert = eliminate(sys.rows, target);
    if (!cert) {
      d = "no certificate";
      return false;
    }
    if (cert->residual_constant != Rational(5, 18)) {
      d = "constant " + rat_str(cert->residual_constant);
      return false;
    }
    DilogRelation derived = relation_from_vector(sys.basis, target);
    BigReal resid =
        abs(evaluate_relation(derived, ctx120) - pi2(ctx120) * cert->residual_constant);
    d = "constant 5/18, residual " + resid.str(3);
    return resid < BigReal::pow10(-100, ctx120);
  });

  criterion(4, "Nahm table 11/11 at 60 digits", [&](std::string& d) {
    auto rows = reproduce_table(ctx60, 32);
    int pass = 0;
    for (const auto& r : rows) pass += r.pass ? 1 : 0;
    d = std::to_string(pass) + "/11";
    return pass == 11 && rows.size() == 11;
  });

  criterion(5, "sextic solution matches printed digits and closed forms", [&](std::string& d) {
    NahmMatrix A{Rational(8, 3), Rational(1, 3), Rational(2, 3)};
    auto sols = solve_system(A, ctx60, 16);
    BigReal s14 = sin(BigReal::pi(ctx60) / 14);
    BigReal disc = sqrt(1 - 3 * s14 * s14);
    BigReal x_closed = disc - s14;
    BigReal y_closed = 1 / (1 - (-disc - s14));
    for (const auto& s : sols) {
      if (abs(s.x - BigReal("0.700221", ctx60)) < BigReal::pow10(-6, ctx60) &&
          abs(s.y - BigReal("0.466143", ctx60)) < BigReal::pow10(-6, ctx60) &&
          abs(s.x - x_closed) < BigReal::pow10(-50, ctx60) &&
          abs(s.y - y_closed) < BigReal::pow10(-50, ctx60)) {
        d = "x=" + s.x.str(12) + " y=" + s.y.str(12);
        return true;
      }
    }
    d = "no matching solution";
    return false;
  });

  criterion(6, "modified matrices: solution identities and exact d values", [&](std::string& d) {
    NahmMatrix first{Rational(-2, 3), Rational(19, 3), Rational(-38, 3), Rational(19)};
    auto sols = solve_system(first, ctx120, 24);
    BigReal j = eval_expr(parse_expr("sec(2*pi/9)/2"), ctx120);
    BigReal alpha = eval_expr(parse_expr("root([1,-57,54,1],smallest-positive)"), ctx120);
    bool found = false;
    for (const auto& s : sols)
      if (abs(s.x - j) < BigReal::pow10(-80, ctx120) &&
          abs(pow(s.y, Rational(19)) - alpha) < BigReal::pow10(-80, ctx120))
        found = true;
    if (!found) {
      d = "first system solution mismatch";
      return false;
    }
    auto d1 = derive_d(parse_expr("sec(2*pi/9)/2"), Rational(-2, 3), Rational(19, 3), Rational(19),
                       ctx120, Int(100));
    auto u1 = parse_expr("root([-1,3,6,1],positive)/(root([-1,3,6,1],positive)+1)");
    auto d2 = derive_d(u1, Rational(8, 7), Rational(-19, 7), Rational(19, 3), ctx120, Int(100));
    d = "d1=" + (d1 ? rat_str(*d1) : "none") + " d2=" + (d2 ? rat_str(*d2) : "none");
    return d1 == Rational(-38, 3) && d2 == Rational(152, 21);
  });

  criterion(7, "exact polynomial identities (septic and degree-42 cofactor)",
            [&](std::string& d) {
              auto rep = check_poly_identities(ctx120);
              d = rep.deg42_coefficients_ok ? "43/43 coefficients"
                                            : std::to_string(rep.mismatched_degrees.size()) +
                                                  " mismatched coefficients";
              return rep.all_ok();
            });

  criterion(8, "three sum-product identities through q^100", [&](std::string& d) {
    bool ok = true;
    for (int which : {1, 2, 3}) {
      auto rep = kursungoz_check(which, 100);
      ok = ok && rep.match;
    }
    auto prefix = kursungoz_check(1, 6);
    const std::vector<Int> expect{Int(1), Int(1), Int(1), Int(2), Int(2), Int(2), Int(4)};
    ok = ok && prefix.nahm_prefix == expect && prefix.product_prefix == expect;
    d = "identities 1-3 match; prefix [1,1,1,2,2,2,4]";
    return ok;
  });

  criterion(9, "search rediscovers the three companion identities", [&](std::string& d) {
    ScanConfig cfg;  // cmax 99, detect 60, confirm 120
    auto regs = builtin_registry();
    auto has = [](const ScanResult& res, const char* f1, const char* f2, Rational a1, Rational q) {
      for (const auto& h : res.hits)
        if (h.f1 == f1 && h.f2 == f2 && h.a1 == a1 && h.q == q) return true;
      return false;
    };
    auto at_w = scan_two_term(default_family(parse_expr("root([-1,3,6,1],positive)")), cfg, &regs);
    bool ok1 = has(at_w, "(1-s^2)/(2s+1)", "s^3(s+2)/(2s+1)", Rational(1, 19), Rational(2, 19));
    bool ok2 = has(at_w, "s/(1+s)", "s^3(s+2)/(2s+1)", Rational(3, 19), Rational(13, 342));
    auto at_x = scan_two_term(default_family(parse_expr("sec(pi/9)/2")), cfg, &regs);
    bool ok3 = has(at_x, "1/(1+s)", "(s+1-s^2)/(s+1)", Rational(1, 3), Rational(4, 27));
    d = std::string("2pi^2: ") + (ok1 ? "found" : "missing") +
        ", 13pi^2/18: " + (ok2 ? "found" : "missing") + ", 4pi^2/27: " + (ok3 ? "found" : "missing");
    return ok1 && ok2 && ok3;
  });

  criterion(10, "property suites at 120 digits", [&](std::string& d) {
    BigReal tol = BigReal::pow10(-115, ctx120);
    BigReal p26 = pi2(ctx120) / 6;
    RandomReals refl(1001), dup(1002), five(1003), rej(1004);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      BigReal z = refl.next(ctx120);
      if (!(abs(rogers_L(z, ctx120) + rogers_L(1 - z, ctx120) - p26) < tol)) ++bad;
    }
    for (int i = 0; i < 100; ++i) {
      BigReal z = dup.next(ctx120);
      if (!(abs(rogers_L(z * z, ctx120) - 2 * rogers_L(z, ctx120) +
                2 * rogers_L(z / (1 + z), ctx120)) < tol))
        ++bad;
    }
    for (int i = 0; i < 100; ++i) {
      BigReal x = five.next(ctx120);
      BigReal y = five.next(ctx120);
      if (!(abs(five_term_residual(x, y, ctx120)) < tol)) ++bad;
    }
    int recognized = 0;
    for (int i = 0; i < 100; ++i)
      if (recognize_rational(rej.next(ctx120), qmax, 40)) ++recognized;
    d = std::to_string(bad) + " residual failures, " + std::to_string(recognized) +
        " spurious recognitions";
    return bad == 0 && recognized == 0;
  });

  std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
  return failures;
}
