#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dilog/polylog.hpp"
#include "dilog/relations.hpp"
#include "support/common.hpp"
#include "support/oracle_values.hpp"

using namespace dilog;
using testsupport::below;
using testsupport::close_to;

static const PrecisionContext ctx = PrecisionContext::digits(120);
static const Int qmax(10000);

TEST_CASE("evaluate_relation examples") {
  DilogRelation lima;
  lima.name = "lima";
  lima.terms = {{Rational(1), parse_expr("sqrt(2)-1")}, {Rational(1), parse_expr("1-sqrt(2)/2")}};
  CHECK(close_to(evaluate_relation(lima, ctx), oracle::lima_value_pi2_8, 117, ctx));

  DilogRelation one;
  one.terms = {{Rational(1), parse_expr("1")}};
  BigReal pi = BigReal::pi(ctx);
  CHECK(below(evaluate_relation(one, ctx) - pi * pi / 6, 117, ctx));

  DilogRelation zero;
  zero.terms = {{Rational(1), parse_expr("0")}};
  CHECK(evaluate_relation(zero, ctx).is_zero());

  DilogRelation bad;
  bad.terms = {{Rational(1), parse_expr("3/2")}};
  CHECK_THROWS_AS(evaluate_relation(bad, ctx), Error);
}

TEST_CASE("complete_relation examples") {
  DilogRelation kanade;
  kanade.terms = {{Rational(1), parse_expr("1-2*sin(pi/18)")},
                  {Rational(1, 3), parse_expr("4*sin(pi/18)^2+4*sin(pi/18)")}};
  CHECK(complete_relation(kanade, ctx, qmax) == Rational(4, 27));

  DilogRelation thm;
  thm.terms = {{Rational(19), parse_expr("sec(2*pi/9)/2")},
               {Rational(1), parse_expr("(1-sec(2*pi/9)/2)^3*(sec(2*pi/9)/2)^2")}};
  CHECK(complete_relation(thm, ctx, qmax) == Rational(2));

  // 3L(y) - L(b) at x = sec(pi/9)/2
  DilogRelation yb;
  yb.terms = {{Rational(3), parse_expr("1/(1+sec(pi/9)/2)")},
              {Rational(-1), parse_expr("(sec(pi/9)/2)^2/(sec(pi/9)/2+1)")}};
  CHECK(complete_relation(yb, ctx, qmax) == Rational(5, 18));
}

TEST_CASE("builtin registry passes verification") {
  auto regs = builtin_registry();
  CHECK(regs.size() >= 18);
  int with_rhs = 0;
  for (const auto& r : regs) {
    REQUIRE(r.rhs.has_value());
    ++with_rhs;
    auto out = verify_relation(r, ctx, qmax);
    CAPTURE(r.name);
    CHECK(out.pass);
    CHECK(out.recognized == r.rhs);
    CHECK(out.residual_exponent <= -100);
  }
  CHECK(with_rhs >= 18);
}

TEST_CASE("registry spot values") {
  auto regs = builtin_registry();
  auto find = [&](const std::string& n) -> const DilogRelation& {
    for (const auto& r : regs)
      if (r.name == n) return r;
    REQUIRE(false);
    return regs.front();
  };
  CHECK(find("euler-1").rhs == Rational(1, 6));
  CHECK(find("quadratic-sqrt5-scaled").rhs == Rational(1, 3));
  CHECK(find("kanade-main").rhs == Rational(4, 27));
  CHECK(find("gordon-mcintosh-pi18").terms.size() == 3);
  CHECK(find("complex-quartic-41pi2-75").kind == DilogRelation::Kind::ReLi2Powers);
}

TEST_CASE("registry verifies again at 240 digits") {
  auto ctx240 = PrecisionContext::digits(240);
  for (const auto& r : builtin_registry()) {
    auto rec = complete_relation(r, ctx240, qmax);
    CAPTURE(r.name);
    REQUIRE(rec.has_value());
    CHECK(rec == r.rhs);
  }
}

TEST_CASE("registry JSON round-trip is byte-identical") {
  auto regs = builtin_registry();
  std::string a = registry_to_json(regs);
  auto back = registry_from_json(a);
  std::string b = registry_to_json(back);
  CHECK(a == b);
  REQUIRE(back.size() == regs.size());
  for (size_t i = 0; i < regs.size(); ++i) {
    CHECK(back[i].name == regs[i].name);
    CHECK(back[i].rhs == regs[i].rhs);
    REQUIRE(back[i].terms.size() == regs[i].terms.size());
    for (size_t t = 0; t < regs[i].terms.size(); ++t) {
      CHECK(back[i].terms[t].coeff == regs[i].terms[t].coeff);
      CHECK(expr_equal(back[i].terms[t].arg, regs[i].terms[t].arg));
    }
  }
}

TEST_CASE("kirillov system pi^2 columns") {
  auto sys = kirillov_system(parse_expr("sec(pi/9)/2"), ctx, qmax);
  REQUIRE(sys.rows.size() == 9);
  auto col = [&](const std::string& n) {
    for (const auto& r : sys.rows)
      if (r.name == n) return *r.pi2;
    REQUIRE(false);
    return Rational(0);
  };
  CHECK(col("rel-a2") == 0);
  CHECK(col("rel-c2") == 0);
  CHECK(col("rel-x3-sub") == Rational(1, 6));
  CHECK(col("dup-y") == 0);
  CHECK(col("dup-z") == 0);
  CHECK(col("five-term-x-y") == 0);
  CHECK(col("cube-ladder") == Rational(-7, 18));
  CHECK(col("reflection-z-y") == Rational(1, 6));
  CHECK(col("reflection-c-h") == Rational(1, 6));

  // basis images at x
  size_t iy = 3, ib = 9;
  REQUIRE(sys.basis.labels[iy] == "y");
  REQUIRE(sys.basis.labels[ib] == "b");
  CHECK(close_to(eval_expr(sys.basis.exprs[iy], ctx), oracle::j_half_sec_2pi9, 117, ctx));
  CHECK(close_to(eval_expr(sys.basis.exprs[ib], ctx), oracle::elem_b_at_x, 117, ctx));
}

TEST_CASE("elimination produces the exact certificate") {
  auto sys = kirillov_system(parse_expr("sec(pi/9)/2"), ctx, qmax);
  auto target = basis_vector(sys.basis, "3y-b", {{"y", Rational(3)}, {"b", Rational(-1)}},
                             std::nullopt);
  auto cert = eliminate(sys.rows, target);
  REQUIRE(cert.has_value());
  const std::vector<Rational> expect = {0,
                                        0,
                                        Rational(-1, 2),
                                        Rational(-1, 2),
                                        Rational(-1, 2),
                                        Rational(1),
                                        Rational(-1, 2),
                                        Rational(1),
                                        0};
  CHECK(cert->multipliers == expect);
  CHECK(cert->residual_constant == Rational(5, 18));

  // exact re-check: sum of multipliers * rows equals the target coordinates
  for (size_t i = 0; i < sys.basis.labels.size(); ++i) {
    Rational acc(0);
    for (size_t j = 0; j < sys.rows.size(); ++j)
      acc += cert->multipliers[j] * sys.rows[j].coeffs[i];
    CHECK(acc == target.coeffs[i]);
  }

  // numeric confirmation: multipliers applied to measured row values
  BigReal acc(ctx);
  for (size_t j = 0; j < sys.rows.size(); ++j) {
    if (cert->multipliers[j] == 0) continue;
    acc += evaluate_relation(relation_from_vector(sys.basis, sys.rows[j]), ctx) *
           cert->multipliers[j];
  }
  BigReal pi = BigReal::pi(ctx);
  CHECK(below(acc - pi * pi * Rational(5, 18), 100, ctx));
}

TEST_CASE("elimination: trivial and unreachable targets") {
  auto sys = kirillov_system(parse_expr("sec(pi/9)/2"), ctx, qmax);
  auto trivial = eliminate(sys.rows, sys.rows[6]);
  REQUIRE(trivial.has_value());
  for (size_t j = 0; j < trivial->multipliers.size(); ++j)
    CHECK(trivial->multipliers[j] == (j == 6 ? Rational(1) : Rational(0)));
  CHECK(trivial->residual_constant == Rational(-7, 18));

  auto lx = basis_vector(sys.basis, "just-x", {{"x", Rational(1)}}, std::nullopt);
  CHECK(!eliminate(sys.rows, lx));
}

TEST_CASE("elimination refuses unknown pi^2 columns it would need") {
  SymbolBasis basis;
  basis.labels = {"u", "v"};
  basis.exprs = {parse_expr("1/2"), parse_expr("1/3")};
  RelationVector r1 = basis_vector(basis, "r1", {{"u", Rational(1)}}, std::nullopt);
  RelationVector target = basis_vector(basis, "t", {{"u", Rational(2)}}, std::nullopt);
  CHECK_THROWS_AS(eliminate({r1}, target), Error);
  r1.pi2 = Rational(1, 6);
  auto cert = eliminate({r1}, target);
  REQUIRE(cert.has_value());
  CHECK(cert->residual_constant == Rational(1, 3));
}

TEST_CASE("the seven printed rows alone cannot reach the target") {
  auto sys = kirillov_system(parse_expr("sec(pi/9)/2"), ctx, qmax);
  std::vector<RelationVector> seven(sys.rows.begin(), sys.rows.begin() + 7);
  auto target = basis_vector(sys.basis, "3y-b", {{"y", Rational(3)}, {"b", Rational(-1)}},
                             std::nullopt);
  CHECK(!eliminate(seven, target));
}

TEST_CASE("generic relations hold at rational and algebraic bases") {
  for (const char* base : {"1/2", "root([-1,3,6,1],positive)"}) {
    auto rels = generic_s_relations(parse_expr(base), ctx);
    CAPTURE(base);
    for (const auto& r : rels.relations) {
      auto rec = complete_relation(r, ctx, qmax);
      CAPTURE(r.name);
      REQUIRE(rec.has_value());
      CHECK(*rec == 0);
    }
  }
  // at s = 1/2 every element is inside (0,1)
  auto at_half = generic_s_relations(parse_expr("1/2"), ctx);
  CHECK(at_half.relations.size() == 7);
  CHECK(at_half.skipped.empty());
  // at s = w the 1/(s(s+2)) elements leave the unit interval
  auto at_w = generic_s_relations(parse_expr("root([-1,3,6,1],positive)"), ctx);
  CHECK(at_w.relations.size() == 6);
  REQUIRE(at_w.skipped.size() == 1);
  CHECK(at_w.skipped[0] == "dup-inv-ss2");
}

TEST_CASE("last five-term relation: corrected element vanishes, printed does not") {
  for (const char* base : {"2/5", "root([-1,3,6,1],positive)"}) {
    auto d = last_five_term_variants(parse_expr(base), ctx);
    CAPTURE(base);
    CHECK(d.corrected_vanishes);
    CHECK(!d.printed_vanishes);
    CHECK(abs(d.printed_residual) > BigReal(Rational(1, 10), ctx));
  }
}
