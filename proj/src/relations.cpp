#include "dilog/relations.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "dilog/polylog.hpp"
#include "dilog/recognize.hpp"

namespace dilog {

namespace {

using K = ConstExpr::Kind;

ExprPtr lit(long n) { return make_rat(Rational(n)); }
ExprPtr add(ExprPtr a, ExprPtr b) { return make_binary(K::Add, std::move(a), std::move(b)); }
ExprPtr sub(ExprPtr a, ExprPtr b) { return make_binary(K::Sub, std::move(a), std::move(b)); }
ExprPtr mul(ExprPtr a, ExprPtr b) { return make_binary(K::Mul, std::move(a), std::move(b)); }
ExprPtr div(ExprPtr a, ExprPtr b) { return make_binary(K::Div, std::move(a), std::move(b)); }
ExprPtr sq(ExprPtr a) { return make_pow(std::move(a), Rational(2)); }
ExprPtr cube(ExprPtr a) { return make_pow(std::move(a), Rational(3)); }

BigReal pi_squared(const PrecisionContext& ctx) {
  BigReal p = BigReal::pi(ctx);
  return p * p;
}

}  // namespace

BigReal evaluate_relation(const DilogRelation& r, const PrecisionContext& ctx) {
  if (r.kind == DilogRelation::Kind::ReLi2Powers) {
    BigComplex z{eval_expr(r.z_re, ctx), eval_expr(r.z_im, ctx)};
    BigReal acc(ctx);
    for (const auto& t : r.cterms) {
      BigComplex zp{BigReal(1, ctx), BigReal(0, ctx)};
      for (int i = 0; i < std::abs(t.power); ++i) zp = zp * z;
      if (t.power < 0) zp = BigComplex(1, ctx) / zp;
      acc += BigReal(t.coeff, ctx) * li2_complex(zp, ctx).re;
    }
    return acc;
  }
  BigReal acc(ctx);
  for (const auto& t : r.terms) {
    BigReal arg = eval_expr(t.arg, ctx);
    if (abs(arg) > 1L) throw Error("relation '" + r.name + "': argument outside [-1, 1]");
    acc += BigReal(t.coeff, ctx) * rogers_L(arg, ctx);
  }
  return acc;
}

std::optional<Rational> complete_relation(const DilogRelation& r, const PrecisionContext& ctx,
                                          const Int& qmax) {
  return recognize_confirmed(
      [&r](const PrecisionContext& c) { return evaluate_relation(r, c) / pi_squared(c); }, ctx,
      qmax, ctx.target_digits - 20);
}

VerifyOutcome verify_relation(const DilogRelation& r, const PrecisionContext& ctx,
                              const Int& qmax) {
  VerifyOutcome out;
  out.name = r.name;
  out.expected = r.rhs;
  out.digits = ctx.target_digits;
  out.recognized = complete_relation(r, ctx, qmax);
  BigReal value = evaluate_relation(r, ctx);
  std::optional<Rational> against = r.rhs ? r.rhs : out.recognized;
  if (against) {
    BigReal resid = abs(value - BigReal(*against, ctx) * pi_squared(ctx));
    if (resid.is_zero())
      out.residual_exponent = -(ctx.target_digits * 4);
    else
      out.residual_exponent =
          static_cast<int>(std::floor(static_cast<double>(mpfr_get_exp(resid.raw())) * 0.30103));
  } else {
    out.residual_exponent = 0;
  }
  out.pass = out.recognized.has_value() && (!r.rhs || *out.recognized == *r.rhs);
  return out;
}

// ---------------------------------------------------------------------------
// registry

namespace {

DilogRelation rel(std::string name, std::vector<std::pair<std::string, std::string>> terms,
                  std::optional<Rational> rhs, std::string source) {
  DilogRelation r;
  r.name = std::move(name);
  for (auto& [c, a] : terms) r.terms.push_back(DilogTerm{rat_parse(c), parse_expr(a)});
  r.rhs = std::move(rhs);
  r.source = std::move(source);
  return r;
}

}  // namespace

std::vector<DilogRelation> builtin_registry() {
  const std::string w = "root([-1,3,6,1],positive)";
  const std::string alpha = "root([1,-57,54,1],smallest-positive)";
  const std::string rho = "root([-1,0,1,1],positive)";
  const std::string jj = "sec(2*pi/9)/2";

  std::vector<DilogRelation> regs;
  regs.push_back(rel("euler-1", {{"1", "1"}}, Rational(1, 6), "Euler; L(1)"));
  regs.push_back(rel("euler-minus1", {{"1", "0-1"}}, Rational(-1, 12), "Euler; L(-1)"));
  regs.push_back(rel("landen-half", {{"1", "1/2"}}, Rational(1, 12), "Landen; L(1/2)"));
  regs.push_back(rel("landen-golden", {{"1", "(sqrt(5)-1)/2"}}, Rational(1, 10),
                     "Landen; golden ratio value"));
  regs.push_back(rel("landen-golden-sq", {{"1", "(3-sqrt(5))/2"}}, Rational(1, 15),
                     "Landen; squared golden ratio value"));
  regs.push_back(rel("lima", {{"1", "sqrt(2)-1"}, {"1", "1-sqrt(2)/2"}}, Rational(1, 8),
                     "Lima 2012"));
  regs.push_back(rel("quadratic-sqrt3", {{"1", "(sqrt(3)+2)/4"}, {"8", "sqrt(3)-1"}},
                     Rational(13, 12), "quadratic two-term over Q(sqrt(3))"));
  regs.push_back(rel("quadratic-sqrt2", {{"1", "(2-sqrt(2))/4"}, {"6", "sqrt(2)-1"}},
                     Rational(11, 24), "quadratic two-term over Q(sqrt(2))"));
  regs.push_back(rel("quadratic-sqrt5-scaled", {{"1", "4*sqrt(5)-8"}, {"4", "sqrt(5)-2"}},
                     Rational(1, 3), "quadratic two-term over Q(sqrt(5))"));
  regs.push_back(rel("quadratic-sqrt5-2",
                     {{"1", "7/2-3*sqrt(5)/2"}, {"2", "1/2-sqrt(5)/10"}}, Rational(2, 15),
                     "quadratic two-term over Q(sqrt(5))"));
  regs.push_back(rel("plastic-ladder", {{"1", rho + "^2"}, {"2", rho}}, Rational(1, 3),
                     "Lewin; ladder at the reciprocal plastic constant"));
  regs.push_back(rel("kanade-main",
                     {{"1", "1-2*sin(pi/18)"}, {"1/3", "4*sin(pi/18)^2+4*sin(pi/18)"}},
                     Rational(4, 27), "Kanade; conjectured via Nahm-sum asymptotics"));
  regs.push_back(rel("gordon-mcintosh-pi18",
                     {{"-2", w + "^3"}, {"2", w + "^2"}, {"11", w}}, Rational(1, 2),
                     "Gordon-McIntosh 1997; pi/18 ladder"));
  regs.push_back(rel("j-alpha-2pi2",
                     {{"19", jj}, {"1", "(1-" + jj + ")^3*(" + jj + ")^2"}}, Rational(2),
                     "two-term companion at j = sec(2pi/9)/2"));
  regs.push_back(rel("j-alpha-13pi2-18",
                     {{"19", "(1-" + jj + ")^2/(" + jj + ")"},
                      {"3", "(1-" + jj + ")^3*(" + jj + ")^2"}},
                     Rational(13, 18), "two-term companion at j = sec(2pi/9)/2"));
  regs.push_back(rel("w-alpha-13pi2-18",
                     {{"19", w + "/(" + w + "+1)"}, {"3", alpha}}, Rational(13, 18),
                     "pi/18-base form of the 13pi^2/18 identity"));
  regs.push_back(rel("x-alpha-2pi2",
                     {{"19", "1/(sec(pi/9)/2+1)"}, {"1", alpha}}, Rational(2),
                     "pi/9-base form of the 2pi^2 identity"));
  regs.push_back(rel("bytsko-sextic-4pi2-21",
                     {{"1", "sqrt(1-3*sin(pi/14)^2)-sin(pi/14)"},
                      {"1", "1/(1+sin(pi/14)+sqrt(1-3*sin(pi/14)^2))"}},
                     Rational(4, 21), "Bytsko; two-term identity on the sextic"));

  DilogRelation quartic;
  quartic.name = "complex-quartic-41pi2-75";
  quartic.kind = DilogRelation::Kind::ReLi2Powers;
  quartic.z_re = parse_expr("0-1/2");
  quartic.z_im = parse_expr("sqrt(5+2*sqrt(5))/2");
  quartic.cterms = {{Rational(2), 3}, {Rational(-3), 2}};
  quartic.rhs = Rational(41, 75);
  quartic.source = "complex quartic two-term identity at z = e^(i pi/5)/(1-e^(i pi/5))";
  regs.push_back(std::move(quartic));
  return regs;
}

// ---------------------------------------------------------------------------
// registry serialization

std::string registry_to_json(const std::vector<DilogRelation>& regs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : regs) {
    nlohmann::json jr;
    jr["name"] = r.name;
    jr["source"] = r.source;
    jr["rhs"] = r.rhs ? rat_str(*r.rhs) : "unknown";
    if (r.kind == DilogRelation::Kind::ReLi2Powers) {
      jr["kind"] = "re-li2-powers";
      jr["z"] = {{"re", print_expr(r.z_re)}, {"im", print_expr(r.z_im)}};
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : r.cterms)
        terms.push_back({{"coeff", rat_str(t.coeff)}, {"power", t.power}});
      jr["terms"] = terms;
    } else {
      jr["kind"] = "rogers";
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : r.terms)
        terms.push_back({{"coeff", rat_str(t.coeff)}, {"arg", print_expr(t.arg)}});
      jr["terms"] = terms;
    }
    out.push_back(jr);
  }
  return out.dump(2) + "\n";
}

std::vector<DilogRelation> registry_from_json(const std::string& text) {
  nlohmann::json in = nlohmann::json::parse(text);
  std::vector<DilogRelation> regs;
  for (const auto& jr : in) {
    DilogRelation r;
    r.name = jr.at("name").get<std::string>();
    r.source = jr.value("source", "");
    std::string rhs = jr.at("rhs").get<std::string>();
    if (rhs != "unknown") r.rhs = rat_parse(rhs);
    std::string kind = jr.value("kind", "rogers");
    if (kind == "re-li2-powers") {
      r.kind = DilogRelation::Kind::ReLi2Powers;
      r.z_re = parse_expr(jr.at("z").at("re").get<std::string>());
      r.z_im = parse_expr(jr.at("z").at("im").get<std::string>());
      for (const auto& t : jr.at("terms"))
        r.cterms.push_back({rat_parse(t.at("coeff").get<std::string>()), t.at("power").get<int>()});
    } else if (kind == "rogers") {
      for (const auto& t : jr.at("terms"))
        r.terms.push_back(
            DilogTerm{rat_parse(t.at("coeff").get<std::string>()), parse_expr(t.at("arg").get<std::string>())});
    } else {
      throw Error("unknown registry record kind '" + kind + "'");
    }
    regs.push_back(std::move(r));
  }
  return regs;
}

// ---------------------------------------------------------------------------
// elimination

RelationVector basis_vector(const SymbolBasis& basis, const std::string& name,
                            const std::vector<std::pair<std::string, Rational>>& entries,
                            std::optional<Rational> pi2) {
  RelationVector v;
  v.name = name;
  v.coeffs.assign(basis.labels.size(), Rational(0));
  for (const auto& [label, coeff] : entries) {
    auto it = std::find(basis.labels.begin(), basis.labels.end(), label);
    if (it == basis.labels.end()) throw Error("unknown basis label '" + label + "'");
    v.coeffs[static_cast<size_t>(it - basis.labels.begin())] += coeff;
  }
  v.pi2 = std::move(pi2);
  return v;
}

DilogRelation relation_from_vector(const SymbolBasis& basis, const RelationVector& v) {
  DilogRelation r;
  r.name = v.name;
  r.rhs = v.pi2;
  for (size_t i = 0; i < v.coeffs.size(); ++i)
    if (v.coeffs[i] != 0) r.terms.push_back(DilogTerm{v.coeffs[i], basis.exprs[i]});
  return r;
}

KirillovSystem kirillov_system(const ExprPtr& x, const PrecisionContext& ctx, const Int& qmax) {
  KirillovSystem sys;
  ExprPtr x2 = sq(x), x3 = cube(x);
  ExprPtr y = div(lit(1), add(lit(1), x));
  ExprPtr z = div(x, add(lit(1), x));
  ExprPtr b = div(sq(x), add(x, lit(1)));
  ExprPtr h = div(x, add(lit(1), mul(lit(2), x)));
  ExprPtr a = div(lit(1), add(x, lit(2)));
  ExprPtr c = div(lit(1), mul(x, add(x, lit(2))));
  sys.basis.labels = {"x", "x^2", "x^3", "y", "y^2", "z", "z^2", "a", "a^2", "b", "c", "c^2", "h"};
  sys.basis.exprs = {x, x2, x3, y, sq(y), z, sq(z), a, sq(a), b, c, sq(c), h};

  auto row = [&](const std::string& name,
                 std::vector<std::pair<std::string, Rational>> entries) {
    return basis_vector(sys.basis, name, entries, std::nullopt);
  };
  sys.rows = {
      row("rel-a2", {{"a^2", 1}, {"y^2", 1}, {"y", -2}, {"x^2", 2}}),
      row("rel-c2", {{"c^2", 1}, {"y", -2}, {"z^2", -1}, {"y^2", 2}}),
      row("rel-x3-sub", {{"x^3", -1}, {"x^2", 3}, {"x", 1}, {"z^2", 1}, {"y^2", -1}}),
      row("dup-y", {{"a", 2}, {"y^2", 1}, {"y", -2}}),
      row("dup-z", {{"z^2", -1}, {"z", 2}, {"h", -2}}),
      row("five-term-x-y", {{"y", 1}, {"a", 1}, {"h", -1}, {"x", -1}, {"b", -1}}),
      row("cube-ladder", {{"x^3", 1}, {"x", -3}, {"x^2", -3}}),
      row("reflection-z-y", {{"z", 1}, {"y", 1}}),
      row("reflection-c-h", {{"c", 1}, {"h", 1}}),
  };
  for (auto& r : sys.rows) {
    auto measured = complete_relation(relation_from_vector(sys.basis, r), ctx, qmax);
    if (!measured)
      throw Error("kirillov system: pi^2 column of '" + r.name + "' did not recognize");
    r.pi2 = *measured;
  }
  return sys;
}

std::optional<Certificate> eliminate(const std::vector<RelationVector>& inputs,
                                     const RelationVector& target) {
  if (inputs.empty()) return std::nullopt;
  const size_t dim = target.coeffs.size();
  for (const auto& v : inputs)
    if (v.coeffs.size() != dim) throw Error("eliminate: vectors over different bases");
  const size_t n = inputs.size();

  // solve (inputs as rows)^T m = target by Gauss-Jordan over Q
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(n + 1, Rational(0)));
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = inputs[j].coeffs[i];
    m[i][n] = target.coeffs[i];
  }
  std::vector<long> pivot_col_of_row(dim, -1);
  size_t row = 0;
  for (size_t col = 0; col < n && row < dim; ++col) {
    size_t pr = row;
    while (pr < dim && m[pr][col] == 0) ++pr;
    if (pr == dim) continue;
    std::swap(m[pr], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (size_t k = col; k <= n; ++k) m[row][k] *= inv;
    for (size_t i = 0; i < dim; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (size_t k = col; k <= n; ++k) m[i][k] -= f * m[row][k];
    }
    pivot_col_of_row[row] = static_cast<long>(col);
    ++row;
  }
  // consistency: no row of the form (0 ... 0 | nonzero)
  for (size_t i = row; i < dim; ++i)
    if (m[i][n] != 0) return std::nullopt;

  std::vector<Rational> mult(n, Rational(0));
  for (size_t i = 0; i < row; ++i)
    mult[static_cast<size_t>(pivot_col_of_row[i])] = m[i][n];

  // exact re-check of the certificate
  for (size_t i = 0; i < dim; ++i) {
    Rational acc(0);
    for (size_t j = 0; j < n; ++j) acc += mult[j] * inputs[j].coeffs[i];
    if (acc != target.coeffs[i]) return std::nullopt;
  }

  Certificate cert;
  cert.multipliers = mult;
  cert.target = target;
  Rational constant(0);
  for (size_t j = 0; j < n; ++j) {
    if (mult[j] == 0) continue;
    if (!inputs[j].pi2)
      throw Error("eliminate: row '" + inputs[j].name + "' is used but its pi^2 column is unknown");
    constant += mult[j] * *inputs[j].pi2;
  }
  cert.residual_constant = constant;
  return cert;
}

// ---------------------------------------------------------------------------
// generic one-parameter relations

namespace {

struct NamedExpr {
  std::string name;
  ExprPtr e;
};

bool in_open_unit(const ExprPtr& e, const PrecisionContext& ctx) {
  BigReal v = eval_expr(e, ctx);
  return v.sign() > 0 && v < 1L;
}

}  // namespace

GenericRelations generic_s_relations(const ExprPtr& s, const PrecisionContext& ctx) {
  ExprPtr s2 = sq(s), s3 = cube(s);
  ExprPtr inv1ps = div(lit(1), add(s, lit(1)));          // 1/(s+1)
  ExprPtr sov1ps = div(s, add(s, lit(1)));               // s/(s+1)
  ExprPtr inv2ps = div(lit(1), add(s, lit(2)));          // 1/(s+2)
  ExprPtr sov12s = div(s, add(lit(1), mul(lit(2), s)));  // s/(1+2s)
  ExprPtr invss2 = div(lit(1), mul(s, add(s, lit(2))));  // 1/(s(s+2))
  ExprPtr q31 = add(add(sq(s), mul(lit(3), s)), lit(1));  // s^2+3s+1
  ExprPtr q32 = add(add(sq(s), mul(lit(3), s)), lit(2));  // s^2+3s+2
  ExprPtr qss1 = add(add(sq(s), s), lit(1));              // s^2+s+1

  auto R = [](std::string name, std::vector<std::pair<Rational, ExprPtr>> terms) {
    DilogRelation r;
    r.name = std::move(name);
    for (auto& [c, e] : terms) r.terms.push_back(DilogTerm{c, e});
    r.rhs = Rational(0);
    r.source = "generic functional identity in s";
    return r;
  };

  std::vector<DilogRelation> all = {
      R("dup-s", {{1, s2}, {-2, s}, {2, sov1ps}}),
      R("dup-inv-1ps", {{1, sq(inv1ps)}, {-2, inv1ps}, {2, inv2ps}}),
      R("dup-s-over-1ps", {{1, sq(sov1ps)}, {-2, sov1ps}, {2, sov12s}}),
      R("dup-inv-ss2", {{1, sq(invss2)}, {-2, invss2}, {2, sq(inv1ps)}}),
      R("five-term-s2-inv1ps2",
        {{1, s2},
         {1, sq(inv1ps)},
         {-1, sq(sov1ps)},
         {-1, div(mul(s3, add(s, lit(2))), add(mul(lit(2), s), lit(1)))},
         {-1, div(sub(lit(1), s2), add(mul(lit(2), s), lit(1)))}}),
      R("split-s-s2-s3",
        {{1, s}, {1, s2}, {-1, s3}, {-1, div(s2, qss1)}, {-1, div(mul(s, add(s, lit(1))), qss1)}}),
      R("five-term-1ps-1p2s",
        {{1, inv1ps},
         {1, inv2ps},
         {-1, div(lit(1), q32)},
         {-1, div(s, q31)},
         {-1, div(add(s, lit(1)), q31)}}),
  };

  GenericRelations out;
  for (auto& r : all) {
    bool ok = true;
    for (const auto& t : r.terms)
      if (!in_open_unit(t.arg, ctx)) {
        ok = false;
        break;
      }
    if (ok)
      out.relations.push_back(std::move(r));
    else
      out.skipped.push_back(r.name);
  }
  return out;
}

FiveTermVariantDecision last_five_term_variants(const ExprPtr& s, const PrecisionContext& ctx) {
  ExprPtr inv1ps = div(lit(1), add(s, lit(1)));
  ExprPtr inv2ps = div(lit(1), add(s, lit(2)));
  ExprPtr q31 = add(add(sq(s), mul(lit(3), s)), lit(1));
  ExprPtr q32 = add(add(sq(s), mul(lit(3), s)), lit(2));

  auto resid = [&](const ExprPtr& first) {
    BigReal acc = rogers_L(eval_expr(inv1ps, ctx), ctx) + rogers_L(eval_expr(inv2ps, ctx), ctx);
    acc -= rogers_L(eval_expr(first, ctx), ctx);
    acc -= rogers_L(eval_expr(div(s, q31), ctx), ctx);
    acc -= rogers_L(eval_expr(div(add(s, lit(1)), q31), ctx), ctx);
    return acc;
  };
  FiveTermVariantDecision d{resid(div(lit(1), q32)), resid(div(lit(1), q31)), false, false};
  BigReal tol = BigReal::pow10(-(ctx.target_digits - 20), ctx);
  d.corrected_vanishes = abs(d.corrected_residual) < tol;
  d.printed_vanishes = abs(d.printed_residual) < tol;
  return d;
}

}  // namespace dilog
