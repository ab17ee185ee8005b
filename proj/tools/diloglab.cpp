// diloglab: verify, prove, search, and cross-check two-term dilogarithm
// identities, rank-2 Nahm systems, and the associated q-series.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dilog/expr.hpp"
#include "dilog/ladder.hpp"
#include "dilog/nahm.hpp"
#include "dilog/polylog.hpp"
#include "dilog/qseries.hpp"
#include "dilog/recognize.hpp"
#include "dilog/relations.hpp"

using namespace dilog;
using nlohmann::json;

namespace {

struct GlobalConfig {
  int digits = 120;
  long qmax = 10000;
  std::string report = "text";  // text | json
  std::string registry_path;
  int seed_grid = 32;
  int order = 100;
};

struct Report {
  std::string command;
  json config = json::object();
  std::vector<json> items;
  bool pass = true;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void add(const std::string& name, bool ok, const std::string& expected,
           const std::string& observed, int digits) {
    items.push_back(json{{"name", name},
                         {"status", ok ? "pass" : "fail"},
                         {"expected", expected},
                         {"observed", observed},
                         {"digits", digits}});
    pass = pass && ok;
  }

  int finish(const GlobalConfig& g) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (g.report == "json") {
      json out{{"command", command},
               {"config", config},
               {"items", items},
               {"status", pass ? "pass" : "fail"},
               {"wall_ms", ms}};
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& it : items)
        std::printf("%-46s %-4s expected=%-14s observed=%-14s digits=%d\n",
                    it["name"].get<std::string>().c_str(),
                    it["status"].get<std::string>().c_str(),
                    it["expected"].get<std::string>().c_str(),
                    it["observed"].get<std::string>().c_str(), it["digits"].get<int>());
      std::printf("%s: %s (%lld ms)\n", command.c_str(), pass ? "PASS" : "FAIL",
                  static_cast<long long>(ms));
    }
    return pass ? 0 : 1;
  }
};

std::vector<DilogRelation> load_registry(const GlobalConfig& g) {
  if (g.registry_path.empty()) return builtin_registry();
  std::ifstream in(g.registry_path);
  if (!in) throw Error("cannot open registry file '" + g.registry_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return registry_from_json(ss.str());
}

json config_echo(const GlobalConfig& g) {
  return json{{"digits", g.digits},       {"qmax", g.qmax},
              {"report", g.report},       {"registry", g.registry_path},
              {"seed_grid", g.seed_grid}, {"order", g.order}};
}

std::string rat_or(const std::optional<Rational>& r, const char* fallback = "none") {
  return r ? rat_str(*r) : fallback;
}

int cmd_verify(const GlobalConfig& g, const std::vector<std::string>& ids, bool all) {
  Report rep;
  rep.command = "verify";
  rep.config = config_echo(g);
  auto regs = load_registry(g);
  std::vector<const DilogRelation*> chosen;
  if (all || ids.empty()) {
    for (const auto& r : regs) chosen.push_back(&r);
  } else {
    for (const auto& id : ids) {
      auto it = std::find_if(regs.begin(), regs.end(),
                             [&](const DilogRelation& r) { return r.name == id; });
      if (it == regs.end()) {
        std::fprintf(stderr, "unknown identity '%s'\n", id.c_str());
        return 2;
      }
      chosen.push_back(&*it);
    }
  }
  PrecisionContext ctx = PrecisionContext::digits(g.digits);
  for (const auto* r : chosen) {
    auto out = verify_relation(*r, ctx, Int(g.qmax));
    rep.add(out.name, out.pass, rat_or(out.expected, "unknown"), rat_or(out.recognized),
            out.digits);
  }
  return rep.finish(g);
}

int cmd_prove_kanade(const GlobalConfig& g, const std::string& drop_row) {
  Report rep;
  rep.command = "prove-kanade";
  rep.config = config_echo(g);
  PrecisionContext ctx = PrecisionContext::digits(g.digits);
  auto sys = kirillov_system(parse_expr("sec(pi/9)/2"), ctx, Int(g.qmax));

  std::vector<RelationVector> rows;
  for (auto& r : sys.rows)
    if (r.name != drop_row) rows.push_back(r);

  for (const auto& r : rows)
    rep.add("pi2-column " + r.name, r.pi2.has_value(), "rational", rat_or(r.pi2, "?"), g.digits);

  auto target = basis_vector(sys.basis, "3L(y)-L(b)", {{"y", Rational(3)}, {"b", Rational(-1)}},
                             std::nullopt);
  auto cert = eliminate(rows, target);
  if (!cert) {
    rep.add("certificate", false, "exists", "target outside row span", g.digits);
    rep.finish(g);
    return 1;
  }
  std::string mults;
  for (size_t i = 0; i < cert->multipliers.size(); ++i) {
    if (i) mults += " ";
    mults += rat_str(cert->multipliers[i]);
  }
  rep.add("certificate multipliers", true, "exact", mults, g.digits);
  rep.add("residual constant", cert->residual_constant == Rational(5, 18), "5/18",
          rat_str(cert->residual_constant), g.digits);

  // numeric check of the derived statement
  DilogRelation derived = relation_from_vector(sys.basis, target);
  derived.name = "3L(y)-L(b)";
  derived.rhs = cert->residual_constant;
  BigReal value = evaluate_relation(derived, ctx);
  BigReal pi = BigReal::pi(ctx);
  BigReal resid = abs(value - BigReal(cert->residual_constant, ctx) * pi * pi);
  bool small = resid < BigReal::pow10(-(g.digits - 20), ctx);
  rep.add("numeric residual of 3L(y)-L(b)=5pi^2/18", small,
          "<1e-" + std::to_string(g.digits - 20), resid.str(3), g.digits);
  return rep.finish(g);
}

int cmd_search(const GlobalConfig& g, const std::string& base, int cmax, int detect, int confirm) {
  Report rep;
  rep.command = "search";
  rep.config = config_echo(g);
  rep.config["base"] = base;
  rep.config["cmax"] = cmax;
  rep.config["detect_digits"] = detect;
  rep.config["confirm_digits"] = confirm;
  auto fam = default_family(parse_expr(base));
  ScanConfig cfg;
  cfg.cmax = cmax;
  cfg.qmax = Int(g.qmax);
  cfg.detect_digits = detect;
  cfg.confirm_digits = confirm;
  auto regs = load_registry(g);
  auto res = scan_two_term(fam, cfg, &regs);
  for (const auto& e : res.excluded)
    rep.add("excluded " + e, true, "outside (0,1)", "skipped", detect);
  for (const auto& h : res.hits) {
    std::string name = "L(" + h.f1 + ") + " + rat_str(h.a1) + " L(" + h.f2 + ")";
    std::string tags = h.known ? "known" : (h.generic ? "generic" : "new");
    rep.add(name + " [" + tags + "]", true, "rational", rat_str(h.q), h.confirm_digits);
  }
  if (res.hits.empty()) rep.add("no hits", true, "-", "-", detect);
  return rep.finish(g);
}

int cmd_nahm_solve(const GlobalConfig& g, const std::string& matrix, const std::string& a1s) {
  Report rep;
  rep.command = "nahm solve";
  rep.config = config_echo(g);
  rep.config["matrix"] = matrix;
  rep.config["a1"] = a1s;
  std::vector<Rational> abd;
  std::stringstream ss(matrix);
  std::string part;
  while (std::getline(ss, part, ',')) abd.push_back(rat_parse(part));
  if (abd.size() != 3) throw Error("matrix must be 'a,b,d' (rationals)");
  NahmMatrix A{abd[0], abd[1], abd[2], rat_parse(a1s)};
  PrecisionContext ctx = PrecisionContext::digits(g.digits);
  auto sols = solve_system(A, ctx, g.seed_grid);
  for (const auto& s : sols) {
    auto [value, ratio] = xi_value(s, A, ctx, Int(g.qmax));
    std::string name =
        "x=" + s.x.str(std::min(g.digits, 30)) + " y=" + s.y.str(std::min(g.digits, 30));
    rep.add(name, true, "L-ratio", rat_or(ratio), g.digits);
  }
  return rep.finish(g);
}

int cmd_nahm_table(const GlobalConfig& g) {
  Report rep;
  rep.command = "nahm table";
  rep.config = config_echo(g);
  PrecisionContext ctx = PrecisionContext::digits(std::min(g.digits, 60));
  auto rows = reproduce_table(ctx, g.seed_grid);
  for (const auto& r : rows) {
    std::string name = "A=(" + rat_str(r.A.a) + "," + rat_str(r.A.b) + ";" + rat_str(r.A.b) + "," +
                       rat_str(r.A.d) + ")";
    std::string observed = rat_or(r.ratio);
    if (r.ambiguous) observed += " (ambiguous)";
    rep.add(name, r.pass, rat_str(r.expected), observed, ctx.target_digits);
  }
  return rep.finish(g);
}

int cmd_qseries(const GlobalConfig& g, int which, bool printed_variant) {
  Report rep;
  rep.command = "qseries";
  rep.config = config_echo(g);
  rep.config["identity"] = which;
  auto r = printed_variant ? kursungoz_printed_variant(g.order) : kursungoz_check(which, g.order);
  std::string name =
      "identity " + std::to_string(which) + (printed_variant ? " (printed variant)" : "");
  std::string observed =
      r.match ? "match" : ("first mismatch at q^" + std::to_string(*r.first_mismatch));
  rep.add(name + " through q^" + std::to_string(g.order), r.match, "match", observed, 0);
  return rep.finish(g);
}

int cmd_polyid(const GlobalConfig& g) {
  Report rep;
  rep.command = "polyid";
  rep.config = config_echo(g);
  PrecisionContext ctx = PrecisionContext::digits(g.digits);
  auto r = check_poly_identities(ctx);
  rep.add("septic product", r.deg7_product_ok, "exact", r.deg7_product_ok ? "exact" : "mismatch",
          0);
  rep.add("degree-42 division", r.deg42_division_ok, "zero remainder",
          r.deg42_division_ok ? "zero remainder" : "nonzero remainder", 0);
  rep.add("degree-42 coefficients", r.deg42_coefficients_ok, "43 matched",
          r.deg42_coefficients_ok ? "43 matched"
                                  : std::to_string(r.mismatched_degrees.size()) + " mismatched",
          0);
  rep.add("degree-42 product", r.deg42_product_ok, "exact",
          r.deg42_product_ok ? "exact" : "mismatch", 0);
  rep.add("u1^19 = (1-a)^3 a^2", r.numeric_u19_ok, "<1e-" + std::to_string(g.digits - 20),
          r.numeric_u19_ok ? "pass" : "fail", g.digits);
  rep.add("u1^19 (1-a)^7 = a^8", r.numeric_u19_scaled_ok, "<1e-" + std::to_string(g.digits - 20),
          r.numeric_u19_scaled_ok ? "pass" : "fail", g.digits);
  return rep.finish(g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diloglab: two-term dilogarithm identities, Nahm systems, q-series"};
  app.require_subcommand(1);

  GlobalConfig g;
  app.add_option("--digits", g.digits, "working precision in decimal digits")
      ->envname("DILOGLAB_DIGITS")
      ->check(CLI::Range(30, 100000));
  app.add_option("--qmax", g.qmax, "denominator bound for rational recognition")
      ->envname("DILOGLAB_QMAX");
  app.add_option("--report", g.report, "report format: text or json")
      ->envname("DILOGLAB_REPORT")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--registry", g.registry_path, "path to a JSON registry file")
      ->envname("DILOGLAB_REGISTRY");
  app.add_option("--seed-grid", g.seed_grid, "Newton seed grid size per axis")
      ->envname("DILOGLAB_SEED_GRID");
  app.add_option("--order", g.order, "power-series truncation order")
      ->envname("DILOGLAB_ORDER")
      ->check(CLI::Range(1, 100000));

  auto* verify = app.add_subcommand("verify", "verify registry identities");
  verify->fallthrough();
  std::vector<std::string> ids;
  bool all = false;
  verify->add_option("--id", ids, "identity name (repeatable)");
  verify->add_flag("--all", all, "verify every record");

  auto* prove = app.add_subcommand("prove-kanade", "replay the elimination proof");
  prove->fallthrough();
  std::string drop_row;
  prove->add_option("--drop-row", drop_row, "drop a named system row (failure-mode testing)");

  auto* search = app.add_subcommand("search", "scan for two-term identities");
  search->fallthrough();
  std::string base;
  int cmax = 99, detect = 60, confirm = 120;
  search->add_option("--base", base, "base expression for the element family")->required();
  search->add_option("--cmax", cmax, "coefficient bound for a1 = c1/c2");
  search->add_option("--detect-digits", detect, "detection precision");
  search->add_option("--confirm-digits", confirm, "confirmation precision");

  auto* nahm = app.add_subcommand("nahm", "rank-2 Nahm systems");
  nahm->fallthrough();
  nahm->require_subcommand(1);
  auto* nahm_solve = nahm->add_subcommand("solve", "solve one system");
  nahm_solve->fallthrough();
  std::string matrix, a1s = "1";
  nahm_solve->add_option("matrix", matrix, "matrix as 'a,b,d' (rationals)")->required();
  nahm_solve->add_option("--a1", a1s, "exponent modifier a1");
  auto* nahm_table = nahm->add_subcommand("table", "reproduce the eleven-matrix table");
  nahm_table->fallthrough();

  auto* qs = app.add_subcommand("qseries", "verify the sum-product identities");
  qs->fallthrough();
  int which = 1;
  bool printed_variant = false;
  qs->add_option("--identity", which, "identity index (1-3)")->check(CLI::Range(1, 3));
  qs->add_flag("--printed-variant", printed_variant,
               "use the printed residue set {1,3,6,9} for identity 1");

  auto* polyid = app.add_subcommand("polyid", "verify the exact polynomial identities");
  polyid->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(g, ids, all);
    if (*prove) return cmd_prove_kanade(g, drop_row);
    if (*search) return cmd_search(g, base, cmax, detect, confirm);
    if (*nahm_solve) return cmd_nahm_solve(g, matrix, a1s);
    if (*nahm_table) return cmd_nahm_table(g);
    if (*qs) return cmd_qseries(g, which, printed_variant);
    if (*polyid) return cmd_polyid(g);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
