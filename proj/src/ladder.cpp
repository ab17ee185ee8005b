#include "dilog/ladder.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "dilog/polylog.hpp"
#include "dilog/recognize.hpp"

namespace dilog {

BigReal FamilyFormula::eval_at(const BigReal& s) const {
  BigReal d = den.eval(s);
  if (d.is_zero()) throw Error("family formula '" + name + "': denominator vanishes");
  return num.eval(s) / d;
}

ElementFamily default_family(ExprPtr base) {
  ElementFamily fam;
  fam.name = "standard";
  fam.base = std::move(base);
  auto add = [&](const std::string& n, IntPolynomial num, IntPolynomial den) {
    fam.formulas.push_back(FamilyFormula{n, std::move(num), std::move(den)});
  };
  add("s", {0, 1}, {1});
  add("s^2", {0, 0, 1}, {1});
  add("s^3", {0, 0, 0, 1}, {1});
  add("1/(1+s)", {1}, {1, 1});
  add("1/(1+s)^2", {1}, {1, 2, 1});
  add("s/(1+s)", {0, 1}, {1, 1});
  add("(s/(1+s))^2", {0, 0, 1}, {1, 2, 1});
  add("s^2/(1+s)", {0, 0, 1}, {1, 1});
  add("(s+1-s^2)/(s+1)", {1, 1, -1}, {1, 1});
  add("s/(1+2s)", {0, 1}, {1, 2});
  add("1/(s+2)", {1}, {2, 1});
  add("1/(s(s+2))", {1}, {0, 2, 1});
  add("1/(s^2(s+2)^2)", {1}, {0, 0, 4, 4, 1});
  add("s^3(s+2)/(2s+1)", {0, 0, 0, 2, 1}, {1, 2});
  add("(1-s^2)/(2s+1)", {1, 0, -1}, {1, 2});
  add("s^2/(s^2+s+1)", {0, 0, 1}, {1, 1, 1});
  add("s(s+1)/(s^2+s+1)", {0, 1, 1}, {1, 1, 1});
  add("1/(s^2+3s+1)", {1}, {1, 3, 1});
  add("s/(s^2+3s+1)", {0, 1}, {1, 3, 1});
  add("(s+1)/(s^2+3s+1)", {1, 1}, {1, 3, 1});
  add("1/(s^2+3s+2)", {1}, {2, 3, 1});
  return fam;
}

std::vector<FamilyValue> family_values(const ElementFamily& fam, const PrecisionContext& ctx) {
  BigReal s = eval_expr(fam.base, ctx);
  std::vector<FamilyValue> out;
  out.reserve(fam.formulas.size());
  for (const auto& f : fam.formulas) {
    BigReal v = f.eval_at(s);
    bool ok = v.sign() > 0 && v < 1L;
    out.push_back(FamilyValue{&f, std::move(v), ok});
  }
  return out;
}

namespace {

struct RawHit {
  size_t i, j;
  Rational a1, q;
  bool operator<(const RawHit& o) const {
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    if (a1 != o.a1) return a1 < o.a1;
    return q < o.q;
  }
};

// detect-precision scan over one family instance; returns candidate tuples
std::vector<RawHit> raw_scan(const ElementFamily& fam, const ScanConfig& cfg,
                             std::vector<std::string>* excluded) {
  PrecisionContext detect = PrecisionContext::digits(cfg.detect_digits);
  int tol = cfg.detect_digits - 20;

  std::vector<size_t> live;
  std::vector<BigReal> lvals;
  auto values = family_values(fam, detect);
  for (size_t k = 0; k < values.size(); ++k) {
    if (!values[k].in_range) {
      if (excluded) excluded->push_back(values[k].formula->name);
      continue;
    }
    live.push_back(k);
    lvals.push_back(rogers_L(values[k].value, detect));
  }

  BigReal pi = BigReal::pi(detect);
  BigReal inv_pi2 = 1 / (pi * pi);

  std::vector<Rational> ratios;  // c1/c2 <= 1, lowest terms
  for (long c2 = 1; c2 <= cfg.cmax; ++c2)
    for (long c1 = 1; c1 <= c2; ++c1)
      if (boost::multiprecision::gcd(Int(c1), Int(c2)) == 1) ratios.emplace_back(c1, c2);
  std::vector<BigReal> ratio_vals;
  ratio_vals.reserve(ratios.size());
  for (const auto& r : ratios) ratio_vals.emplace_back(r, detect);

  std::vector<RawHit> hits;
  for (size_t bj = 0; bj < live.size(); ++bj) {
    for (size_t rk = 0; rk < ratios.size(); ++rk) {
      BigReal scaled = ratio_vals[rk] * lvals[bj];
      bool unit = ratios[rk] == 1;
      for (size_t bi = 0; bi < live.size(); ++bi) {
        if (bi == bj) continue;
        if (unit && bi > bj) continue;  // a1 = 1 is symmetric; keep i < j
        BigReal v = (lvals[bi] + scaled) * inv_pi2;
        auto rec = recognize_rational(v, cfg.qmax, tol);
        if (rec) hits.push_back(RawHit{live[bi], live[bj], ratios[rk], *rec});
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

// confirm-precision filter
std::vector<RawHit> confirm_hits(const ElementFamily& fam, const ScanConfig& cfg,
                                 std::vector<RawHit> cands) {
  if (cands.empty()) return cands;
  PrecisionContext confirm = PrecisionContext::digits(cfg.confirm_digits);
  int tol = cfg.confirm_digits - 20;
  BigReal s = eval_expr(fam.base, confirm);
  std::map<size_t, BigReal> lcache;
  auto lval = [&](size_t k) {
    auto it = lcache.find(k);
    if (it != lcache.end()) return it->second;
    BigReal v = rogers_L(fam.formulas[k].eval_at(s), confirm);
    lcache.emplace(k, v);
    return v;
  };
  BigReal pi = BigReal::pi(confirm);
  BigReal pi2 = pi * pi;
  BigReal tolv = BigReal::pow10(-tol, confirm);
  std::vector<RawHit> out;
  for (auto& h : cands) {
    BigReal v = lval(h.i) + BigReal(h.a1, confirm) * lval(h.j);
    if (abs(v - BigReal(h.q, confirm) * pi2) < tolv * pi2) out.push_back(std::move(h));
  }
  return out;
}

std::optional<std::pair<Rational, Rational>> canonical_two_term(const DilogRelation& r) {
  if (r.kind != DilogRelation::Kind::RogersSum || r.terms.size() != 2 || !r.rhs)
    return std::nullopt;
  Rational a1 = r.terms[1].coeff / r.terms[0].coeff;
  Rational q = *r.rhs / r.terms[0].coeff;
  if (a1 > 1) {
    q = q / a1;
    a1 = Rational(1) / a1;
  }
  return std::make_pair(a1, q);
}

}  // namespace

ScanResult scan_two_term(const ElementFamily& fam, const ScanConfig& cfg,
                         const std::vector<DilogRelation>* registry) {
  if (cfg.cmax < 2) throw Error("scan_two_term: cmax must be >= 2");
  ScanResult result;
  auto confirmed = confirm_hits(fam, cfg, raw_scan(fam, cfg, &result.excluded));

  // generic filter: a tuple that persists for unrelated bases is a pure
  // functional identity, not a property of this base. The probe scans do not
  // depend on the target base, so they are memoized per configuration.
  using TupleSet =
      std::set<std::pair<std::pair<std::string, std::string>, std::pair<Rational, Rational>>>;
  TupleSet generic;
  if (cfg.flag_generic) {
    static std::map<std::tuple<int, Int, int, int>, TupleSet> cache;
    static std::mutex cache_mu;
    auto key = std::make_tuple(cfg.cmax, cfg.qmax, cfg.detect_digits, cfg.confirm_digits);
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      generic = it->second;
    } else {
      bool first = true;
      for (const char* probe : {"17/61", "23/71", "29/97"}) {
        ElementFamily probe_fam = default_family(parse_expr(probe));
        ScanConfig probe_cfg = cfg;
        probe_cfg.flag_generic = false;
        auto probe_hits =
            confirm_hits(probe_fam, probe_cfg, raw_scan(probe_fam, probe_cfg, nullptr));
        TupleSet cur;
        for (const auto& h : probe_hits)
          cur.insert({{probe_fam.formulas[h.i].name, probe_fam.formulas[h.j].name}, {h.a1, h.q}});
        if (first) {
          generic = std::move(cur);
          first = false;
        } else {
          TupleSet merged;
          std::set_intersection(generic.begin(), generic.end(), cur.begin(), cur.end(),
                                std::inserter(merged, merged.begin()));
          generic = std::move(merged);
        }
        if (generic.empty()) break;
      }
      cache.emplace(key, generic);
    }
  }

  // registry lookup values at detect precision
  PrecisionContext detect = PrecisionContext::digits(cfg.detect_digits);
  BigReal match_tol = BigReal::pow10(-(cfg.detect_digits - 20), detect);
  BigReal s = eval_expr(fam.base, detect);

  for (const auto& h : confirmed) {
    SearchHit hit;
    hit.f1 = fam.formulas[h.i].name;
    hit.f2 = fam.formulas[h.j].name;
    hit.a1 = h.a1;
    hit.q = h.q;
    hit.detect_digits = cfg.detect_digits;
    hit.confirm_digits = cfg.confirm_digits;
    if (cfg.flag_generic)
      hit.generic = generic.count({{hit.f1, hit.f2}, {h.a1, h.q}}) > 0;
    if (cfg.flag_known && registry) {
      BigReal v1 = fam.formulas[h.i].eval_at(s);
      BigReal v2 = fam.formulas[h.j].eval_at(s);
      for (const auto& r : *registry) {
        auto canon = canonical_two_term(r);
        if (!canon || canon->first != h.a1 || canon->second != h.q) continue;
        // coefficient-canonical order of the record's arguments
        bool swapped = r.terms[1].coeff / r.terms[0].coeff > 1;
        const ExprPtr& u0 = swapped ? r.terms[1].arg : r.terms[0].arg;
        const ExprPtr& u1 = swapped ? r.terms[0].arg : r.terms[1].arg;
        if (abs(v1 - eval_expr(u0, detect)) < match_tol &&
            abs(v2 - eval_expr(u1, detect)) < match_tol) {
          hit.known = true;
          break;
        }
      }
    }
    result.hits.push_back(std::move(hit));
  }
  return result;
}

}  // namespace dilog
