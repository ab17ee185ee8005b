#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dilog/expr.hpp"
#include "dilog/polynomial.hpp"
#include "dilog/precision.hpp"
#include "dilog/relations.hpp"

namespace dilog {

/// Rational function of the base s, kept as an exact numerator/denominator
/// pair so elements can be evaluated at any precision.
struct FamilyFormula {
  std::string name;
  IntPolynomial num, den;

  BigReal eval_at(const BigReal& s) const;
};

struct ElementFamily {
  std::string name;
  ExprPtr base;
  std::vector<FamilyFormula> formulas;
};

/// The standard 21-element family: powers of s, 1/(1+s), s/(1+s), and the
/// products the five-term instances generate from them.
ElementFamily default_family(ExprPtr base);

struct FamilyValue {
  const FamilyFormula* formula;
  BigReal value;
  bool in_range;  // strictly inside (0, 1)
};

std::vector<FamilyValue> family_values(const ElementFamily& fam, const PrecisionContext& ctx);

struct SearchHit {
  std::string f1, f2;
  Rational a1;  // c1/c2 in lowest terms, canonicalized to a1 <= 1
  Rational q;   // (L(f1) + a1 L(f2)) / pi^2
  int detect_digits, confirm_digits;
  bool known = false;    // matches a registry record
  bool generic = false;  // persists for unrelated bases (pure functional identity)
};

struct ScanConfig {
  int cmax = 99;
  Int qmax = Int(10000);
  int detect_digits = 60;
  int confirm_digits = 120;
  bool flag_generic = true;
  bool flag_known = true;
};

struct ScanResult {
  std::vector<SearchHit> hits;          // canonical order, deduplicated
  std::vector<std::string> excluded;    // formulas outside (0,1) at this base
};

/// Pairwise rational-coefficient scan: for every ordered pair of in-range
/// elements and every a1 = c1/c2 <= 1 in lowest terms with c1, c2 <= cmax,
/// recognize (L(f1) + a1 L(f2))/pi^2 at detect precision and keep hits that
/// survive re-verification at confirm precision.
ScanResult scan_two_term(const ElementFamily& fam, const ScanConfig& cfg,
                         const std::vector<DilogRelation>* registry = nullptr);

}  // namespace dilog
