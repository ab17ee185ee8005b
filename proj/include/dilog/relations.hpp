#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dilog/expr.hpp"
#include "dilog/precision.hpp"
#include "dilog/rational.hpp"

namespace dilog {

struct DilogTerm {
  Rational coeff;  // nonzero
  ExprPtr arg;     // must evaluate into [-1, 1]
};

/// sum coeff * L(arg) = rhs * pi^2 (rhs unset == "unknown").
/// kind ReLi2Powers encodes Re[sum coeff * Li2(z^power)] = rhs * pi^2 for a
/// fixed complex z given by component expressions.
struct DilogRelation {
  enum class Kind { RogersSum, ReLi2Powers };

  std::string name;
  std::vector<DilogTerm> terms;
  std::optional<Rational> rhs;
  std::string source;
  Kind kind = Kind::RogersSum;
  ExprPtr z_re, z_im;  // ReLi2Powers only
  struct PowerTerm {
    Rational coeff;
    int power;
  };
  std::vector<PowerTerm> cterms;
};

BigReal evaluate_relation(const DilogRelation& r, const PrecisionContext& ctx);

/// recognize(evaluate(r)/pi^2), two-stage (re-verified at doubled precision).
std::optional<Rational> complete_relation(const DilogRelation& r, const PrecisionContext& ctx,
                                          const Int& qmax);

struct VerifyOutcome {
  std::string name;
  std::optional<Rational> recognized;
  std::optional<Rational> expected;
  int residual_exponent;  // floor log10 of |value - expected*pi^2| (vs recognized when no rhs)
  int digits;
  bool pass;
};

VerifyOutcome verify_relation(const DilogRelation& r, const PrecisionContext& ctx, const Int& qmax);

/// The built-in identity registry (single-term classics, Lima, the quadratic
/// family, the plastic ladder, the pi/18 ladder, the Kanade identity and its
/// companions, the Bytsko sextic identity, the complex quartic record).
std::vector<DilogRelation> builtin_registry();

std::string registry_to_json(const std::vector<DilogRelation>& regs);
std::vector<DilogRelation> registry_from_json(const std::string& text);

// --- exact elimination over a symbol basis ------------------------------

struct SymbolBasis {
  std::vector<std::string> labels;
  std::vector<ExprPtr> exprs;
};

/// Rational coefficient row over a SymbolBasis plus one pi^2 column.
struct RelationVector {
  std::string name;
  std::vector<Rational> coeffs;
  std::optional<Rational> pi2;  // unset == unknown
};

RelationVector basis_vector(const SymbolBasis& basis, const std::string& name,
                            const std::vector<std::pair<std::string, Rational>>& entries,
                            std::optional<Rational> pi2);

/// DilogRelation whose terms are the nonzero basis coefficients of v.
DilogRelation relation_from_vector(const SymbolBasis& basis, const RelationVector& v);

struct KirillovSystem {
  SymbolBasis basis;
  std::vector<RelationVector> rows;
};

/// The elimination system at base x: seven ladder/duplication/five-term rows
/// plus the two reflection-closure rows (z = 1-x/(1+x) pairs with y, and c
/// pairs with h on the cubic x^3+3x^2 = 1). Every pi^2 column is measured
/// numerically via complete_relation and pinned exactly.
KirillovSystem kirillov_system(const ExprPtr& x_expr, const PrecisionContext& ctx,
                               const Int& qmax);

struct Certificate {
  std::vector<Rational> multipliers;  // one per input row
  RelationVector target;
  Rational residual_constant;  // sum multipliers * pi2 columns
};

/// Exact Gaussian elimination over Q: multipliers with
/// sum multipliers[i] * inputs[i] = target on every basis coordinate, or
/// nothing when the target is outside the row span. Throws if a used row has
/// an unknown pi^2 column.
std::optional<Certificate> eliminate(const std::vector<RelationVector>& inputs,
                                     const RelationVector& target);

// --- generic one-parameter relations -------------------------------------

struct GenericRelations {
  std::vector<DilogRelation> relations;       // rhs expected 0 for all
  std::vector<std::string> skipped;           // relations dropped (element left (0,1))
};

/// The seven generic relations at base s: four duplication instances, two
/// five-term instances, and the L(s)+L(s^2)-L(s^3) split. "L(f)^2" is read as
/// L(f^2) throughout (each relation is then an exact functional identity).
GenericRelations generic_s_relations(const ExprPtr& s_expr, const PrecisionContext& ctx);

struct FiveTermVariantDecision {
  BigReal corrected_residual;  // with element 1/(s^2+3s+2)
  BigReal printed_residual;    // with element 1/(s^2+3s+1)
  bool corrected_vanishes;
  bool printed_vanishes;
};

/// The last five-term relation admits two readings of its first product
/// element; this evaluates both and reports which one vanishes.
FiveTermVariantDecision last_five_term_variants(const ExprPtr& s_expr,
                                                const PrecisionContext& ctx);

}  // namespace dilog
