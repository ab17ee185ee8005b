#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "dilog/polynomial.hpp"
#include "dilog/precision.hpp"
#include "dilog/rational.hpp"

namespace dilog {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  size_t position;
};

struct RootSelector {
  enum class Mode { Index, Positive, SmallestPositive };
  Mode mode = Mode::Positive;
  int index = 0;

  friend bool operator==(const RootSelector& a, const RootSelector& b) {
    return a.mode == b.mode && (a.mode != Mode::Index || a.index == b.index);
  }
};

struct ConstExpr;
using ExprPtr = std::shared_ptr<const ConstExpr>;

/// Expression tree denoting an exact real constant. Trees are immutable and
/// shared; evaluation is a pure function of (tree, context).
struct ConstExpr {
  enum class Kind { Rat, Pi, Sqrt, Sin, Cos, Sec, Add, Sub, Mul, Div, Pow, Root };

  Kind kind;
  Rational rat;        // Rat literal; Pow exponent
  ExprPtr a, b;        // children (a only, for unary)
  IntPolynomial poly;  // Root
  RootSelector selector;
};

ExprPtr make_rat(Rational q);
ExprPtr make_pi();
ExprPtr make_unary(ConstExpr::Kind k, ExprPtr a);
ExprPtr make_binary(ConstExpr::Kind k, ExprPtr a, ExprPtr b);  // folds rational constants
ExprPtr make_pow(ExprPtr base, Rational exponent);
ExprPtr make_root(IntPolynomial p, RootSelector sel);

/// Grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := atom ("^" signed_rational)?
///   atom   := nonneg_int | "pi" | func "(" expr ")"
///           | "root(" intlist "," selector ")" | "(" expr ")"
///   func   := "sqrt" | "sin" | "cos" | "sec"
///   intlist := "[" int ("," int)* "]"          (ascending-degree coefficients)
///   selector := nonneg_int | "positive" | "smallest-positive"
/// The exponent after "^" is a signed rational literal, consumed greedily:
/// "x^1/19" is x^(1/19), not (x^1)/19. Whitespace is insignificant.
/// Arithmetic on two rational literals folds at parse time, so printing and
/// reparsing reproduces the tree exactly.
ExprPtr parse_expr(std::string_view text);

std::string print_expr(const ExprPtr& e);

BigReal eval_expr(const ExprPtr& e, const PrecisionContext& ctx);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace dilog
