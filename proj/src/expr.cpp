#include "dilog/expr.hpp"

#include <cctype>
#include <sstream>

#include "dilog/roots.hpp"

namespace dilog {

namespace {

ExprPtr node(ConstExpr e) { return std::make_shared<const ConstExpr>(std::move(e)); }

bool is_rat(const ExprPtr& e) { return e->kind == ConstExpr::Kind::Rat; }

Rational pow_rat(const Rational& base, const Int& e) {
  Rational r(1);
  Int n = boost::multiprecision::abs(e);
  Rational b = base;
  while (n > 0) {
    if ((n & 1) != 0) r *= b;
    b *= b;
    n >>= 1;
  }
  if (e < 0) {
    if (r == 0) throw Error("zero base with negative exponent");
    r = Rational(1) / r;
  }
  return r;
}

}  // namespace

ExprPtr make_rat(Rational q) {
  ConstExpr e;
  e.kind = ConstExpr::Kind::Rat;
  e.rat = std::move(q);
  return node(std::move(e));
}

ExprPtr make_pi() {
  ConstExpr e;
  e.kind = ConstExpr::Kind::Pi;
  return node(std::move(e));
}

ExprPtr make_unary(ConstExpr::Kind k, ExprPtr a) {
  ConstExpr e;
  e.kind = k;
  e.a = std::move(a);
  return node(std::move(e));
}

ExprPtr make_binary(ConstExpr::Kind k, ExprPtr a, ExprPtr b) {
  using K = ConstExpr::Kind;
  if (is_rat(a) && is_rat(b)) {
    switch (k) {
      case K::Add: return make_rat(a->rat + b->rat);
      case K::Sub: return make_rat(a->rat - b->rat);
      case K::Mul: return make_rat(a->rat * b->rat);
      case K::Div:
        if (b->rat == 0) throw Error("division by zero in constant expression");
        return make_rat(a->rat / b->rat);
      default: break;
    }
  }
  ConstExpr e;
  e.kind = k;
  e.a = std::move(a);
  e.b = std::move(b);
  return node(std::move(e));
}

ExprPtr make_pow(ExprPtr base, Rational exponent) {
  if (is_rat(base) && rat_is_integer(exponent)) return make_rat(pow_rat(base->rat, rat_num(exponent)));
  ConstExpr e;
  e.kind = ConstExpr::Kind::Pow;
  e.a = std::move(base);
  e.rat = std::move(exponent);
  return node(std::move(e));
}

ExprPtr make_root(IntPolynomial p, RootSelector sel) {
  ConstExpr e;
  e.kind = ConstExpr::Kind::Root;
  e.poly = std::move(p);
  e.selector = sel;
  return node(std::move(e));
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }

  Int parse_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer", pos);
    return Int(std::string(s.substr(start, pos - start)));
  }

  Int parse_int() {
    skip_ws();
    bool neg = accept('-');
    Int v = parse_uint();
    return neg ? Int(-v) : v;
  }

  // '-' is part of an identifier only in selector position (smallest-positive)
  std::string parse_ident(bool allow_dash = false) {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              (allow_dash && s[pos] == '-') || s[pos] == '_'))
      ++pos;
    return std::string(s.substr(start, pos - start));
  }

  Rational parse_signed_rational() {
    skip_ws();
    bool neg = accept('-');
    Int num = parse_uint();
    Int den(1);
    size_t save = pos;
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      skip_ws();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        den = parse_uint();
        if (den == 0) throw ParseError("zero denominator in exponent", pos);
      } else {
        pos = save;  // the '/' belongs to a division, not this literal
      }
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
  }

  ExprPtr parse_expr_level() {
    ExprPtr e = parse_term();
    for (;;) {
      if (accept('+'))
        e = make_binary(ConstExpr::Kind::Add, e, parse_term());
      else if (accept('-'))
        e = make_binary(ConstExpr::Kind::Sub, e, parse_term());
      else
        return e;
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    for (;;) {
      if (accept('*'))
        e = make_binary(ConstExpr::Kind::Mul, e, parse_factor());
      else if (accept('/'))
        e = make_binary(ConstExpr::Kind::Div, e, parse_factor());
      else
        return e;
    }
  }

  ExprPtr parse_factor() {
    ExprPtr a = parse_atom();
    if (accept('^')) return make_pow(a, parse_signed_rational());
    return a;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) return make_rat(Rational(parse_uint()));
    if (c == '(') {
      ++pos;
      ExprPtr e = parse_expr_level();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t id_pos = pos;
      std::string id = parse_ident();
      if (id == "pi") return make_pi();
      if (id == "sqrt" || id == "sin" || id == "cos" || id == "sec") {
        expect('(');
        ExprPtr arg = parse_expr_level();
        expect(')');
        ConstExpr::Kind k = id == "sqrt"  ? ConstExpr::Kind::Sqrt
                            : id == "sin" ? ConstExpr::Kind::Sin
                            : id == "cos" ? ConstExpr::Kind::Cos
                                          : ConstExpr::Kind::Sec;
        return make_unary(k, arg);
      }
      if (id == "root") {
        expect('(');
        expect('[');
        std::vector<Int> coeffs;
        coeffs.push_back(parse_int());
        while (accept(',')) coeffs.push_back(parse_int());
        expect(']');
        expect(',');
        RootSelector sel;
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          sel.mode = RootSelector::Mode::Index;
          sel.index = static_cast<int>(parse_uint());
        } else {
          std::string sv = parse_ident(true);
          if (sv == "positive")
            sel.mode = RootSelector::Mode::Positive;
          else if (sv == "smallest-positive")
            sel.mode = RootSelector::Mode::SmallestPositive;
          else
            throw ParseError("unknown root selector '" + sv + "'", pos);
        }
        expect(')');
        IntPolynomial p{std::move(coeffs)};
        if (p.is_zero()) throw ParseError("zero polynomial in root()", id_pos);
        return make_root(std::move(p), sel);
      }
      throw ParseError("unknown identifier '" + id + "'", id_pos);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
};

}  // namespace

ExprPtr parse_expr(std::string_view text) {
  Parser p{text};
  ExprPtr e = p.parse_expr_level();
  if (!p.eof()) throw ParseError("trailing input", p.pos);
  return e;
}

// ---------------------------------------------------------------------------
// printer

namespace {

// precedence: add/sub 1, mul/div 2, pow 3, atoms 4
int prec(const ConstExpr& e) {
  using K = ConstExpr::Kind;
  switch (e.kind) {
    case K::Add:
    case K::Sub: return 1;
    case K::Mul:
    case K::Div: return 2;
    case K::Pow: return 3;
    case K::Rat:
      if (e.rat < 0) return 4;                 // printed self-parenthesized
      return rat_is_integer(e.rat) ? 4 : 2;    // "p/q" reads as a division
    default: return 4;
  }
}

void print_node(const ConstExpr& e, std::ostream& os);

void print_child(const ExprPtr& c, int parent_prec, bool tight, std::ostream& os) {
  bool parens = prec(*c) < parent_prec || (tight && prec(*c) == parent_prec);
  if (parens) os << "(";
  print_node(*c, os);
  if (parens) os << ")";
}

void print_rat(const Rational& q, std::ostream& os) {
  if (q < 0) {
    os << "(0-";
    Rational a = -q;
    os << rat_str(a);
    os << ")";
  } else {
    os << rat_str(q);
  }
}

void print_node(const ConstExpr& e, std::ostream& os) {
  using K = ConstExpr::Kind;
  switch (e.kind) {
    case K::Rat: print_rat(e.rat, os); break;
    case K::Pi: os << "pi"; break;
    case K::Sqrt:
    case K::Sin:
    case K::Cos:
    case K::Sec: {
      os << (e.kind == K::Sqrt  ? "sqrt"
             : e.kind == K::Sin ? "sin"
             : e.kind == K::Cos ? "cos"
                                : "sec")
         << "(";
      print_node(*e.a, os);
      os << ")";
      break;
    }
    case K::Add:
      print_child(e.a, 1, false, os);
      os << "+";
      print_child(e.b, 1, true, os);
      break;
    case K::Sub:
      print_child(e.a, 1, false, os);
      os << "-";
      print_child(e.b, 1, true, os);
      break;
    case K::Mul:
      print_child(e.a, 2, false, os);
      os << "*";
      print_child(e.b, 2, true, os);
      break;
    case K::Div:
      print_child(e.a, 2, false, os);
      os << "/";
      print_child(e.b, 2, true, os);
      break;
    case K::Pow: {
      print_child(e.a, 4, false, os);  // any non-atom base gets parens
      os << "^";
      if (e.rat < 0) os << "-";
      Rational a = e.rat < 0 ? Rational(-e.rat) : e.rat;
      os << rat_str(a);
      break;
    }
    case K::Root: {
      os << "root([";
      for (int i = 0; i <= e.poly.degree(); ++i) {
        if (i) os << ",";
        os << e.poly.coeff(i).str();
      }
      os << "],";
      switch (e.selector.mode) {
        case RootSelector::Mode::Index: os << e.selector.index; break;
        case RootSelector::Mode::Positive: os << "positive"; break;
        case RootSelector::Mode::SmallestPositive: os << "smallest-positive"; break;
      }
      os << ")";
      break;
    }
  }
}

}  // namespace

std::string print_expr(const ExprPtr& e) {
  std::ostringstream os;
  print_node(*e, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// evaluation

BigReal eval_expr(const ExprPtr& e, const PrecisionContext& ctx) {
  using K = ConstExpr::Kind;
  switch (e->kind) {
    case K::Rat: return BigReal(e->rat, ctx);
    case K::Pi: return BigReal::pi(ctx);
    case K::Sqrt: return sqrt(eval_expr(e->a, ctx));
    case K::Sin: return sin(eval_expr(e->a, ctx));
    case K::Cos: return cos(eval_expr(e->a, ctx));
    case K::Sec: return sec(eval_expr(e->a, ctx));
    case K::Add: return eval_expr(e->a, ctx) + eval_expr(e->b, ctx);
    case K::Sub: return eval_expr(e->a, ctx) - eval_expr(e->b, ctx);
    case K::Mul: return eval_expr(e->a, ctx) * eval_expr(e->b, ctx);
    case K::Div: return eval_expr(e->a, ctx) / eval_expr(e->b, ctx);
    case K::Pow: {
      BigReal base = eval_expr(e->a, ctx);
      if (base.sign() <= 0) throw Error("power base must evaluate positive");
      return pow(base, e->rat);
    }
    case K::Root: {
      auto roots = real_roots(e->poly, ctx);
      switch (e->selector.mode) {
        case RootSelector::Mode::Index: {
          if (e->selector.index < 0 || e->selector.index >= static_cast<int>(roots.size()))
            throw Error("root index out of range");
          return roots[static_cast<size_t>(e->selector.index)].value;
        }
        case RootSelector::Mode::Positive: {
          const RealRoot* hit = nullptr;
          for (const auto& r : roots)
            if (r.value.sign() > 0) {
              if (hit) throw Error("polynomial has more than one positive real root");
              hit = &r;
            }
          if (!hit) throw Error("polynomial has no positive real root");
          return hit->value;
        }
        case RootSelector::Mode::SmallestPositive: {
          BigReal tiny = BigReal::pow10(-ctx.target_digits, ctx);
          for (const auto& r : roots)
            if (r.value > tiny) return r.value;
          throw Error("polynomial has no positive real root");
        }
      }
      throw Error("unreachable");
    }
  }
  throw Error("unreachable");
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  using K = ConstExpr::Kind;
  switch (a->kind) {
    case K::Rat: return a->rat == b->rat;
    case K::Pi: return true;
    case K::Sqrt:
    case K::Sin:
    case K::Cos:
    case K::Sec: return expr_equal(a->a, b->a);
    case K::Add:
    case K::Sub:
    case K::Mul:
    case K::Div: return expr_equal(a->a, b->a) && expr_equal(a->b, b->b);
    case K::Pow: return a->rat == b->rat && expr_equal(a->a, b->a);
    case K::Root: return a->poly == b->poly && a->selector == b->selector;
  }
  return false;
}

}  // namespace dilog
