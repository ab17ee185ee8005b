#include "dilog/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace dilog {

namespace {

// Rational-coefficient helpers backing gcd/squarefree; ascending order,
// normalized (no trailing zeros).
using RatPoly = std::vector<Rational>;

RatPoly rp_from(const IntPolynomial& p) {
  RatPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

void rp_normalize(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_rem(RatPoly a, const RatPoly& b) {
  rp_normalize(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    rp_normalize(a);
  }
  return a;
}

IntPolynomial rp_to_primitive(const RatPoly& p) {
  if (p.empty()) return IntPolynomial{};
  Int l(1);
  for (const auto& c : p) l = boost::multiprecision::lcm(l, rat_den(c));
  std::vector<Int> z;
  z.reserve(p.size());
  for (const auto& c : p) z.push_back(rat_num(c * Rational(l)));
  IntPolynomial ip{std::move(z)};
  ip = ip.primitive();
  if (!ip.is_zero() && ip.leading() < 0) ip = ip.scaled(Int(-1));
  return ip;
}

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPolynomial IntPolynomial::x_power(int k) {
  std::vector<Int> c(static_cast<size_t>(k) + 1, Int(0));
  c.back() = 1;
  return IntPolynomial{std::move(c)};
}

IntPolynomial IntPolynomial::constant(Int v) { return IntPolynomial{std::vector<Int>{std::move(v)}}; }

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPolynomial::leading() const {
  if (c_.empty()) throw Error("zero polynomial has no leading coefficient");
  return c_.back();
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<Int> c(std::max(p.c_.size(), q.c_.size()), Int(0));
  for (size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
  for (size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
  return IntPolynomial{std::move(c)};
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<Int> c(std::max(p.c_.size(), q.c_.size()), Int(0));
  for (size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
  for (size_t i = 0; i < q.c_.size(); ++i) c[i] -= q.c_[i];
  return IntPolynomial{std::move(c)};
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Int> c(p.c_.size() + q.c_.size() - 1, Int(0));
  for (size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i] == 0) continue;
    for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
  }
  return IntPolynomial{std::move(c)};
}

IntPolynomial operator-(const IntPolynomial& p) { return p.scaled(Int(-1)); }

IntPolynomial IntPolynomial::scaled(const Int& k) const {
  std::vector<Int> c(c_);
  for (auto& v : c) v *= k;
  return IntPolynomial{std::move(c)};
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial r = constant(Int(1));
  IntPolynomial base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(i);
  return IntPolynomial{std::move(c)};
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial& num,
                                                              const IntPolynomial& den) {
  if (den.is_zero()) throw Error("polynomial division by zero");
  std::vector<Int> r = num.c_;
  int dr = static_cast<int>(r.size()) - 1;
  int dd = den.degree();
  if (dr < dd) return {IntPolynomial{}, num};
  std::vector<Int> q(static_cast<size_t>(dr - dd) + 1, Int(0));
  const Int& lead = den.leading();
  for (int k = dr - dd; k >= 0; --k) {
    Int top = r[static_cast<size_t>(k + dd)];
    if (top == 0) continue;
    if (top % lead != 0)
      throw Error("polynomial division is not exact over the integers");
    Int f = top / lead;
    q[static_cast<size_t>(k)] = f;
    for (int i = 0; i <= dd; ++i) r[static_cast<size_t>(k + i)] -= f * den.c_[static_cast<size_t>(i)];
  }
  return {IntPolynomial{std::move(q)}, IntPolynomial{std::move(r)}};
}

IntPolynomial IntPolynomial::gcd(const IntPolynomial& p, const IntPolynomial& q) {
  RatPoly a = rp_from(p), b = rp_from(q);
  rp_normalize(a);
  rp_normalize(b);
  while (!b.empty()) {
    RatPoly r = rp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return rp_to_primitive(a);
}

std::vector<std::pair<IntPolynomial, int>> IntPolynomial::squarefree_decompose(
    const IntPolynomial& p) {
  if (p.is_zero()) throw Error("squarefree decomposition of zero polynomial");
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm over Q, factors kept primitive over Z.
  IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) {
    out.emplace_back(p.primitive(), 1);
    return out;
  }
  // work with rational quotients: w = p/g, y = p'/g
  auto rat_div_exact = [](const IntPolynomial& num, const IntPolynomial& den) {
    // num/den exact over Q (den divides num); scale num so integer division works
    Int ld = den.leading();
    IntPolynomial scaled_num = num;
    // multiply num by ld^(deg diff + 1) to force exact integer steps
    int k = num.degree() - den.degree() + 1;
    for (int i = 0; i < k; ++i) scaled_num = scaled_num.scaled(ld);
    auto [quot, rem] = divmod(scaled_num, den);
    if (!rem.is_zero()) throw Error("internal: expected exact polynomial quotient");
    return quot.primitive();
  };
  IntPolynomial w = rat_div_exact(p, g);
  IntPolynomial y = rat_div_exact(p.derivative(), g);
  int i = 1;
  while (w.degree() > 0) {
    IntPolynomial z = y - w.derivative();
    IntPolynomial f = gcd(w, z);
    if (f.degree() > 0) out.emplace_back(f, i);
    if (z.is_zero()) break;
    w = rat_div_exact(w, f);
    y = rat_div_exact(z, f);
    ++i;
  }
  return out;
}

Int IntPolynomial::content() const {
  Int g(0);
  for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
  return g == 0 ? Int(1) : g;
}

IntPolynomial IntPolynomial::primitive() const {
  Int g = content();
  std::vector<Int> c(c_);
  for (auto& v : c) v /= g;
  return IntPolynomial{std::move(c)};
}

BigReal IntPolynomial::eval(const BigReal& x) const {
  PrecisionContext as{0, x.precision()};
  BigReal acc(0, as);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigReal(*it, as);
  return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  Rational v = eval(x);
  return v.sign();
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = boost::multiprecision::abs(c);
    if (a != 1 || i == 0) os << a.str();
    if (i >= 1) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace dilog
