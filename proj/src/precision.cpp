#include "dilog/precision.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace dilog {

Rational rat_parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw Error("rational with zero denominator: " + text);
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error& e) {
    throw Error("bad rational literal '" + text + "'");
  }
}

std::string rat_str(const Rational& q) {
  if (rat_is_integer(q)) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

PrecisionContext PrecisionContext::digits(int d) {
  if (d < 1) throw Error("target_digits must be positive");
  auto bits = static_cast<mpfr_prec_t>(std::ceil(d * std::log2(10.0))) + 64;
  return PrecisionContext{d, bits};
}

BigReal::BigReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); }

BigReal::BigReal() { mpfr_init2(v_, MPFR_PREC_MIN); }

BigReal::BigReal(const PrecisionContext& ctx) {
  mpfr_init2(v_, ctx.working_bits);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long v, const PrecisionContext& ctx) {
  mpfr_init2(v_, ctx.working_bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigReal::BigReal(const Rational& q, const PrecisionContext& ctx) {
  mpfr_init2(v_, ctx.working_bits);
  mpfr_set_q(v_, q.backend().data(), MPFR_RNDN);
}

BigReal::BigReal(const Int& z, const PrecisionContext& ctx) {
  mpfr_init2(v_, ctx.working_bits);
  mpfr_set_z(v_, z.backend().data(), MPFR_RNDN);
}

BigReal::BigReal(const std::string& decimal, const PrecisionContext& ctx) {
  mpfr_init2(v_, ctx.working_bits);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw Error("bad decimal literal '" + decimal + "'");
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

Int BigReal::floor() const {
  Int z;
  mpfr_get_z(z.backend().data(), v_, MPFR_RNDD);
  return z;
}

std::string BigReal::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m = m.substr(1);
  }
  std::string out = sign + m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(e - 1);
  return out;
}

BigReal BigReal::pi(const PrecisionContext& ctx) {
  BigReal r(ctx.working_bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow10(long k, const PrecisionContext& ctx) {
  BigReal r(ctx.working_bits);
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, k, MPFR_RNDN);
  return r;
}

BigReal BigReal::like(const BigReal& a, const BigReal& b) {
  return BigReal(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r = BigReal::like(a, b);
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r = BigReal::like(a, b);
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r = BigReal::like(a, b);
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, const BigReal& b) {
  if (b.is_zero()) throw Error("division by zero");
  BigReal r = BigReal::like(a, b);
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a) {
  BigReal r(a);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}
BigReal operator+(const BigReal& a, long b) {
  BigReal r(a);
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, long b) {
  BigReal r(a);
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator-(long a, const BigReal& b) {
  BigReal r(b);
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, long b) {
  BigReal r(a);
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, const Rational& q) {
  BigReal r(a);
  mpfr_mul_q(r.v_, a.v_, q.backend().data(), MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, long b) {
  if (b == 0) throw Error("division by zero");
  BigReal r(a);
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator/(long a, const BigReal& b) {
  if (b.is_zero()) throw Error("division by zero");
  BigReal r(b);
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& b) { return *this = *this + b; }
BigReal& BigReal::operator-=(const BigReal& b) { return *this = *this - b; }
BigReal& BigReal::operator*=(const BigReal& b) { return *this = *this * b; }
BigReal& BigReal::operator/=(const BigReal& b) { return *this = *this / b; }

BigReal abs(const BigReal& a) {
  BigReal r(a);
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}
BigReal sqrt(const BigReal& a) {
  if (a.sign() < 0) throw Error("sqrt of negative value");
  BigReal r(a);
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}
BigReal log(const BigReal& a) {
  if (a.sign() <= 0) throw Error("log of non-positive value");
  BigReal r(a);
  mpfr_log(r.v_, a.v_, MPFR_RNDN);
  return r;
}
BigReal exp(const BigReal& a) {
  BigReal r(a);
  mpfr_exp(r.v_, a.v_, MPFR_RNDN);
  return r;
}
BigReal sin(const BigReal& a) {
  BigReal r(a);
  mpfr_sin(r.v_, a.v_, MPFR_RNDN);
  return r;
}
BigReal cos(const BigReal& a) {
  BigReal r(a);
  mpfr_cos(r.v_, a.v_, MPFR_RNDN);
  return r;
}
BigReal sec(const BigReal& a) {
  BigReal r(a);
  mpfr_sec(r.v_, a.v_, MPFR_RNDN);
  return r;
}
BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r = BigReal::like(y, x);
  mpfr_atan2(r.v_, y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
BigReal pow(const BigReal& base, const BigReal& e) {
  BigReal r = BigReal::like(base, e);
  mpfr_pow(r.v_, base.raw(), e.raw(), MPFR_RNDN);
  return r;
}
BigReal pow(const BigReal& base, const Rational& e) {
  if (rat_is_integer(e)) {
    BigReal r(base);
    mpfr_pow_z(r.v_, base.raw(), rat_num(e).backend().data(), MPFR_RNDN);
    return r;
  }
  if (base.sign() <= 0) throw Error("non-integer power of non-positive base");
  BigReal ebr(MPFR_PREC_MIN);
  mpfr_set_prec(ebr.v_, base.precision());
  mpfr_set_q(ebr.v_, e.backend().data(), MPFR_RNDN);
  return pow(base, ebr);
}
BigReal ldexp2(const BigReal& a, long k) {
  BigReal r(a);
  mpfr_mul_2si(r.v_, a.v_, k, MPFR_RNDN);
  return r;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigReal n = b.norm2();
  if (n.is_zero()) throw Error("complex division by zero");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

BigComplex log(const BigComplex& a) {
  if (a.re.is_zero() && a.im.is_zero()) throw Error("log of complex zero");
  return {log(a.norm2()) / 2, atan2(a.im, a.re)};
}

}  // namespace dilog
