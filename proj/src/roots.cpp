#include "dilog/roots.hpp"

#include <algorithm>
#include <optional>

namespace dilog {

namespace {

using Coeffs = std::vector<Int>;

int variations(const Coeffs& c) {
  int v = 0, last = 0;
  for (const auto& x : c) {
    int s = x.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Coeffs reversed(Coeffs c) {
  std::reverse(c.begin(), c.end());
  return c;
}

// p(x) -> p(x+1), in place, O(n^2) synthetic shifts
void taylor_shift1(Coeffs& c) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n - 1; ++i)
    for (int j = n - 2; j >= i; --j) c[static_cast<size_t>(j)] += c[static_cast<size_t>(j) + 1];
}

// p(x) -> 2^n p(x/2) (keeps integer coefficients)
Coeffs half_scale(const Coeffs& c) {
  Coeffs r = c;
  const int n = static_cast<int>(c.size()) - 1;
  Int two(1);
  for (int i = n; i >= 0; --i) {
    r[static_cast<size_t>(i)] *= two;
    two <<= 1;
  }
  return r;
}

void strip_zero_root(Coeffs& c) {
  size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  if (k > 0) c.erase(c.begin(), c.begin() + static_cast<long>(k));
}

struct Isolated {
  // either an exact rational root, or an open isolating interval (lo, hi)
  std::optional<Rational> exact;
  Rational lo, hi;
};

// Descartes bound for the number of roots of q in the open interval (0,1).
int bound01(const Coeffs& q) {
  Coeffs t = reversed(q);
  taylor_shift1(t);
  return variations(t);
}

// Vincent-Collins-Akritas bisection; q squarefree with q(0) != 0, roots of q
// in (0,1) correspond to roots of the original in (lo, hi).
void isolate01(Coeffs q, const Rational& lo, const Rational& hi, std::vector<Isolated>& out) {
  strip_zero_root(q);
  if (q.size() <= 1) return;
  int v = bound01(q);
  if (v == 0) return;
  if (v == 1) {
    out.push_back(Isolated{std::nullopt, lo, hi});
    return;
  }
  Coeffs left = half_scale(q);
  Coeffs right = left;
  taylor_shift1(right);
  Rational mid = (lo + hi) / 2;
  if (!right.empty() && right[0] == 0) out.push_back(Isolated{mid, mid, mid});
  isolate01(std::move(left), lo, mid, out);
  isolate01(std::move(right), mid, hi, out);
}

// power-of-two Cauchy bound on the absolute value of the roots
Rational root_bound(const IntPolynomial& p) {
  Int mx(0);
  for (int i = 0; i < p.degree(); ++i)
    mx = std::max(mx, Int(boost::multiprecision::abs(p.coeff(i))));
  Int lead = boost::multiprecision::abs(p.leading());
  Int b = 1 + mx / lead + 1;
  Int pow2(1);
  while (pow2 < b) pow2 <<= 1;
  return Rational(pow2);
}

// isolating intervals for all real roots of a squarefree polynomial
std::vector<Isolated> isolate_real(const IntPolynomial& f) {
  std::vector<Isolated> out;
  Coeffs c = f.coeffs();
  strip_zero_root(c);  // the zero root is handled by the caller
  if (c.size() <= 1) return out;
  Rational bound = root_bound(f);
  Int b = rat_num(bound);

  // positive roots: substitute x -> b x and isolate over (0,1)
  {
    Coeffs q = c;
    Int scale(1);
    for (auto& v : q) {
      v *= scale;
      scale *= b;
    }
    isolate01(q, Rational(0), bound, out);
  }
  // negative roots: mirror
  {
    Coeffs q = c;
    for (size_t i = 1; i < q.size(); i += 2) q[i] = -q[i];
    std::vector<Isolated> neg;
    Int scale(1);
    for (auto& v : q) {
      v *= scale;
      scale *= b;
    }
    isolate01(q, Rational(0), bound, neg);
    for (auto& iso : neg) {
      if (iso.exact) {
        Rational r = -*iso.exact;
        out.push_back(Isolated{r, r, r});
      } else {
        out.push_back(Isolated{std::nullopt, -iso.hi, -iso.lo});
      }
    }
  }
  return out;
}

// exact bisection until the interval is narrower than 2^-20
void bisect_narrow(const IntPolynomial& f, Rational& lo, Rational& hi) {
  const Rational width_target(Int(1), Int(1) << 20);
  int slo = f.sign_at(lo);
  while (hi - lo > width_target) {
    Rational mid = (lo + hi) / 2;
    int sm = f.sign_at(mid);
    if (sm == 0) {
      lo = hi = mid;
      return;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
}

BigReal newton_refine(const IntPolynomial& f, Rational lo, Rational hi,
                      const PrecisionContext& ctx) {
  if (lo == hi) return BigReal(lo, ctx);
  IntPolynomial df = f.derivative();
  BigReal x(Rational((lo + hi) / 2), ctx);
  BigReal blo(lo, ctx), bhi(hi, ctx);
  BigReal eps = ldexp2(BigReal(1, ctx), -static_cast<long>(ctx.working_bits) + 6);
  for (int it = 0; it < 200; ++it) {
    BigReal fx = f.eval(x);
    if (fx.is_zero()) return x;
    BigReal dfx = df.eval(x);
    if (dfx.is_zero()) break;  // fall back to bisection below
    BigReal step = fx / dfx;
    BigReal nx = x - step;
    if (nx < blo || nx > bhi) {
      // Newton left the bracket: shrink it exactly and restart
      bisect_narrow(f, lo, hi);
      Rational mid = (lo + hi) / 2;
      if (lo == hi) return BigReal(lo, ctx);
      x = BigReal(mid, ctx);
      blo = BigReal(lo, ctx);
      bhi = BigReal(hi, ctx);
      continue;
    }
    x = nx;
    if (abs(step) <= eps * (abs(x) + 1)) return x;
  }
  return x;
}

}  // namespace

std::vector<RealRoot> real_roots(const IntPolynomial& p, const PrecisionContext& ctx) {
  if (p.is_zero()) throw Error("real_roots of the zero polynomial");
  std::vector<RealRoot> roots;
  if (p.degree() == 0) return roots;

  // zero roots
  int zero_mult = 0;
  Coeffs c = p.coeffs();
  while (zero_mult < static_cast<int>(c.size()) && c[static_cast<size_t>(zero_mult)] == 0)
    ++zero_mult;
  IntPolynomial rest{Coeffs(c.begin() + zero_mult, c.end())};
  if (zero_mult > 0) roots.push_back(RealRoot{BigReal(0L, ctx), zero_mult});

  if (rest.degree() >= 1) {
    for (const auto& [factor, mult] : IntPolynomial::squarefree_decompose(rest)) {
      for (auto& iso : isolate_real(factor)) {
        BigReal v = iso.exact ? BigReal(*iso.exact, ctx)
                              : newton_refine(factor, iso.lo, iso.hi, ctx);
        roots.push_back(RealRoot{std::move(v), mult});
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return roots;
}

}  // namespace dilog
