#include "dilog/qseries.hpp"

#include <algorithm>

namespace dilog {

PowerSeries PowerSeries::zero(int order) {
  if (order < 0) throw Error("series order must be nonnegative");
  PowerSeries s;
  s.order = order;
  s.c.assign(static_cast<size_t>(order) + 1, Int(0));
  return s;
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s = zero(order);
  s.c[0] = 1;
  return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  int order = std::min(a.order, b.order);
  PowerSeries s = PowerSeries::zero(order);
  for (int i = 0; i <= order; ++i)
    s.c[static_cast<size_t>(i)] = a.c[static_cast<size_t>(i)] + b.c[static_cast<size_t>(i)];
  return s;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  int order = std::min(a.order, b.order);
  PowerSeries s = PowerSeries::zero(order);
  for (int i = 0; i <= order; ++i) {
    const Int& ai = a.c[static_cast<size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      const Int& bj = b.c[static_cast<size_t>(j)];
      if (bj != 0) s.c[static_cast<size_t>(i + j)] += ai * bj;
    }
  }
  return s;
}

PowerSeries PowerSeries::shifted(int k) const {
  if (k < 0) throw Error("shift exponent must be nonnegative");
  PowerSeries s = zero(order);
  for (int i = 0; i + k <= order; ++i) s.c[static_cast<size_t>(i + k)] = c[static_cast<size_t>(i)];
  return s;
}

PowerSeries inv_pochhammer_series(int step, std::optional<int> parts_bound, int order) {
  if (step < 1) throw Error("inv_pochhammer_series: step must be >= 1");
  if (parts_bound && *parts_bound < 0) throw Error("inv_pochhammer_series: negative parts bound");
  PowerSeries s = PowerSeries::one(order);
  for (int k = 1; (!parts_bound || k <= *parts_bound) && step * k <= order; ++k) {
    int part = step * k;
    // multiply by 1/(1 - q^part): running prefix accumulation
    for (int j = part; j <= order; ++j)
      s.c[static_cast<size_t>(j)] += s.c[static_cast<size_t>(j - part)];
  }
  return s;
}

namespace {

void validate(const NahmSumSpec& spec) {
  if (spec.a11 % 2 != 0 || spec.a22 % 2 != 0)
    throw Error("nahm_sum_series: diagonal of A must be even for an integral form");
  if (spec.a11 <= 0 || spec.a11 * spec.a22 - spec.a12 * spec.a12 <= 0)
    throw Error("nahm_sum_series: A must be positive definite");
  if (spec.j1 < 1 || spec.j2 < 1) throw Error("nahm_sum_series: J entries must be positive");
}

long exponent_at(const NahmSumSpec& s, long n1, long n2) {
  return (s.a11 * n1 * n1 + 2 * s.a12 * n1 * n2 + s.a22 * n2 * n2) / 2 + s.b1 * n1 + s.b2 * n2 +
         s.c0;
}

// least admissible exponent over n2 >= 0 for fixed n1 (the form is convex in n2)
long min_exponent_over_n2(const NahmSumSpec& s, long n1) {
  double vertex = -(static_cast<double>(s.a12) * n1 + s.b2) / static_cast<double>(s.a22);
  long lo = std::max(0L, static_cast<long>(std::floor(vertex)));
  long best = exponent_at(s, n1, lo);
  for (long n2 = std::max(0L, lo - 1); n2 <= lo + 1; ++n2)
    best = std::min(best, exponent_at(s, n1, n2));
  return best;
}

}  // namespace

PowerSeries nahm_sum_series(const NahmSumSpec& spec, int order) {
  validate(spec);
  const long cap = 4'000'000;  // lattice guard
  long visited = 0;

  PowerSeries total = PowerSeries::zero(order);
  std::vector<PowerSeries> poch2;  // 1/(q^{j2}; q^{j2})_{n2}, built incrementally

  // The continuous minimum of the exponent over n2 is a positive-definite
  // parabola in n1 (a11 - a12^2/a22 > 0), so n1 is bounded by its larger
  // order-crossing; a small margin absorbs the continuous/lattice gap.
  const double qa = (spec.a11 - static_cast<double>(spec.a12) * spec.a12 / spec.a22) / 2.0;
  const double qb = spec.b1 - static_cast<double>(spec.a12) * spec.b2 / spec.a22;
  const double qc = spec.c0 - static_cast<double>(spec.b2) * spec.b2 / (2.0 * spec.a22);
  const double disc = qb * qb - 4.0 * qa * (qc - order);
  const long n1_max =
      disc < 0 ? 0 : static_cast<long>(std::ceil((-qb + std::sqrt(disc)) / (2.0 * qa))) + 4;

  for (long n1 = 0; n1 <= n1_max; ++n1) {
    if (min_exponent_over_n2(spec, n1) > order) continue;
    PowerSeries inner = PowerSeries::zero(order);
    bool any = false;
    double vertex = -(static_cast<double>(spec.a12) * n1 + spec.b2) / static_cast<double>(spec.a22);
    for (long n2 = 0;; ++n2) {
      long e = exponent_at(spec, n1, n2);
      if (e > order) {
        if (static_cast<double>(n2) >= vertex) break;  // past the minimum: done
        continue;
      }
      if (e < 0) throw Error("nahm_sum_series: negative exponent at an admissible lattice point");
      if (++visited > cap) throw Error("nahm_sum_series: lattice bound exceeded the configured cap");
      while (static_cast<long>(poch2.size()) <= n2)
        poch2.push_back(inv_pochhammer_series(spec.j2, static_cast<int>(poch2.size()), order));
      inner = inner + poch2[static_cast<size_t>(n2)].shifted(static_cast<int>(e));
      any = true;
    }
    if (any) {
      PowerSeries p1 = inv_pochhammer_series(spec.j1, static_cast<int>(n1), order);
      total = total + p1 * inner;
    }
  }
  return total;
}

PowerSeries product_side_series(const ProductSpec& spec, int order) {
  if (spec.modulus < 1) throw Error("product_side_series: modulus must be positive");
  {
    std::vector<int> sorted = spec.residues;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] < 1 || sorted[i] > spec.modulus)
        throw Error("product_side_series: residues must lie in [1, modulus]");
      if (i > 0 && sorted[i] == sorted[i - 1])
        throw Error("product_side_series: residues must be distinct");
    }
  }
  PowerSeries s = PowerSeries::one(order);
  for (int r : spec.residues) {
    for (int part = r; part <= order; part += spec.modulus) {
      for (int j = part; j <= order; ++j)
        s.c[static_cast<size_t>(j)] += s.c[static_cast<size_t>(j - part)];
    }
  }
  return s;
}

namespace {

NahmSumSpec kursungoz_nahm(int which) {
  NahmSumSpec spec{2, 3, 6, 0, 0, 0, 1, 3};
  switch (which) {
    case 1: spec.b1 = 0; spec.b2 = 0; break;
    case 2: spec.b1 = 1; spec.b2 = 3; break;
    case 3: spec.b1 = 2; spec.b2 = 3; break;
    default: throw Error("kursungoz_check: identity index must be 1, 2 or 3");
  }
  return spec;
}

QSeriesReport compare(int which, const PowerSeries& nahm, const PowerSeries& prod) {
  QSeriesReport rep;
  rep.which = which;
  rep.order = nahm.order;
  rep.match = true;
  for (int i = 0; i <= nahm.order; ++i) {
    if (nahm.c[static_cast<size_t>(i)] != prod.c[static_cast<size_t>(i)]) {
      rep.match = false;
      rep.first_mismatch = i;
      break;
    }
  }
  int keep = std::min(nahm.order, 6);
  rep.nahm_prefix.assign(nahm.c.begin(), nahm.c.begin() + keep + 1);
  rep.product_prefix.assign(prod.c.begin(), prod.c.begin() + keep + 1);
  return rep;
}

}  // namespace

QSeriesReport kursungoz_check_against(int which, const ProductSpec& product, int order) {
  PowerSeries nahm = nahm_sum_series(kursungoz_nahm(which), order);
  PowerSeries prod = product_side_series(product, order);
  return compare(which, nahm, prod);
}

QSeriesReport kursungoz_check(int which, int order) {
  ProductSpec product{9, {}};
  switch (which) {
    case 1: product.residues = {1, 3, 6, 8}; break;
    case 2: product.residues = {2, 3, 6, 7}; break;
    case 3: product.residues = {3, 4, 5, 6}; break;
    default: throw Error("kursungoz_check: identity index must be 1, 2 or 3");
  }
  return kursungoz_check_against(which, product, order);
}

QSeriesReport kursungoz_printed_variant(int order) {
  return kursungoz_check_against(1, ProductSpec{9, {1, 3, 6, 9}}, order);
}

}  // namespace dilog
