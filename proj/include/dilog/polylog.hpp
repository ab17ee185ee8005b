#pragma once

#include "dilog/precision.hpp"

namespace dilog {

/// Evaluation strategy knobs. The direct series is used for |z| <= series_cutoff;
/// larger arguments go through the reflection/inversion ladder.
struct PolylogDomainPolicy {
  double series_cutoff = 0.5;  // must stay within [0.25, 0.75]
  bool reflection_enabled = true;
};

/// Li_m(z) for real |z| <= 1, m >= 2.
BigReal li_m(const BigReal& z, int m, const PrecisionContext& ctx,
             const PolylogDomainPolicy& policy = {});

/// Real dilogarithm on (-inf, 1]: direct series below the cutoff, Euler
/// reflection on (cutoff, 1], Landen transform for negative arguments.
BigReal li2_real(const BigReal& z, const PrecisionContext& ctx,
                 const PolylogDomainPolicy& policy = {});

/// Principal-branch complex dilogarithm (cut along [1, inf)).
BigComplex li2_complex(const BigComplex& z, const PrecisionContext& ctx,
                       const PolylogDomainPolicy& policy = {});

/// Rogers L-function on [-1, 1]: L(z) = Li2(z) + log|z| log(1-z)/2, with
/// L(0)=0, L(1)=pi^2/6, L(-1)=-pi^2/12. On (1/2, 1) computed as
/// pi^2/6 - L(1-z) to dodge the log(1-z) cancellation.
BigReal rogers_L(const BigReal& z, const PrecisionContext& ctx);

/// L(x)+L(y)-L(xy)-L(x(1-y)/(1-xy))-L(y(1-x)/(1-xy)) for x,y in (0,1);
/// vanishes identically (Rogers' five-term identity).
BigReal five_term_residual(const BigReal& x, const BigReal& y, const PrecisionContext& ctx);

/// Truncation order that makes the direct-series tail |z|^(N+1)/((N+1)^m (1-|z|))
/// smaller than 10^-digits; exposed for the tail-bound tests.
long li_series_order(const BigReal& abs_z, int m, int digits);

/// Direct series sum_{n=1}^{N} z^n / n^m with explicit truncation order.
BigReal li_series_direct(const BigReal& z, int m, long order, const PrecisionContext& ctx);

}  // namespace dilog
