#pragma once

#include <functional>
#include <optional>

#include "dilog/precision.hpp"
#include "dilog/rational.hpp"

namespace dilog {

/// Continued-fraction rational recognition: returns p/q with q <= qmax and
/// |v - p/q| < 10^-tol_digits, or nothing. Any rational within the tolerance
/// and denominator bound is necessarily a convergent once
/// 10^-tol_digits < 1/(2 qmax^2), so walking convergents is exhaustive.
std::optional<Rational> recognize_rational(const BigReal& v, const Int& qmax, int tol_digits);

/// Two-stage confirmation: recognize at ctx, then re-evaluate at doubled
/// precision and require the same rational within the doubled tolerance
/// (2*target_digits - 20).
std::optional<Rational> recognize_confirmed(const std::function<BigReal(const PrecisionContext&)>& eval,
                                            const PrecisionContext& ctx, const Int& qmax,
                                            int tol_digits);

}  // namespace dilog
