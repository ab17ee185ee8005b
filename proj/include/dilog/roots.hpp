#pragma once

#include <vector>

#include "dilog/polynomial.hpp"
#include "dilog/precision.hpp"

namespace dilog {

struct RealRoot {
  BigReal value;
  int multiplicity;
};

/// All real roots of p, ascending, refined to ctx.working_bits.
/// Isolation is exact (Descartes / Vincent-Collins-Akritas bisection on the
/// squarefree part), refinement is exact bisection to width 2^-20 followed by
/// safeguarded Newton. Multiplicities come from Yun's decomposition.
std::vector<RealRoot> real_roots(const IntPolynomial& p, const PrecisionContext& ctx);

}  // namespace dilog
