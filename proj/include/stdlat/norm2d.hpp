#pragma once

#include "stdlat/enumerate.hpp"
#include "stdlat/norms.hpp"
#include "stdlat/types.hpp"

namespace stdlat {

struct Reduced2DBasis {
  IntVector b1;
  IntVector b2;
  NormValue norm1;
  NormValue norm2;
  NormKind kind = NormKind::L2;
  int iterations = 0;
};

// Gauss/Lagrange reduction under any built-in norm. The returned pair is a
// basis achieving (lambda_1, lambda_2); both facts are re-checked against the
// enumerator before returning (ConsistencyError otherwise).
Reduced2DBasis reduce_2d(const LatticeBasis& b, NormKind kind,
                         const EnumerationLimits& limits = {});

// Integer q minimising ||b2 + q*b1||; ties go to the smallest |q|, then to
// q >= 0. Requires b1 != 0.
Integer min_translate(const IntVector& b2, const IntVector& b1, NormKind kind);

}  // namespace stdlat
