#pragma once

// Brute-force reference implementations for small instances. Nothing here
// calls into the enumerator or nearest-plane code; the two paths are meant to
// be checked against each other.

#include <cstdint>
#include <optional>
#include <string>

#include "stdlat/enumerate.hpp"
#include "stdlat/norms.hpp"
#include "stdlat/types.hpp"

namespace stdlat::oracle {

struct OracleLimits {
  std::size_t max_dim = 5;
  std::uint64_t max_box_points = 100'000'000;
};

// Per-coefficient bounds |x_i| <= bounds[i] covering every lattice vector
// x·B with norm <= bound. bounds[i] = ceil(R * ||column_i(B^-1)||_2) with R
// the L2 radius implied by the bound; M is the largest of them.
struct CoefficientBox {
  Integer m;
  IntVector bounds;
  std::string derivation;
};

CoefficientBox coefficient_box(const LatticeBasis& b, NormKind kind, const NormValue& bound);

SuccessiveMinima brute_minima(const LatticeBasis& b, NormKind kind,
                              const OracleLimits& limits = {});

// All nonzero lattice vectors with norm <= bound, sign-canonical and sorted
// by (norm, coordinates).
ShortVectorList brute_short_vectors(const LatticeBasis& b, NormKind kind,
                                    const NormValue& bound,
                                    const OracleLimits& limits = {});

struct ClosestPoint {
  IntVector point;
  IntVector coeffs;
  Rational dist_sq;
};

// Exact closest lattice point to v under L2. Ties resolve to the
// lexicographically smallest coefficient vector. `seed`, when given, is any
// lattice point used only to size the search region.
ClosestPoint brute_cvp(const LatticeBasis& b, const RatVector& v,
                       const std::optional<IntVector>& seed = std::nullopt,
                       const OracleLimits& limits = {});

}  // namespace stdlat::oracle
