#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stdlat/norms.hpp"
#include "stdlat/types.hpp"

namespace stdlat {

struct EnumerationLimits {
  // Ceiling on the number of nonzero lattice points inside the L2 pruning
  // ball (before filtering by the target norm).
  std::uint64_t max_candidates = 10'000'000;
};

struct ShortVector {
  IntVector coords;
  NormValue norm;
};

// Nonzero lattice vectors with norm <= bound, one per +-pair (first nonzero
// coordinate positive), sorted by (norm, coordinates).
struct ShortVectorList {
  NormValue bound;
  std::vector<ShortVector> vectors;
};

// Throws ResourceError when limits.max_candidates is exceeded; the list is
// never truncated silently.
ShortVectorList enumerate_short(const LatticeBasis& b, NormKind kind,
                                const NormValue& bound,
                                const EnumerationLimits& limits = {});
// Same for k independent generator rows in n-space.
ShortVectorList enumerate_short(const IntMatrix& generators, NormKind kind,
                                const NormValue& bound,
                                const EnumerationLimits& limits = {});

struct SuccessiveMinima {
  NormKind kind = NormKind::L2;
  std::vector<NormValue> minima;
  IntMatrix witnesses;
};

SuccessiveMinima successive_minima(const LatticeBasis& b, NormKind kind,
                                   const EnumerationLimits& limits = {});
SuccessiveMinima successive_minima(const IntMatrix& generators, NormKind kind,
                                   const EnumerationLimits& limits = {});

struct WitnessCheck {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

// Re-verifies every SuccessiveMinima invariant against a fresh enumeration.
WitnessCheck minima_witness_check(const LatticeBasis& b,
                                  const SuccessiveMinima& sm,
                                  const EnumerationLimits& limits = {});

// Sign-canonical representative: first nonzero coordinate positive.
IntVector sign_canonical(IntVector v);

}  // namespace stdlat
