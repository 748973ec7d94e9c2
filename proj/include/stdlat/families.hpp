#pragma once

#include <cstddef>

#include "stdlat/enumerate.hpp"
#include "stdlat/standardness.hpp"
#include "stdlat/types.hpp"

namespace stdlat {

// Basis of the parity lattice {a in Z^n : a_1 = ... = a_n (mod 2)}:
// rows 2e_1, ..., 2e_{n-1}, (1, ..., 1). Throws InputError for n < 1.
LatticeBasis parity_lattice(std::size_t n);

// Direct replay of the coset argument for the parity lattice.
struct ParityArgument {
  // Minimum over nonzero all-even vectors: every such vector has a
  // coordinate of absolute value >= 2, attained by 2e_1.
  NormValue even_min;
  // Minimum over all-odd vectors: every coordinate is nonzero, attained by
  // (1, ..., 1).
  NormValue odd_min;
  // The same two minima recomputed by enumeration, split by coset.
  NormValue even_min_enumerated;
  NormValue odd_min_enumerated;
  Integer covolume;             // 2^(n-1)
  Integer even_tuple_divisor;   // 2^n divides det of any all-even n-tuple
  // covolume is not a multiple of even_tuple_divisor, so every basis
  // contains an odd vector.
  bool basis_needs_odd_vector = false;
  // odd_min > lambda_n
  bool odd_vectors_too_long = false;
};

struct FamilyReport {
  std::size_t n = 0;
  NormKind kind = NormKind::L2;
  SuccessiveMinima minima;
  Verdict verdict = Verdict::NonStandard;
  StandardnessCertificate certificate;
  ParityArgument parity_argument;
  // verdict is NonStandard iff odd_vectors_too_long, and the enumerated
  // coset minima match the direct ones.
  bool consistent = false;
};

FamilyReport verify_family(std::size_t n, NormKind kind,
                           const EnumerationLimits& limits = {});

}  // namespace stdlat
