#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stdlat/enumerate.hpp"
#include "stdlat/norms.hpp"
#include "stdlat/types.hpp"

namespace stdlat {

// A lattice is standard when some basis b_1..b_n has ||b_i|| = lambda_i.
enum class Verdict { Standard, NonStandard };

std::string_view to_string(Verdict v);

struct SearchStats {
  // |S_i|: number of sign-canonical vectors of norm exactly lambda_i.
  std::vector<std::size_t> candidates_per_level;
  std::uint64_t nodes_explored = 0;
  std::uint64_t pruned_by_rank = 0;
  std::uint64_t pruned_by_minors = 0;
};

struct StandardnessCertificate {
  Verdict verdict = Verdict::NonStandard;
  // Present iff Standard; rows sorted by norm, row i has norm lambda_i.
  std::optional<IntMatrix> basis;
  SuccessiveMinima minima;
  SearchStats search_stats;
};

// Exhaustive backtracking over tuples (b_1..b_n) with b_i of norm exactly
// lambda_i. The search order is deterministic, so re-running it replays the
// certificate.
StandardnessCertificate check_standard(const LatticeBasis& b, NormKind kind,
                                       const EnumerationLimits& limits = {});

// Builds a basis achieving the L2 successive minima for dim <= 4 by
// induction on the dimension: standardize the section through the first
// n-1 minima witnesses, append the last witness, and in the one exceptional
// four-dimensional configuration replace it by the half-coset vector.
// Throws InputError for dim > 4 and ConsistencyError if the result fails
// verification.
IntMatrix standardize_low_dim(const LatticeBasis& b,
                              const EnumerationLimits& limits = {});

// Basis of H ∩ L(B), H = span(spanning). Throws InputError when the spanning
// vectors are dependent or not lattice vectors.
IntMatrix section_lattice(const LatticeBasis& b, const IntMatrix& spanning);
IntMatrix section_lattice(const IntMatrix& generators, const IntMatrix& spanning);

bool is_orthogonal_basis(const LatticeBasis& b);

}  // namespace stdlat
