#pragma once

#include "stdlat/types.hpp"

namespace stdlat::detail {

// Exact rational LLL (delta = 3/4) on linearly independent rows. The result
// generates the same lattice; it only serves to shrink enumeration trees.
IntMatrix lll_reduce(IntMatrix rows);

}  // namespace stdlat::detail
