#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "stdlat/types.hpp"

namespace stdlat {

enum class NormKind { L1, L2, Linf };

std::string_view to_string(NormKind kind);
// Accepts "l1", "l2", "linf" (case-insensitive).
std::optional<NormKind> parse_norm_kind(std::string_view text);

// Exact size of a vector under a fixed norm. L2 is carried SQUARED so the
// value stays rational; the square map is monotone, so every comparison and
// argmin is preserved.
struct NormValue {
  NormKind kind = NormKind::L2;
  Rational value;

  // Throws InputError when kinds differ.
  friend std::strong_ordering operator<=>(const NormValue& a, const NormValue& b);
  friend bool operator==(const NormValue& a, const NormValue& b);
};

NormValue measure(const IntVector& v, NormKind kind);
NormValue measure(const RatVector& v, NormKind kind);

// a <= b; throws InputError on kind mismatch.
bool norm_le(const NormValue& a, const NormValue& b);

// Squared L2 radius R^2 such that ||v||_kind <= bound implies ||v||_2^2 <= R^2.
NormValue enumeration_radius_in_l2(const NormValue& bound, std::size_t dim);

// Multiply the underlying (unsquared) norm by an integer factor.
NormValue scale_norm(const NormValue& v, const Integer& factor);

// "4" or "1/2"; L2 values are the squared norm.
std::string format_value(const NormValue& v);

}  // namespace stdlat
