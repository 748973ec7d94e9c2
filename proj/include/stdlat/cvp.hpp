#pragma once

#include "stdlat/types.hpp"

namespace stdlat {

// Result of nearest-plane rounding towards a rational target v. All
// distances are squared Euclidean.
struct NearestPointResult {
  IntVector point;
  IntVector coeffs;
  Rational dist_sq;
  // (n/4) * max_i ||b_i||^2, the guaranteed upper bound on dist_sq.
  Rational bound_sq;
  bool at_equality = false;
};

// Rounds the coefficient along the last Gram-Schmidt direction to the
// nearest integer (exact halves to even), subtracts that multiple of the last
// row and recurses on the remaining rows. The point found is within
// sqrt(n)/2 * max_i ||b_i|| of v, but is not necessarily the closest one.
NearestPointResult nearest_plane(const LatticeBasis& b, const RatVector& v);
NearestPointResult nearest_plane(const IntMatrix& generators, const RatVector& v);

// The three conditions under which the nearest-point bound is tight.
struct EqualityReport {
  bool pairwise_orthogonal = false;
  bool equal_row_norms = false;
  // Every basis coefficient of v lies in Z + 1/2.
  bool half_integer_coefficients = false;
  RatVector coefficients;
  NearestPointResult nearest;
  // all three conditions hold
  bool equality = false;
  // equality == nearest.at_equality
  bool consistent = false;
};

EqualityReport equality_case_analyze(const LatticeBasis& b, const RatVector& v);

}  // namespace stdlat
