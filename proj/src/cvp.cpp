#include "stdlat/cvp.hpp"

#include <algorithm>

#include "stdlat/errors.hpp"
#include "stdlat/exactlin.hpp"

namespace stdlat {

NearestPointResult nearest_plane(const IntMatrix& generators, const RatVector& v) {
  if (generators.empty()) throw InputError("nearest_plane: empty basis");
  const std::size_t k = generators.size();
  const std::size_t n = generators[0].size();
  if (v.size() != n) throw InputError("nearest_plane: target has the wrong length");

  const GsoData g = gso(generators);
  NearestPointResult out;
  out.coeffs.assign(k, 0);
  RatVector residual = v;
  for (std::size_t level = k; level-- > 0;) {
    const Rational c = dot(residual, g.bstar[level]) / g.bstar_sq[level];
    const Integer a = round_half_even(c);
    out.coeffs[level] = a;
    if (a == 0) continue;
    for (std::size_t j = 0; j < n; ++j) residual[j] -= Rational(a * generators[level][j]);
  }
  out.point = combine(out.coeffs, generators);
  out.dist_sq = dot(residual, residual);

  Integer max_sq = 0;
  for (const auto& row : generators) max_sq = std::max(max_sq, Integer(dot(row, row)));
  out.bound_sq = Rational(Integer(static_cast<unsigned long>(k) * max_sq), 4);
  out.bound_sq.canonicalize();
  out.at_equality = out.dist_sq == out.bound_sq;
  return out;
}

NearestPointResult nearest_plane(const LatticeBasis& b, const RatVector& v) {
  return nearest_plane(b.rows(), v);
}

EqualityReport equality_case_analyze(const LatticeBasis& b, const RatVector& v) {
  const std::size_t n = b.dim();
  if (v.size() != n) throw InputError("equality_case_analyze: target has the wrong length");
  EqualityReport r;

  r.pairwise_orthogonal = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dot(b.row(i), b.row(j)) != 0) r.pairwise_orthogonal = false;
    }
  }

  const Integer first = dot(b.row(0), b.row(0));
  r.equal_row_norms = std::all_of(b.rows().begin(), b.rows().end(),
                                  [&](const IntVector& row) { return dot(row, row) == first; });

  r.coefficients = *solve_left(b.rows(), v);
  r.half_integer_coefficients =
      std::all_of(r.coefficients.begin(), r.coefficients.end(), [](const Rational& c) {
        Rational twice = 2 * c;
        return twice.get_den() == 1 && twice.get_num() % 2 != 0;
      });

  r.nearest = nearest_plane(b, v);
  r.equality = r.pairwise_orthogonal && r.equal_row_norms && r.half_integer_coefficients;
  r.consistent = r.equality == r.nearest.at_equality;
  return r;
}

}  // namespace stdlat
