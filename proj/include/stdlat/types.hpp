#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace stdlat {

using Integer = mpz_class;
using Rational = mpq_class;

// Ambient coordinates of a lattice point (not basis coefficients).
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Row-major; row i is the i-th vector.
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

// Default cap on the ambient dimension accepted from user input.
inline constexpr std::size_t kDefaultMaxDim = 12;

// Square, nonsingular integer matrix whose rows generate a full-rank lattice.
class LatticeBasis {
 public:
  // Throws InputError when `rows` is empty, not square or singular.
  explicit LatticeBasis(IntMatrix rows);

  std::size_t dim() const { return rows_.size(); }
  const IntVector& row(std::size_t i) const { return rows_[i]; }
  const IntMatrix& rows() const { return rows_; }

  // Absolute determinant, the covolume of the lattice.
  const Integer& covolume() const { return covolume_; }

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  IntMatrix rows_;
  Integer covolume_;
};

RatVector to_rational(const IntVector& v);
IntMatrix identity_matrix(std::size_t n);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& k, const IntVector& v);
// x · G for a coefficient vector x and generator rows G.
IntVector combine(const IntVector& coeffs, const IntMatrix& rows);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace stdlat
