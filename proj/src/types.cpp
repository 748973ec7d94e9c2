#include "stdlat/types.hpp"

#include <string>

#include "stdlat/errors.hpp"
#include "stdlat/exactlin.hpp"

namespace stdlat {

LatticeBasis::LatticeBasis(IntMatrix rows) : rows_(std::move(rows)) {
  if (rows_.empty()) {
    throw InputError("lattice basis must have at least one row");
  }
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) {
      throw InputError("lattice basis must be square: expected rows of length " +
                       std::to_string(rows_.size()) + ", got " +
                       std::to_string(r.size()));
    }
  }
  covolume_ = abs(determinant(rows_));
  if (covolume_ == 0) {
    throw InputError("lattice basis is singular (determinant 0)");
  }
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector scale(const Integer& k, const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
  return out;
}

IntVector combine(const IntVector& coeffs, const IntMatrix& rows) {
  IntVector out(rows.empty() ? 0 : rows[0].size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs[i] * rows[i][j];
  }
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(combine(row, b));
  return out;
}

}  // namespace stdlat
