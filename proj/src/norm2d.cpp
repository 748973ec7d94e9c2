#include "stdlat/norm2d.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "stdlat/errors.hpp"
#include "stdlat/exactlin.hpp"

namespace stdlat {

namespace {

IntVector translate(const IntVector& b2, const Integer& q, const IntVector& b1) {
  IntVector out(b2.size());
  for (std::size_t i = 0; i < b2.size(); ++i) out[i] = b2[i] + q * b1[i];
  return out;
}

// Smallest q in [lo, hi] with pred(q); pred must be monotone and pred(hi) true.
Integer first_true(Integer lo, Integer hi, const std::function<bool(const Integer&)>& pred) {
  while (lo < hi) {
    Integer mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

Integer min_translate(const IntVector& b2, const IntVector& b1, NormKind kind) {
  if (std::all_of(b1.begin(), b1.end(), [](const Integer& x) { return x == 0; })) {
    throw InputError("min_translate: b1 must be nonzero");
  }
  auto f = [&](const Integer& q) { return measure(translate(b2, q, b1), kind).value; };

  // q -> ||b2 + q*b1|| is convex and unbounded, so once both f(Q) and f(-Q)
  // exceed f(0) every minimiser lies strictly inside (-Q, Q).
  const Rational f0 = f(0);
  Integer bracket = 1;
  while (f(bracket) <= f0 || f(-bracket) <= f0) bracket *= 2;

  // Forward differences of a convex function are nondecreasing; the set of
  // minimisers is [first q with f(q+1) >= f(q), first q with f(q+1) > f(q)].
  const Integer lo = -bracket;
  const Integer hi = bracket - 1;
  const Integer left = first_true(lo, hi, [&](const Integer& q) { return f(q + 1) >= f(q); });
  const Integer right = first_true(lo, hi, [&](const Integer& q) { return f(q + 1) > f(q); });
  if (left <= 0 && right >= 0) return 0;
  return left > 0 ? left : right;
}

Reduced2DBasis reduce_2d(const LatticeBasis& b, NormKind kind, const EnumerationLimits& limits) {
  if (b.dim() != 2) {
    throw InputError("reduce_2d: expected a 2-dimensional lattice, got dimension " +
                     std::to_string(b.dim()));
  }
  Reduced2DBasis r;
  r.kind = kind;
  r.b1 = b.row(0);
  r.b2 = b.row(1);
  r.norm1 = measure(r.b1, kind);
  r.norm2 = measure(r.b2, kind);
  if (r.norm2 < r.norm1) {
    std::swap(r.b1, r.b2);
    std::swap(r.norm1, r.norm2);
  }
  while (true) {
    ++r.iterations;
    r.b2 = translate(r.b2, min_translate(r.b2, r.b1, kind), r.b1);
    r.norm2 = measure(r.b2, kind);
    if (!(r.norm2 < r.norm1)) break;
    std::swap(r.b1, r.b2);
    std::swap(r.norm1, r.norm2);
  }

  if (!is_basis_of(IntMatrix{r.b1, r.b2}, b)) {
    throw ConsistencyError("reduce_2d: reduced pair is not a basis");
  }
  const SuccessiveMinima sm = successive_minima(b, kind, limits);
  if (r.norm1 != sm.minima[0] || r.norm2 != sm.minima[1]) {
    throw ConsistencyError("reduce_2d: reduced pair does not achieve the successive minima (" +
                           format_value(r.norm1) + ", " + format_value(r.norm2) + ") vs (" +
                           format_value(sm.minima[0]) + ", " + format_value(sm.minima[1]) + ")");
  }
  return r;
}

}  // namespace stdlat
