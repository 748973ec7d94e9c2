#include "stdlat/oracle.hpp"

#include <algorithm>
#include <functional>

#include "stdlat/errors.hpp"
#include "stdlat/exactlin.hpp"

namespace stdlat::oracle {

namespace {

struct Range {
  Integer lo;
  Integer hi;
};

Integer box_volume(const std::vector<Range>& box) {
  Integer v = 1;
  for (const auto& r : box) v *= (r.hi - r.lo + 1);
  return v;
}

// Visits every integer point x of the box in lexicographic order together
// with the running sum acc = sum_i x_i * steps[i].
void scan_box(const std::vector<Range>& box, const IntMatrix& steps,
              const std::function<void(const IntVector& x, const IntVector& acc)>& visit) {
  const std::size_t d = box.size();
  IntVector x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = box[i].lo;
  IntVector acc = combine(x, steps);
  while (true) {
    visit(x, acc);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (x[i] < box[i].hi) {
        ++x[i];
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += steps[i][j];
        break;
      }
      const Integer span = box[i].hi - box[i].lo;
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] -= span * steps[i][j];
      x[i] = box[i].lo;
      if (i == 0) return;
    }
  }
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_sign_canonical(const IntVector& v) {
  for (const auto& x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

Integer floor_sqrt(const Rational& q) {
  Integer m = ceil_sqrt(q);
  if (Rational(m * m) > q) --m;
  return m;
}

// Inverse-basis data shared by both scan strategies.
struct Inverse {
  RatMatrix inv;
  RatVector column_sq;  // ||column_i(B^-1)||^2
  IntMatrix adjugate;   // det(B) * B^-1
  Integer det;
};

Inverse invert(const LatticeBasis& b) {
  Inverse out;
  const std::size_t n = b.dim();
  out.inv = inverse(b.rows());
  out.det = determinant(b);
  out.column_sq.assign(n, 0);
  out.adjugate.assign(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.column_sq[j] += out.inv[i][j] * out.inv[i][j];
      Rational a = out.inv[i][j] * Rational(out.det);
      out.adjugate[i][j] = a.get_num();
    }
  }
  return out;
}

void check_dim(const LatticeBasis& b, const OracleLimits& limits) {
  if (b.dim() > limits.max_dim) {
    throw InputError("oracle: dimension " + std::to_string(b.dim()) + " exceeds the oracle cap of " +
                     std::to_string(limits.max_dim));
  }
}

// Scans whichever region is smaller: the coefficient box (points x·B) or the
// ambient integer box (points v, kept when v·adj(B) is divisible by det(B)).
// `visit` receives coefficients and the ambient vector.
void scan_lattice(const LatticeBasis& b, const Inverse& inv, const std::vector<Range>& coeff_box,
                  const std::vector<Range>& ambient_box, const OracleLimits& limits,
                  const std::function<void(const IntVector& coeffs, const IntVector& v)>& visit) {
  const Integer coeff_volume = box_volume(coeff_box);
  const Integer ambient_volume = box_volume(ambient_box);
  const Integer& smallest = std::min(coeff_volume, ambient_volume);
  if (smallest > Integer(static_cast<unsigned long>(limits.max_box_points))) {
    throw ResourceError("oracle: search box of " + smallest.get_str() +
                        " points exceeds the ceiling of " +
                        std::to_string(limits.max_box_points));
  }
  if (coeff_volume <= ambient_volume) {
    scan_box(coeff_box, b.rows(), visit);
    return;
  }
  IntVector coeffs(b.dim());
  scan_box(ambient_box, inv.adjugate, [&](const IntVector& v, const IntVector& scaled) {
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      if (!mpz_divisible_p(scaled[i].get_mpz_t(), inv.det.get_mpz_t())) return;
    }
    for (std::size_t i = 0; i < scaled.size(); ++i) coeffs[i] = scaled[i] / inv.det;
    visit(coeffs, v);
  });
}

}  // namespace

CoefficientBox coefficient_box(const LatticeBasis& b, NormKind kind, const NormValue& bound) {
  if (bound.kind != kind || bound.value <= 0) {
    throw InputError("coefficient_box: bound must be a positive value of the same norm kind");
  }
  const Inverse inv = invert(b);
  const Rational radius_sq = enumeration_radius_in_l2(bound, b.dim()).value;
  CoefficientBox box;
  box.m = 0;
  for (const auto& c : inv.column_sq) {
    box.bounds.push_back(ceil_sqrt(radius_sq * c));
    box.m = std::max(box.m, box.bounds.back());
  }
  box.derivation = "|x_i| = |v . column_i(B^-1)| <= R * ||column_i(B^-1)||, R^2 = " +
                   radius_sq.get_str() + "; M = " + box.m.get_str();
  return box;
}

ShortVectorList brute_short_vectors(const LatticeBasis& b, NormKind kind, const NormValue& bound,
                                    const OracleLimits& limits) {
  check_dim(b, limits);
  const CoefficientBox box = coefficient_box(b, kind, bound);
  const Inverse inv = invert(b);
  std::vector<Range> coeff_box;
  for (const auto& m : box.bounds) coeff_box.push_back({-m, m});

  const Integer reach = kind == NormKind::L2 ? floor_sqrt(bound.value) : floor_of(bound.value);
  const std::vector<Range> ambient_box(b.dim(), Range{-reach, reach});

  ShortVectorList out{bound, {}};
  scan_lattice(b, inv, coeff_box, ambient_box, limits,
               [&](const IntVector&, const IntVector& v) {
                 if (is_zero(v) || !is_sign_canonical(v)) return;
                 NormValue norm = measure(v, kind);
                 if (norm <= bound) out.vectors.push_back({v, std::move(norm)});
               });
  std::sort(out.vectors.begin(), out.vectors.end(), [](const ShortVector& x, const ShortVector& y) {
    const int c = cmp(x.norm.value, y.norm.value);
    return c != 0 ? c < 0 : x.coords < y.coords;
  });
  return out;
}

SuccessiveMinima brute_minima(const LatticeBasis& b, NormKind kind, const OracleLimits& limits) {
  check_dim(b, limits);
  const std::size_t n = b.dim();
  NormValue bound = measure(b.row(0), kind);
  for (const auto& row : b.rows()) bound = std::min(bound, measure(row, kind));
  while (true) {
    const ShortVectorList list = brute_short_vectors(b, kind, bound, limits);
    SuccessiveMinima sm;
    sm.kind = kind;
    IntMatrix chosen;
    for (const auto& sv : list.vectors) {
      chosen.push_back(sv.coords);
      if (rank(chosen) < chosen.size()) {
        chosen.pop_back();
        continue;
      }
      sm.minima.push_back(sv.norm);
      sm.witnesses.push_back(sv.coords);
      if (chosen.size() == n) return sm;
    }
    bound = scale_norm(bound, 2);
  }
}

ClosestPoint brute_cvp(const LatticeBasis& b, const RatVector& v, const std::optional<IntVector>& seed,
                       const OracleLimits& limits) {
  check_dim(b, limits);
  const std::size_t n = b.dim();
  if (v.size() != n) throw InputError("brute_cvp: target has the wrong length");
  const Inverse inv = invert(b);

  RatVector center(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) center[j] += v[i] * inv.inv[i][j];
  }
  auto dist_sq = [&](const IntVector& u) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Rational d = Rational(u[j]) - v[j];
      s += d * d;
    }
    return s;
  };

  // Upper bound from coordinate-wise rounding, improved by the seed if any.
  IntVector rounded(n);
  for (std::size_t i = 0; i < n; ++i) rounded[i] = round_half_even(center[i]);
  Rational upper = dist_sq(combine(rounded, b.rows()));
  if (seed) {
    if (seed->size() != n || !member(b, *seed)) {
      throw InputError("brute_cvp: seed is not a lattice point");
    }
    upper = std::min(upper, dist_sq(*seed));
  }

  std::vector<Range> coeff_box;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer s = ceil_sqrt(upper * inv.column_sq[i]);
    coeff_box.push_back({floor_of(center[i]) - s, ceil_of(center[i]) + s});
  }
  const Integer s = ceil_sqrt(upper);
  std::vector<Range> ambient_box;
  for (std::size_t j = 0; j < n; ++j) ambient_box.push_back({floor_of(v[j]) - s, ceil_of(v[j]) + s});

  std::optional<ClosestPoint> best;
  scan_lattice(b, inv, coeff_box, ambient_box, limits,
               [&](const IntVector& coeffs, const IntVector& u) {
                 Rational d = dist_sq(u);
                 if (d > upper) return;
                 if (!best || d < best->dist_sq || (d == best->dist_sq && coeffs < best->coeffs)) {
                   best = ClosestPoint{u, coeffs, std::move(d)};
                 }
               });
  if (!best) throw ConsistencyError("brute_cvp: search region contained no lattice point");
  return *best;
}

}  // namespace stdlat::oracle
