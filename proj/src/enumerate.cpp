#include "stdlat/enumerate.hpp"

#include <algorithm>
#include <string>

#include "lll.hpp"
#include "stdlat/errors.hpp"
#include "stdlat/exactlin.hpp"

namespace stdlat {

namespace {

// Depth-first Fincke-Pohst enumeration over the GSO of `rows`, pruned by the
// squared L2 radius and then filtered by the target norm.
class Enumerator {
 public:
  Enumerator(const IntMatrix& rows, NormKind kind, const NormValue& bound,
             const EnumerationLimits& limits)
      : rows_(rows),
        gso_(gso(rows)),
        kind_(kind),
        bound_(bound),
        radius_sq_(enumeration_radius_in_l2(bound, rows[0].size()).value),
        limits_(limits),
        coeffs_(rows.size(), 0) {}

  std::vector<ShortVector> run() {
    descend(rows_.size() - 1, Rational(0), true);
    return std::move(found_);
  }

 private:
  void descend(std::size_t level, const Rational& partial, bool upper_zero) {
    Rational center = 0;
    for (std::size_t j = level + 1; j < rows_.size(); ++j) {
      if (coeffs_[j] != 0) center -= Rational(coeffs_[j]) * gso_.mu[j][level];
    }
    const Rational slack = (radius_sq_ - partial) / gso_.bstar_sq[level];
    const Integer spread = ceil_sqrt(slack);
    Integer lo = floor_of(center) - spread;
    const Integer hi = ceil_of(center) + spread;
    // Only one of +-x is visited: the topmost nonzero coefficient is positive.
    if (upper_zero && lo < 0) lo = 0;
    for (Integer x = lo; x <= hi; ++x) {
      const Rational d = Rational(x) - center;
      const Rational d_sq = d * d;
      if (d_sq > slack) continue;
      coeffs_[level] = x;
      const bool still_zero = upper_zero && x == 0;
      if (level == 0) {
        if (!still_zero) visit();
      } else {
        descend(level - 1, partial + d_sq * gso_.bstar_sq[level], still_zero);
      }
    }
    coeffs_[level] = 0;
  }

  void visit() {
    if (++candidates_ > limits_.max_candidates) {
      throw ResourceError("enumeration exceeded the candidate ceiling of " +
                          std::to_string(limits_.max_candidates) + " vectors");
    }
    IntVector v = sign_canonical(combine(coeffs_, rows_));
    NormValue norm = measure(v, kind_);
    if (norm <= bound_) found_.push_back({std::move(v), std::move(norm)});
  }

  const IntMatrix& rows_;
  GsoData gso_;
  NormKind kind_;
  NormValue bound_;
  Rational radius_sq_;
  EnumerationLimits limits_;
  IntVector coeffs_;
  std::vector<ShortVector> found_;
  std::uint64_t candidates_ = 0;
};

bool shorter(const ShortVector& a, const ShortVector& b) {
  const int c = cmp(a.norm.value, b.norm.value);
  if (c != 0) return c < 0;
  return a.coords < b.coords;
}

}  // namespace

IntVector sign_canonical(IntVector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (it != v.end() && *it < 0) {
    for (auto& x : v) x = -x;
  }
  return v;
}

ShortVectorList enumerate_short(const IntMatrix& generators, NormKind kind,
                                const NormValue& bound,
                                const EnumerationLimits& limits) {
  if (bound.kind != kind) {
    throw InputError("enumerate_short: bound kind does not match the norm");
  }
  if (bound.value <= 0) {
    throw InputError("enumerate_short: bound must be positive");
  }
  if (generators.empty()) return {bound, {}};
  IntMatrix reduced = detail::lll_reduce(generators);
  ShortVectorList out{bound, Enumerator(reduced, kind, bound, limits).run()};
  std::sort(out.vectors.begin(), out.vectors.end(), shorter);
  return out;
}

ShortVectorList enumerate_short(const LatticeBasis& b, NormKind kind,
                                const NormValue& bound,
                                const EnumerationLimits& limits) {
  return enumerate_short(b.rows(), kind, bound, limits);
}

SuccessiveMinima successive_minima(const IntMatrix& generators, NormKind kind,
                                   const EnumerationLimits& limits) {
  SuccessiveMinima sm;
  sm.kind = kind;
  const std::size_t k = generators.size();
  if (k == 0) return sm;
  // The reduced rows are independent lattice vectors, so the first radius
  // already reaches rank k; the doubling is kept as a guard.
  IntMatrix reduced = detail::lll_reduce(generators);
  NormValue bound = measure(reduced[0], kind);
  for (const auto& r : reduced) bound = std::max(bound, measure(r, kind));
  while (true) {
    ShortVectorList list = enumerate_short(reduced, kind, bound, limits);
    RowEchelon echelon(generators[0].size());
    sm.minima.clear();
    sm.witnesses.clear();
    for (const auto& sv : list.vectors) {
      if (echelon.add(sv.coords)) {
        sm.minima.push_back(sv.norm);
        sm.witnesses.push_back(sv.coords);
        if (echelon.rank() == k) return sm;
      }
    }
    bound = scale_norm(bound, 2);
  }
}

SuccessiveMinima successive_minima(const LatticeBasis& b, NormKind kind,
                                   const EnumerationLimits& limits) {
  return successive_minima(b.rows(), kind, limits);
}

WitnessCheck minima_witness_check(const LatticeBasis& b, const SuccessiveMinima& sm,
                                  const EnumerationLimits& limits) {
  const std::size_t n = b.dim();
  auto fail = [](std::string why) { return WitnessCheck{false, std::move(why)}; };
  if (sm.minima.size() != n || sm.witnesses.size() != n) {
    return fail("expected " + std::to_string(n) + " minima and witnesses");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sm.minima[i].kind != sm.kind) return fail("minimum has the wrong norm kind");
    if (i > 0 && sm.minima[i] < sm.minima[i - 1]) {
      return fail("minima are not nondecreasing at index " + std::to_string(i + 1));
    }
    if (sm.witnesses[i].size() != n) return fail("witness has the wrong length");
    if (!member(b, sm.witnesses[i])) {
      return fail("witness " + std::to_string(i + 1) + " is not a lattice vector");
    }
    if (measure(sm.witnesses[i], sm.kind) != sm.minima[i]) {
      return fail("witness " + std::to_string(i + 1) + " does not have norm lambda_" +
                  std::to_string(i + 1));
    }
  }
  if (determinant(sm.witnesses) == 0) return fail("witnesses are linearly dependent");

  // No i independent lattice vectors may all be strictly shorter than lambda_i.
  ShortVectorList list = enumerate_short(b, sm.kind, sm.minima.back(), limits);
  RowEchelon echelon(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (next < list.vectors.size() && list.vectors[next].norm < sm.minima[i]) {
      echelon.add(list.vectors[next].coords);
      ++next;
    }
    if (echelon.rank() > i) {
      return fail("lambda_" + std::to_string(i + 1) +
                  " is too large: shorter independent vectors exist");
    }
  }
  return {true, {}};
}

}  // namespace stdlat
