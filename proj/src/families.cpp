#include "stdlat/families.hpp"

#include <algorithm>

#include "stdlat/errors.hpp"
#include "stdlat/exactlin.hpp"

namespace stdlat {

LatticeBasis parity_lattice(std::size_t n) {
  if (n < 1) throw InputError("parity_lattice: n must be at least 1");
  IntMatrix rows(n, IntVector(n, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) rows[i][i] = 2;
  std::fill(rows[n - 1].begin(), rows[n - 1].end(), Integer(1));
  return LatticeBasis(std::move(rows));
}

FamilyReport verify_family(std::size_t n, NormKind kind, const EnumerationLimits& limits) {
  FamilyReport report;
  report.n = n;
  report.kind = kind;
  const LatticeBasis basis = parity_lattice(n);
  report.certificate = check_standard(basis, kind, limits);
  report.minima = report.certificate.minima;
  report.verdict = report.certificate.verdict;

  ParityArgument& arg = report.parity_argument;
  IntVector even(n, 0);
  even[0] = 2;
  arg.even_min = measure(even, kind);
  arg.odd_min = measure(IntVector(n, 1), kind);

  const NormValue reach = std::max(arg.even_min, arg.odd_min);
  const ShortVectorList list = enumerate_short(basis, kind, reach, limits);
  std::optional<NormValue> even_seen;
  std::optional<NormValue> odd_seen;
  for (const auto& sv : list.vectors) {
    auto& slot = (sv.coords[0] % 2 == 0) ? even_seen : odd_seen;
    if (!slot || sv.norm < *slot) slot = sv.norm;
  }
  if (!even_seen || !odd_seen) {
    throw ConsistencyError("verify_family: a coset has no vector within its direct minimum");
  }
  arg.even_min_enumerated = *even_seen;
  arg.odd_min_enumerated = *odd_seen;

  arg.covolume = basis.covolume();
  mpz_ui_pow_ui(arg.even_tuple_divisor.get_mpz_t(), 2, n);
  arg.basis_needs_odd_vector = arg.covolume % arg.even_tuple_divisor != 0;
  arg.odd_vectors_too_long = arg.odd_min > report.minima.minima.back();

  report.consistent = arg.even_min == arg.even_min_enumerated &&
                      arg.odd_min == arg.odd_min_enumerated &&
                      arg.basis_needs_odd_vector &&
                      ((report.verdict == Verdict::NonStandard) == arg.odd_vectors_too_long);
  return report;
}

}  // namespace stdlat
