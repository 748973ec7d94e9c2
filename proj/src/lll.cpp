#include "lll.hpp"

#include <utility>

#include "stdlat/exactlin.hpp"

namespace stdlat::detail {

IntMatrix lll_reduce(IntMatrix rows) {
  const std::size_t k = rows.size();
  if (k < 2) return rows;
  static const Rational delta(3, 4);
  GsoData g = gso(rows);
  std::size_t i = 1;
  while (i < k) {
    for (std::size_t jj = i; jj-- > 0;) {
      Integer q = round_half_even(g.mu[i][jj]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < rows[i].size(); ++c) rows[i][c] -= q * rows[jj][c];
      for (std::size_t l = 0; l <= jj; ++l) g.mu[i][l] -= Rational(q) * g.mu[jj][l];
    }
    const Rational& m = g.mu[i][i - 1];
    if (g.bstar_sq[i] >= (delta - m * m) * g.bstar_sq[i - 1]) {
      ++i;
    } else {
      std::swap(rows[i], rows[i - 1]);
      g = gso(rows);
      if (i > 1) --i;
    }
  }
  return rows;
}

}  // namespace stdlat::detail
