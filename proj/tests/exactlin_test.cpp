#include "stdlat/exactlin.hpp"

#include <set>

#include "gtest/gtest.h"
#include "stdlat/errors.hpp"
#include "stdlat/families.hpp"
#include "test_support.hpp"

namespace stdlat {
namespace {

using testing::ints;
using testing::vec;

bool is_hermite(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  bool first = true;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < h.size(); ++r) {
    std::size_t p = 0;
    while (p < h[r].size() && h[r][p] == 0) ++p;
    if (p == h[r].size()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (!first && p <= last_pivot) return false;
    if (h[r][p] <= 0) return false;
    for (std::size_t above = 0; above < r; ++above) {
      if (h[above][p] < 0 || h[above][p] >= h[r][p]) return false;
    }
    last_pivot = p;
    first = false;
  }
  return true;
}

// Lattice points x·M with |x_i| <= 3, as a set.
std::set<IntVector> small_points(const IntMatrix& m) {
  std::set<IntVector> out;
  const std::size_t k = m.size();
  IntVector x(k, -3);
  while (true) {
    out.insert(combine(x, m));
    std::size_t i = 0;
    while (i < k && x[i] == 3) x[i++] = -3;
    if (i == k) break;
    ++x[i];
  }
  return out;
}

TEST(Determinant, Identity) { EXPECT_EQ(determinant(identity_matrix(3)), 1); }

TEST(Determinant, TriangularTwoByTwo) { EXPECT_EQ(determinant(ints({{2, 0}, {1, 2}})), 4); }

TEST(Determinant, ParityFiveMatchesCofactorExpansion) {
  const LatticeBasis b = parity_lattice(5);
  const Integer expected = testing::laplace_det(b.rows());
  EXPECT_EQ(abs(expected), 16);
  EXPECT_EQ(determinant(b), expected);
}

TEST(Determinant, AgreesWithLaplaceOnRandomMatrices) {
  testing::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    IntMatrix m;
    for (std::size_t i = 0; i < n; ++i) m.push_back(testing::random_vector(rng, n, -6, 6));
    EXPECT_EQ(determinant(m), testing::laplace_det(m));
  }
}

TEST(Determinant, UnimodularInvariance) {
  testing::Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const LatticeBasis b = testing::random_basis(rng, n, -5, 5);
    const IntMatrix u = testing::random_unimodular(rng, n);
    EXPECT_EQ(abs(determinant(multiply(u, b.rows()))), b.covolume());
  }
}

TEST(LatticeBasis, RejectsSingularAndNonSquare) {
  EXPECT_THROW(LatticeBasis(ints({{1, 2}, {2, 4}})), InputError);
  EXPECT_THROW(LatticeBasis(ints({{1, 2, 3}, {0, 1, 0}})), InputError);
  EXPECT_THROW(LatticeBasis(IntMatrix{}), InputError);
}

TEST(HermiteForm, IdentityIsFixed) {
  const HermiteForm hf = hermite_form(identity_matrix(3));
  EXPECT_EQ(hf.h, identity_matrix(3));
  EXPECT_EQ(hf.u, identity_matrix(3));
}

TEST(HermiteForm, TwoByTwoRoundTrip) {
  const IntMatrix m = ints({{2, 0}, {3, 1}});
  const HermiteForm hf = hermite_form(m);
  EXPECT_EQ(multiply(hf.u, m), hf.h);
  EXPECT_EQ(abs(determinant(hf.u)), 1);
  EXPECT_TRUE(is_hermite(hf.h));
  // (3,1) - (2,0) = (1,1) and 2*(1,1) - (2,0) = (0,2).
  EXPECT_EQ(hf.h, ints({{1, 1}, {0, 2}}));
}

TEST(HermiteForm, OvercompleteParityGenerators) {
  const IntMatrix m = ints({{2, 0}, {0, 2}, {1, 1}});
  const HermiteForm hf = hermite_form(m);
  EXPECT_EQ(hf.rank, 2u);
  EXPECT_EQ(multiply(hf.u, m), hf.h);
  EXPECT_EQ(abs(determinant(hf.u)), 1);
  EXPECT_EQ(hf.h, ints({{1, 1}, {0, 2}, {0, 0}}));
  // Both spans agree on a window of small points.
  const IntMatrix nonzero(hf.h.begin(), hf.h.begin() + 2);
  const auto from_m = small_points(m);
  for (const auto& p : small_points(nonzero)) {
    if (abs(p[0]) <= 3 && abs(p[1]) <= 3) EXPECT_TRUE(from_m.count(p)) << p[0] << "," << p[1];
  }
  for (const auto& p : from_m) {
    if (abs(p[0]) <= 3 && abs(p[1]) <= 3) EXPECT_TRUE(member(nonzero, p));
  }
}

TEST(HermiteForm, PropertiesOnRandomMatrices) {
  testing::Rng rng(13);
  for (int t = 0; t < 150; ++t) {
    const std::size_t rows = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const std::size_t cols = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    IntMatrix m;
    for (std::size_t i = 0; i < rows; ++i) m.push_back(testing::random_vector(rng, cols, -7, 7));
    const HermiteForm hf = hermite_form(m);
    EXPECT_EQ(multiply(hf.u, m), hf.h);
    EXPECT_EQ(abs(determinant(hf.u)), 1);
    EXPECT_TRUE(is_hermite(hf.h));
    EXPECT_EQ(hf.rank, rank(m));
    EXPECT_EQ(hermite_form(hf.h).h, hf.h) << "not idempotent";
  }
}

TEST(SameLattice, Examples) {
  const LatticeBasis id(identity_matrix(2));
  EXPECT_TRUE(same_lattice(id, LatticeBasis(ints({{1, 0}, {1, 1}}))));
  EXPECT_FALSE(same_lattice(id, LatticeBasis(ints({{2, 0}, {0, 2}}))));
  EXPECT_THROW(same_lattice(id, LatticeBasis(identity_matrix(3))), InputError);
}

TEST(SameLattice, ParityRowSwappedForShiftedOddVector) {
  const LatticeBasis b = parity_lattice(5);
  IntMatrix rows = b.rows();
  rows[4] = vec({3, 1, 1, 1, 1});
  const LatticeBasis c(rows);
  EXPECT_TRUE(same_lattice(b, c));
  // Independent check: each basis lies in the other and covolumes agree.
  for (const auto& r : c.rows()) EXPECT_TRUE(member(b, r));
  for (const auto& r : b.rows()) EXPECT_TRUE(member(c, r));
  EXPECT_EQ(b.covolume(), c.covolume());
}

TEST(SameLattice, EquivalenceUnderRandomUnimodular) {
  testing::Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const LatticeBasis b = testing::random_basis(rng, n, -5, 5);
    const LatticeBasis c(multiply(testing::random_unimodular(rng, n), b.rows()));
    const LatticeBasis d(multiply(testing::random_unimodular(rng, n), c.rows()));
    EXPECT_TRUE(same_lattice(b, b));
    EXPECT_TRUE(same_lattice(b, c));
    EXPECT_TRUE(same_lattice(c, b));
    EXPECT_TRUE(same_lattice(b, d));
    IntMatrix doubled = b.rows();
    for (auto& x : doubled[0]) x *= 2;
    EXPECT_FALSE(same_lattice(b, LatticeBasis(doubled)));
  }
}

TEST(Member, Examples) {
  const LatticeBasis id(identity_matrix(3));
  Membership m = member(id, vec({1, 2, 3}));
  ASSERT_TRUE(m);
  EXPECT_EQ(m.coeffs, vec({1, 2, 3}));
  EXPECT_FALSE(member(LatticeBasis(ints({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})), vec({1, 0, 0})));
  EXPECT_TRUE(member(parity_lattice(5), vec({1, 1, 1, 1, 1})));
}

TEST(Member, CoefficientsReconstructVector) {
  testing::Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const LatticeBasis b = testing::random_basis(rng, n, -5, 5);
    const IntVector x = testing::random_vector(rng, n, -4, 4);
    const IntVector v = combine(x, b.rows());
    Membership m = member(b, v);
    ASSERT_TRUE(m);
    EXPECT_EQ(m.coeffs, x);
    EXPECT_EQ(combine(m.coeffs, b.rows()), v);
  }
}

TEST(IsBasisOf, Examples) {
  const LatticeBasis p5 = parity_lattice(5);
  EXPECT_TRUE(is_basis_of(p5.rows(), p5));
  IntMatrix doubled_axes;
  for (std::size_t i = 0; i < 5; ++i) {
    IntVector e(5, 0);
    e[i] = 2;
    doubled_axes.push_back(e);
  }
  EXPECT_FALSE(is_basis_of(doubled_axes, p5));

  // Three axes of length 2 and the half-sum of all four generate the
  // four-dimensional parity lattice.
  const LatticeBasis p4 = parity_lattice(4);
  EXPECT_TRUE(is_basis_of(ints({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {1, 1, 1, 1}}), p4));
  EXPECT_TRUE(is_basis_of(ints({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {1, 1, 1, -1}}), p4));
  EXPECT_FALSE(is_basis_of(ints({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}), p4));
}

TEST(Gso, Examples) {
  const GsoData id = gso(LatticeBasis(identity_matrix(3)));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(id.bstar_sq[i], 1);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(id.mu[i][j], i == j ? 1 : 0);
  }
  const GsoData g = gso(LatticeBasis(ints({{2, 0}, {1, 2}})));
  EXPECT_EQ(g.mu[1][0], Rational(1, 2));
  EXPECT_EQ(g.bstar_sq[0], 4);
  EXPECT_EQ(g.bstar_sq[1], 4);
}

TEST(Gso, OrthogonalityReconstructionAndGramIdentity) {
  testing::Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const LatticeBasis b = testing::random_basis(rng, n, -6, 6);
    const GsoData g = gso(b);
    Rational product = 1;
    for (const auto& s : g.bstar_sq) product *= s;
    EXPECT_EQ(product, Rational(b.covolume() * b.covolume()));
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(g.mu[i][i], 1);
      for (std::size_t j = i + 1; j < n; ++j) EXPECT_EQ(dot(g.bstar[i], g.bstar[j]), 0);
      RatVector rebuilt(n, 0);
      for (std::size_t j = 0; j <= i; ++j) {
        for (std::size_t c = 0; c < n; ++c) rebuilt[c] += g.mu[i][j] * g.bstar[j][c];
      }
      EXPECT_EQ(rebuilt, to_rational(b.row(i)));
    }
  }
}

TEST(IntegerKernels, LeftKernelIsSaturated) {
  // x·(2, 4, 6)^T = 0 has the integer solutions spanned by (-2,1,0),(-3,0,1).
  const IntMatrix col = ints({{2}, {4}, {6}});
  const IntMatrix k = integer_left_kernel(col);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& row : k) EXPECT_EQ(2 * row[0] + 4 * row[1] + 6 * row[2], 0);
  EXPECT_EQ(maximal_minor_gcd(k), 1);
}

TEST(MaximalMinorGcd, Examples) {
  EXPECT_EQ(maximal_minor_gcd(ints({{2, 0, 0}, {0, 2, 0}})), 4);
  EXPECT_EQ(maximal_minor_gcd(ints({{1, 1, 1}})), 1);
  EXPECT_EQ(maximal_minor_gcd(ints({{2, 4, 6}})), 2);
  EXPECT_EQ(maximal_minor_gcd(ints({{1, 2}, {2, 4}})), 0);
}

TEST(Rounding, HalvesGoToEven) {
  EXPECT_EQ(round_half_even(Rational(1, 2)), 0);
  EXPECT_EQ(round_half_even(Rational(3, 2)), 2);
  EXPECT_EQ(round_half_even(Rational(-1, 2)), 0);
  EXPECT_EQ(round_half_even(Rational(-3, 2)), -2);
  EXPECT_EQ(round_half_even(Rational(5, 3)), 2);
  EXPECT_EQ(round_half_even(Rational(-5, 3)), -2);
}

TEST(CeilSqrt, Exact) {
  EXPECT_EQ(ceil_sqrt(Rational(0)), 0);
  EXPECT_EQ(ceil_sqrt(Rational(4)), 2);
  EXPECT_EQ(ceil_sqrt(Rational(5)), 3);
  EXPECT_EQ(ceil_sqrt(Rational(1, 4)), 1);
  for (long a = 1; a < 300; ++a) {
    for (long d = 1; d < 7; ++d) {
      Rational q(a, d);
      q.canonicalize();
      const Integer m = ceil_sqrt(q);
      EXPECT_GE(Rational(m * m), q);
      EXPECT_LT(Rational((m - 1) * (m - 1)), q);
    }
  }
}

}  // namespace
}  // namespace stdlat
