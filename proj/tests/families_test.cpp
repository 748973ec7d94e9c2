#include "stdlat/families.hpp"

#include "gtest/gtest.h"
#include "stdlat/errors.hpp"
#include "stdlat/exactlin.hpp"
#include "test_support.hpp"

namespace stdlat {
namespace {

using testing::ints;
using testing::vec;

TEST(ParityLattice, Rows) {
  EXPECT_EQ(parity_lattice(5).rows(), ints({{2, 0, 0, 0, 0},
                                            {0, 2, 0, 0, 0},
                                            {0, 0, 2, 0, 0},
                                            {0, 0, 0, 2, 0},
                                            {1, 1, 1, 1, 1}}));
  EXPECT_EQ(parity_lattice(1).rows(), ints({{1}}));
  EXPECT_THROW(parity_lattice(0), InputError);
}

TEST(ParityLattice, Determinant) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(abs(determinant(parity_lattice(n))), Integer(1) << static_cast<mp_bitcnt_t>(n - 1));
  }
}

TEST(ParityLattice, SmallMembersShareParity) {
  const LatticeBasis b = parity_lattice(3);
  const auto list = enumerate_short(b, NormKind::Linf, {NormKind::Linf, 3});
  ASSERT_FALSE(list.vectors.empty());
  for (const auto& sv : list.vectors) {
    const bool odd = sv.coords[0] % 2 != 0;
    for (const auto& x : sv.coords) EXPECT_EQ(x % 2 != 0, odd);
  }
}

TEST(ParityLattice, MembershipLaw) {
  testing::Rng rng(81);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    const IntVector v = testing::random_vector(rng, n, -6, 6);
    bool same = true;
    for (const auto& x : v) same = same && ((x - v[0]) % 2 == 0);
    EXPECT_EQ(member(parity_lattice(n), v).is_member, same);
  }
}

TEST(VerifyFamily, Examples) {
  const FamilyReport l2five = verify_family(5, NormKind::L2);
  for (const auto& m : l2five.minima.minima) EXPECT_EQ(m.value, 4);
  EXPECT_EQ(l2five.verdict, Verdict::NonStandard);
  EXPECT_EQ(l2five.parity_argument.odd_min.value, 5);
  EXPECT_TRUE(l2five.parity_argument.odd_vectors_too_long);
  EXPECT_TRUE(l2five.parity_argument.basis_needs_odd_vector);
  EXPECT_TRUE(l2five.consistent);

  const FamilyReport l2four = verify_family(4, NormKind::L2);
  EXPECT_EQ(l2four.verdict, Verdict::Standard);
  EXPECT_FALSE(l2four.parity_argument.odd_vectors_too_long);
  EXPECT_TRUE(l2four.consistent);

  const FamilyReport l1three = verify_family(3, NormKind::L1);
  for (const auto& m : l1three.minima.minima) EXPECT_EQ(m.value, 2);
  EXPECT_EQ(l1three.verdict, Verdict::NonStandard);
  EXPECT_EQ(l1three.parity_argument.odd_min.value, 3);
  EXPECT_TRUE(l1three.consistent);
}

TEST(VerifyFamily, LawUpToEight) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const FamilyReport l2 = verify_family(n, NormKind::L2);
    EXPECT_EQ(l2.verdict, n >= 5 ? Verdict::NonStandard : Verdict::Standard) << "n = " << n;
    EXPECT_TRUE(l2.consistent);
    EXPECT_EQ(l2.verdict, l2.certificate.verdict);
    EXPECT_EQ(l2.parity_argument.even_min, l2.parity_argument.even_min_enumerated);
    EXPECT_EQ(l2.parity_argument.odd_min, l2.parity_argument.odd_min_enumerated);
    EXPECT_EQ(l2.parity_argument.odd_min.value, static_cast<long>(n));

    const FamilyReport l1 = verify_family(n, NormKind::L1);
    EXPECT_EQ(l1.verdict, n >= 3 ? Verdict::NonStandard : Verdict::Standard) << "n = " << n;
    EXPECT_TRUE(l1.consistent);
    EXPECT_EQ(l1.parity_argument.odd_min.value, static_cast<long>(n));
  }
}

TEST(VerifyFamily, LinfIsReportedConsistently) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(verify_family(n, NormKind::Linf).consistent);
}

}  // namespace
}  // namespace stdlat
