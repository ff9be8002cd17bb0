#include "thetaq/root_system.hpp"

#include <random>

#include <gtest/gtest.h>

#include "thetaq/parabolic.hpp"

namespace thetaq {
namespace {

TEST(RootSystem, CompactPositiveRootsSmall) {
  EXPECT_TRUE(compact_positive_roots(Signature(1, 1)).empty());

  const auto r22 = compact_positive_roots(Signature(2, 2));
  ASSERT_EQ(r22.size(), 2u);
  EXPECT_EQ(r22[0], (Root{1, 2, 1}));
  EXPECT_EQ(r22[1], (Root{3, 4, 1}));

  EXPECT_EQ(compact_positive_roots(Signature(2, 3)).size(), 4u);
}

TEST(RootSystem, NoncompactHalves) {
  EXPECT_EQ(noncompact_weights(Signature(2, 3), Half::plus).size(), 6u);
  const auto plus11 = noncompact_weights(Signature(1, 1), Half::plus);
  ASSERT_EQ(plus11.size(), 1u);
  EXPECT_EQ(plus11[0], (Root{1, 2, 1}));
}

TEST(RootSystem, CountsExhaustive) {
  for (int p = 1; p <= 8; ++p)
    for (int q = 1; q <= 8; ++q) {
      const Signature sig(p, q);
      const auto compact = compact_positive_roots(sig);
      const auto plus = noncompact_weights(sig, Half::plus);
      const auto minus = noncompact_weights(sig, Half::minus);
      EXPECT_EQ(compact.size(), static_cast<std::size_t>(p * (p - 1) / 2 + q * (q - 1) / 2));
      EXPECT_EQ(plus.size() + minus.size(), static_cast<std::size_t>(2 * p * q));
      EXPECT_EQ(static_cast<int>(plus.size()), sig.complex_dimension());
      for (const auto& r : compact) EXPECT_TRUE(is_compact(r, sig));
      for (std::size_t i = 0; i < plus.size(); ++i) {
        EXPECT_FALSE(is_compact(plus[i], sig));
        EXPECT_EQ(minus[i], plus[i].negated());
      }
    }
}

TEST(RootSystem, Pairing) {
  const Lambda lam(Signature(2, 3), {1, -1, 0, 0, 0});
  EXPECT_EQ(pairing(lam, Root{1, 3, 1}), 1);
  EXPECT_EQ(pairing(lam, Root{2, 4, -1}), 1);
  const Lambda zero(Signature(2, 3), {0, 0, 0, 0, 0});
  for (const auto& r : noncompact_weights(Signature(2, 3), Half::minus)) EXPECT_EQ(pairing(zero, r), 0);
  EXPECT_THROW(pairing(lam, Root{1, 6, 1}), IndexError);
  EXPECT_THROW(pairing(lam, Root{0, 2, 1}), IndexError);
}

TEST(RootSystem, PairingAntisymmetryRandom) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const Signature sig(1 + trial % 5, 1 + trial % 7);
    std::vector<std::int64_t> a(static_cast<std::size_t>(sig.rank()));
    for (auto& v : a) v = coord(rng);
    for (const auto& r : noncompact_weights(sig, Half::plus)) EXPECT_EQ(pairing(a, r.negated()), -pairing(a, r));
    for (const auto& r : compact_positive_roots(sig)) EXPECT_EQ(pairing(a, r.negated()), -pairing(a, r));
  }
}

TEST(RootSystem, SignatureRejectsEmptyBlocks) {
  EXPECT_THROW(Signature(0, 3), Error);
  EXPECT_THROW(Signature(2, 0), Error);
}

}  // namespace
}  // namespace thetaq
