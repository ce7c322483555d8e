#include <gtest/gtest.h>

#include <algorithm>

#include "pdisk/skein.hpp"

using namespace pdisk;

namespace {

const PuncturedDisk d7(7);
TaggedArc P(int a, int b, const PuncturedDisk& d = d7) { return TaggedArc::peripheral(d, a, b); }
TaggedArc R(int a, Tag t, const PuncturedDisk& d = d7) { return TaggedArc::radial(d, a, t); }

std::vector<Multicurve> sorted(std::vector<Multicurve> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Normalize, Identities) {
  FormalSum noose = normalize({Curve::noose(0), Curve::of(P(1, 3))}, 1);
  ASSERT_EQ(noose.terms.size(), 1u);
  EXPECT_EQ(noose.terms[0].coeff, 1);
  EXPECT_EQ(noose.terms[0].curves, make_multicurve({R(0, Tag::notched), R(0, Tag::plain), P(1, 3)}));

  FormalSum loop = normalize({Curve::puncture_loop(), Curve::of(P(1, 3))}, 1);
  ASSERT_EQ(loop.terms.size(), 1u);
  EXPECT_EQ(loop.terms[0].coeff, 2);
  EXPECT_EQ(loop.terms[0].curves, Multicurve{P(1, 3)});

  FormalSum unit = normalize({Curve::boundary_segment()}, 3);
  ASSERT_EQ(unit.terms.size(), 1u);
  EXPECT_EQ(unit.terms[0].coeff, 3);
  EXPECT_TRUE(unit.terms[0].curves.empty());
}

TEST(SelfSmoothing, KinkAroundPuncture) {
  // Lifted segment 0 -> 9 on n=7 wraps once past its start.
  FormalSum s = smooth_self(d7, {0, 9});
  FormalSum want;
  want.add(2, {P(0, 2)});
  want.add(1, {P(2, 0)});
  EXPECT_EQ(s, want);
  auto sides = smooth_self_sides(d7, {0, 9});
  EXPECT_TRUE(std::find(sides.left.begin(), sides.left.end(), Curve::puncture_loop()) != sides.left.end());
}

TEST(SelfSmoothing, ReversalSwapsSides) {
  for (int n = 4; n <= 7; ++n) {
    PuncturedDisk d(n);
    for (long from = 0; from < n; ++from)
      for (long len = n + 2; len < 2 * n - 1; ++len) {
        auto fwd = smooth_self_sides(d, {from, from + len});
        auto rev = smooth_self_sides(d, {from + len, from});
        auto s = [](std::vector<Curve> v) {
          std::sort(v.begin(), v.end());
          return v;
        };
        EXPECT_EQ(s(fwd.left), s(rev.right));
        EXPECT_EQ(s(fwd.right), s(rev.left));
      }
  }
}

TEST(SelfSmoothing, RejectsWithoutSingleCrossing) {
  EXPECT_THROW(smooth_self(d7, {0, 7}), std::invalid_argument);
  EXPECT_THROW(smooth_self(d7, {0, 14}), std::invalid_argument);
}

TEST(SmoothPair, Example1) {
  auto r = smooth_pair(P(5, 3), P(1, 6));
  std::vector<Multicurve> want = {
      make_multicurve({R(5, Tag::notched), R(6, Tag::plain), P(1, 3)}),
      make_multicurve({R(5, Tag::plain), R(6, Tag::notched), P(1, 3)}),
      make_multicurve({P(1, 5), P(6, 3)}),
      make_multicurve({P(6, 5), P(1, 3)}),
  };
  EXPECT_EQ(sorted(r.plus), sorted(want));
  EXPECT_EQ(r.minus.size(), 4u);
  EXPECT_EQ(r.plus_origin.size(), r.plus.size());
}

TEST(SmoothPair, Example1CompatibilityWithinCandidates) {
  // Only (d) consists of pairwise compatible arcs; (a), (b), (c) each
  // contain one crossing pair.
  auto r = smooth_pair(P(5, 3), P(1, 6));
  for (const auto& m : r.plus) {
    int inner = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) inner += crossing_number(m[i], m[j]);
    EXPECT_EQ(inner, m == make_multicurve({P(6, 5), P(1, 3)}) ? 0 : 1) << multicurve_str(m);
  }
}

TEST(SmoothPair, Example2) {
  PuncturedDisk d8(8);
  auto r = smooth_pair(R(6, Tag::notched, d8), P(4, 1, d8));
  ASSERT_EQ(r.plus.size(), 1u);
  EXPECT_EQ(r.plus[0], make_multicurve({P(4, 6, d8), R(1, Tag::notched, d8)}));
}

TEST(SmoothPair, RadialsWithDifferentTags) {
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      if (a == b) continue;
      auto r = smooth_pair(R(a, Tag::notched), R(b, Tag::plain));
      ASSERT_EQ(r.plus.size(), 1u);
      ASSERT_EQ(r.minus.size(), 1u);
      std::vector<Multicurve> got = {r.plus[0], r.minus[0]};
      // a boundary segment contributes nothing
      auto seg = [&](int x, int y) { return (y - x + 7) % 7 == 1 ? Multicurve{} : Multicurve{P(x, y)}; };
      EXPECT_EQ(sorted(got), sorted({seg(a, b), seg(b, a)}));
    }
}

TEST(SmoothPair, NoCrossing) {
  EXPECT_THROW(smooth_pair(P(5, 3), P(3, 5)), NoCrossingError);
  EXPECT_THROW(smooth_pair(P(5, 3), P(5, 3)), NoCrossingError);
}

TEST(SmoothPair, CardinalityDualityExhaustive) {
  for (int n = 2; n <= 6; ++n) {
    auto arcs = enumerate_tagged_arcs(PuncturedDisk(n));
    for (const auto& a : arcs)
      for (const auto& b : arcs) {
        int e = crossing_number(a, b);
        if (e == 0) continue;
        auto ab = smooth_pair(a, b);
        auto ba = smooth_pair(b, a);
        std::size_t want = e == 1 ? 1 : 4;
        EXPECT_EQ(ab.plus.size(), want) << a.str() << " " << b.str();
        EXPECT_EQ(ab.minus.size(), want) << a.str() << " " << b.str();
        EXPECT_EQ(sorted(ab.minus), sorted(ba.plus)) << a.str() << " " << b.str();
        for (const auto* side : {&ab.plus, &ab.minus})
          for (const auto& m : *side) {
            EXPECT_FALSE(m == Multicurve{a} || m == Multicurve{b});
            for (const auto& x : m) EXPECT_EQ(x.n, n);
          }
      }
  }
}
