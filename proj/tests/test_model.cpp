#include <algorithm>
#include <numeric>
#include <random>

#include "support/helpers.hpp"

using namespace bicd;
using namespace bicd::testing;

TEST(Cycle, CanonicalFormStartsAtLeastLeftVertex) {
  const Cycle c = Cycle::from({R(0), L(0), R(1), L(1)});
  EXPECT_EQ(c.vertices(), (std::vector<Vertex>{L(0), R(0), L(1), R(1)}));
}

TEST(Cycle, TwoCycleIsAlreadyCanonical) {
  const Cycle c = Cycle::from({L(0), R(0)});
  EXPECT_EQ(c.vertices(), (std::vector<Vertex>{L(0), R(0)}));
  EXPECT_EQ(c.length(), 2);
}

TEST(Cycle, RejectsMalformedSequences) {
  expect_error([] { Cycle::from({L(0), R(0), L(0), R(1)}); }, ErrorKind::MalformedCycle);
  expect_error([] { Cycle::from({L(0), L(1)}); }, ErrorKind::MalformedCycle);
  expect_error([] { Cycle::from({L(0), R(0), L(1)}); }, ErrorKind::MalformedCycle);
  expect_error([] { Cycle::from({L(0)}); }, ErrorKind::MalformedCycle);
}

TEST(Cycle, CanonicalFormIgnoresRotationAndReflection) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int half = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<int> ls(8), rs(8);
    std::iota(ls.begin(), ls.end(), 0);
    std::iota(rs.begin(), rs.end(), 0);
    std::shuffle(ls.begin(), ls.end(), rng);
    std::shuffle(rs.begin(), rs.end(), rng);
    std::vector<Vertex> raw;
    for (int k = 0; k < half; ++k) {
      raw.push_back(L(ls[k]));
      raw.push_back(R(rs[k]));
    }
    const Cycle base = Cycle::from(raw);
    for (size_t r = 0; r < raw.size(); ++r) {
      std::vector<Vertex> rot(raw);
      std::rotate(rot.begin(), rot.begin() + static_cast<long>(r), rot.end());
      EXPECT_EQ(Cycle::from(rot), base);
      std::reverse(rot.begin(), rot.end());
      EXPECT_EQ(Cycle::from(rot), base);
    }
  }
}

TEST(Leave, FourCycleCoversTwoByTwo) {
  const std::vector<Cycle> cs{Cycle::from({L(0), R(0), L(1), R(1)})};
  EXPECT_TRUE(compute_leave({1, 2, 2}, cs).empty());
}

TEST(Leave, NoCyclesLeavesEveryPairAtLambda) {
  const EdgeMultiset m = compute_leave({2, 2, 2}, {});
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) EXPECT_EQ(m(i, j), 2);
  }
  EXPECT_EQ(m.size(), 8);
}

TEST(Leave, OverfullPairIsRejected) {
  const std::vector<Cycle> cs{Cycle::from({L(0), R(0), L(1), R(1)}), Cycle::from({L(0), R(0)})};
  expect_error([&] { compute_leave({1, 2, 2}, cs); }, ErrorKind::Overfull);
}

TEST(Packing, StoredLeaveMatchesRecomputation) {
  const GraphSpec spec{2, 3, 4};
  Packing p = Packing::empty(spec);
  p = p.with_cycle(Cycle::from({L(0), R(0), L(1), R(1)}));
  p = p.with_cycle(Cycle::from({L(2), R(3)}));
  p = p.with_cycle(Cycle::from({L(0), R(2), L(2), R(0), L(1), R(3)}));
  EXPECT_EQ(p.leave(), compute_leave(spec, p.cycles()));
  const std::vector<int> drop{0, 2};
  const Packing q = p.without_cycles(drop);
  EXPECT_EQ(q.cycles().size(), 1u);
  EXPECT_EQ(q.leave(), compute_leave(spec, q.cycles()));
  EXPECT_EQ(p.transposed().leave(), p.leave().transposed());
}

TEST(LengthSeq, ParsesAndSorts) {
  const LengthSeq m = LengthSeq::parse("6, 2,4,2");
  EXPECT_EQ(m.lengths(), (std::vector<int>{2, 2, 4, 6}));
  EXPECT_EQ(m.sum(), 14);
  EXPECT_EQ(m.largest(), 6);
  EXPECT_EQ(m.second_largest(), 4);
  EXPECT_EQ(to_string(m), "(2^2,4,6)");
  expect_error([] { LengthSeq::parse("3,4"); }, ErrorKind::Input);
  expect_error([] { LengthSeq::parse("x"); }, ErrorKind::Input);
}

TEST(GraphSpec, RejectsNonPositiveSizes) {
  expect_error([] { GraphSpec{0, 2, 2}.validate(); }, ErrorKind::Input);
  expect_error([] { GraphSpec{1, 0, 2}.validate(); }, ErrorKind::Input);
}
