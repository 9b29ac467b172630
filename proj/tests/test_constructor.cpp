#include "bicd/certify.hpp"
#include "bicd/conditions.hpp"
#include "bicd/constructor.hpp"
#include "bicd/oracle.hpp"
#include "support/helpers.hpp"

using namespace bicd;
using namespace bicd::testing;

namespace {
LengthSeq with_twos(int twos, std::vector<int> rest) {
  rest.insert(rest.end(), twos, 2);
  return LengthSeq(rest);
}
}  // namespace

TEST(BaseEven, ThreeByThreeLayout) {
  const Packing p = base_even({2, 3, 3}, 6);
  std::vector<Cycle> want{Cycle::from({L(0), R(0), L(1), R(1), L(2), R(2)}), Cycle::from({L(0), R(0), L(1), R(1)}),
                          Cycle::from({L(0), R(1), L(2), R(2)}), Cycle::from({L(1), R(2)}), Cycle::from({L(2), R(0)})};
  std::vector<Cycle> got = p.cycles();
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(p.lengths(), LengthSeq({2, 2, 4, 4, 6}));
}

TEST(BaseEven, DegenerateTwoCycleBase) {
  const Packing p = base_even({2, 2, 2}, 2);
  EXPECT_EQ(p.lengths(), LengthSeq({2, 2, 2, 2}));
  EXPECT_TRUE(p.is_decomposition());
}

TEST(BaseEven, RejectsBadInput) {
  expect_error([] { base_even({2, 3, 3}, 7); }, ErrorKind::Input);
  expect_error([] { base_even({3, 4, 4}, 4); }, ErrorKind::Input);
  expect_error([] { base_even({2, 3, 3}, 8); }, ErrorKind::Input);
}

TEST(BaseEven, MeetsTheCountingBoundExactly) {
  for (int lambda : {2, 4, 6}) {
    for (int v = 2; v <= 7; ++v) {
      for (int u = v; u <= 8; ++u) {
        const GraphSpec spec{lambda, v, u};
        for (int mt = 2; mt <= 2 * v; mt += 2) {
          const Packing p = base_even(spec, mt);
          const LengthSeq l = p.lengths();
          EXPECT_TRUE(verify_decomposition(spec, p.cycles(), l).valid);
          EXPECT_EQ(l, base_even_lengths(spec, mt));
          EXPECT_EQ(l.size(), lambda / 2 * v * u - mt + 2);
          EXPECT_TRUE(check_necessary(spec, l).pass);
        }
      }
    }
  }
}

TEST(BaseOdd, ThreeLayersOnK66) {
  const GraphSpec spec{3, 6, 6};
  const Packing p = base_odd(spec, 6, 6);
  EXPECT_EQ(p.lengths(), with_twos(36, {4, 4, 4, 4, 4, 4, 6, 6}));
  EXPECT_TRUE(verify_decomposition(spec, p.cycles(), p.lengths()).valid);
}

TEST(BaseOdd, SixCycleLeaveBranch) {
  // 36 - 6 - 4 = 26 is not a multiple of 4.
  const GraphSpec spec{3, 6, 6};
  const Packing p = base_odd(spec, 6, 4);
  EXPECT_TRUE(verify_decomposition(spec, p.cycles(), p.lengths()).valid);
  EXPECT_EQ(p.lengths().largest(), 6);
  EXPECT_EQ(p.lengths().nu(6), 1);
  expect_error([] { base_odd({1, 6, 6}, 6, 4); }, ErrorKind::BaseUnavailable);
}

TEST(BaseOdd, RejectsCyclesLongerThanAPart) {
  // Two 4-cycles in 3K_{2,2} would need m_t <= min(v, u) = 2.
  expect_error([] { base_odd({3, 2, 2}, 4, 4); }, ErrorKind::Input);
  EXPECT_EQ(oracle_decide({3, 2, 2}, LengthSeq({2, 2, 4, 4}), 5).status, OracleStatus::NotExists);
  expect_error([] { base_odd({2, 6, 6}, 6, 6); }, ErrorKind::Input);
}

TEST(SimpleBase, Examples) {
  const Packing grid = simple_base(4, 4, LengthSeq({4, 4, 4, 4}));
  EXPECT_TRUE(verify_decomposition({1, 4, 4}, grid.cycles(), LengthSeq({4, 4, 4, 4})).valid);
  const LengthSeq sixes({6, 6, 6, 6, 6, 6});
  const Packing s = simple_base(6, 6, sixes);
  EXPECT_TRUE(verify_decomposition({1, 6, 6}, s.cycles(), sixes).valid);
  expect_error([] { simple_base(6, 6, LengthSeq({4, 4, 4, 4}), true); }, ErrorKind::Input);
  const Packing holed = simple_base(4, 4, LengthSeq({4, 6}), true);
  ASSERT_EQ(holed.leave().size(), 6);
}

TEST(PlanMerges, IdentityAndGrouping) {
  const MergePlan same = plan_merges(LengthSeq({2, 2, 4, 6}), LengthSeq({2, 2, 4, 6}), 6, 1, 10);
  EXPECT_EQ(same.kept, std::vector<int>{6});
  for (const MergeGroup& g : same.groups) EXPECT_EQ(g.pieces.size(), 1u);

  const MergePlan joined = plan_merges(with_twos(18, {4, 4, 6}), with_twos(17, {4, 6, 6}), 6, 1, 12);
  int merged = 0;
  for (const MergeGroup& g : joined.groups) {
    if (g.pieces.size() > 1) {
      EXPECT_EQ(g.target, 6);
      EXPECT_EQ(g.pieces, (std::vector<int>{4, 2}));
      ++merged;
    }
  }
  EXPECT_EQ(merged, 1);
}

TEST(PlanMerges, RejectsJoinsBeyondTheLeaveBound) {
  expect_error([] { plan_merges(with_twos(17, {4, 4, 10}), with_twos(15, {4, 6, 10}), 10, 1, 10); },
               ErrorKind::PlanInfeasible);
  expect_error([] { plan_merges(LengthSeq({2, 2, 4, 6}), LengthSeq({2, 2, 2, 2, 6}), 6, 1, 10); },
               ErrorKind::PlanInfeasible);
}

TEST(Decompose, BaseShapeNeedsNoJoins) {
  const GraphSpec spec{2, 5, 5};
  const LengthSeq m = with_twos(21, {4, 4});
  EXPECT_TRUE(verify_decomposition(spec, decompose(spec, m).cycles(), m).valid);
}

TEST(Decompose, OddLambdaShortCircuit) {
  const LengthSeq m({6, 6, 6, 6, 6, 6});
  EXPECT_TRUE(verify_decomposition({1, 6, 6}, decompose({1, 6, 6}, m).cycles(), m).valid);
}

TEST(Decompose, UncoveredInputIsRefused) {
  expect_error([] { decompose({2, 5, 5}, with_twos(20, {4, 6})); }, ErrorKind::LemmaPrecondition);
  expect_error([] { decompose({1, 4, 4}, LengthSeq({4, 6, 6})); }, ErrorKind::LemmaPrecondition);
}

TEST(Decompose, TransposedPartsAndJoins) {
  const GraphSpec spec{2, 7, 5};
  const LengthSeq m = with_twos(11, {4, 4, 4, 4, 4, 4, 6, 6, 6, 6});
  ASSERT_TRUE(check_constructive_hypotheses(spec, m).covered) << check_constructive_hypotheses(spec, m).to_string();
  AuditLog log;
  DecomposeOptions opts;
  opts.log = &log;
  const Packing p = decompose(spec, m, opts);
  EXPECT_EQ(p.spec(), spec);
  EXPECT_TRUE(verify_decomposition(spec, p.cycles(), m).valid);
  EXPECT_FALSE(log.lines().empty());
}

// Every covered sequence is either built and verified or, for odd lambda,
// reported as a gap. Even lambda has no gaps on these graphs.
TEST(DecomposeProperty, CoveredInstancesAreBuilt) {
  for (const GraphSpec spec : {GraphSpec{2, 5, 6}, GraphSpec{4, 5, 5}, GraphSpec{2, 6, 8}, GraphSpec{3, 6, 6},
                               GraphSpec{1, 6, 6}}) {
    int built = 0;
    int gaps = 0;
    for (const LengthSeq& m : even_partitions(static_cast<int>(spec.total_edges()))) {
      if (!check_constructive_hypotheses(spec, m).covered) continue;
      try {
        const Packing p = decompose(spec, m);
        EXPECT_TRUE(verify_decomposition(spec, p.cycles(), m).valid) << to_string(m);
        ++built;
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ConstructiveGap);
        EXPECT_EQ(spec.lambda % 2, 1) << to_string(m) << ": " << e.what();
        ++gaps;
      }
    }
    EXPECT_GT(built, gaps) << spec.lambda << "K" << spec.v << "," << spec.u;
  }
}

// Odd lambda: an m_t longer than a part is outside the base layout.
TEST(Decompose, OddLambdaLongestCycleBeyondPartIsAGap) {
  expect_error([] { decompose({3, 6, 6}, with_twos(36, {4, 4, 4, 4, 4, 4, 4, 8})); }, ErrorKind::ConstructiveGap);
}
