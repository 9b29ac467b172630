#include <random>

#include "bicd/certify.hpp"
#include "bicd/switching.hpp"
#include "support/helpers.hpp"
#include "support/random_packing.hpp"

using namespace bicd;
using namespace bicd::testing;

TEST(SwitchEdgeSet, UnmatchedSlotsAfterOneFourCycle) {
  const Packing p({2, 2, 3}, {Cycle::from({L(0), R(0), L(1), R(1)})});
  const auto a = switch_edge_set(p.leave(), R(0), R(2));
  EXPECT_EQ(a, (std::vector<Slot>{{L(0), R(2)}, {L(1), R(2)}}));
}

TEST(SwitchEdgeSet, FullLeaveIsBalanced) {
  EXPECT_TRUE(switch_edge_set(EdgeMultiset::complete({2, 3, 4}), L(0), L(2)).empty());
  EXPECT_TRUE(switch_edge_set(EdgeMultiset::complete({3, 3, 4}), R(1), R(3)).empty());
}

TEST(SwitchEdgeSet, DifferentPartsAreNotTwins) {
  expect_error([] { switch_edge_set(EdgeMultiset(2, 2), L(0), R(0)); }, ErrorKind::InvalidTwin);
}

TEST(Switch, ReplacesCycleByItsImage) {
  const Packing p({2, 2, 3}, {Cycle::from({L(0), R(0), L(1), R(1)})});
  const auto [q, rec] = perform_switch(p, R(0), R(2), L(0));
  ASSERT_EQ(q.cycles().size(), 1u);
  EXPECT_EQ(q.cycles()[0], Cycle::from({L(0), R(2), L(1), R(1)}));
  EXPECT_EQ(rec.terminus, L(1));
  EdgeMultiset want = p.leave();
  want.add(L(0), R(0), +1);
  want.add(L(1), R(0), +1);
  want.add(L(0), R(2), -1);
  want.add(L(1), R(2), -1);
  EXPECT_EQ(q.leave(), want);
  EXPECT_TRUE(verify_packing(q).valid);
}

TEST(Switch, SimpleSixCycleLeave) {
  const GraphSpec spec{2, 3, 3};
  const Cycle hole = Cycle::from({L(0), R(0), L(1), R(1), L(2), R(2)});
  const Packing p = packing_with_leave(spec, edges_of(3, 3, {hole}));
  const auto [q, rec] = perform_switch(p, L(0), L(1), R(2));
  EXPECT_EQ(rec.terminus, R(1));
  EXPECT_EQ(q.leave(), edges_of(3, 3, {Cycle::from({L(0), R(0), L(1), R(2), L(2), R(1)})}));
  EXPECT_EQ(q.lengths(), p.lengths());
  EXPECT_TRUE(verify_packing(q).valid);
}

TEST(Switch, BalancedOriginHasNoExcess) {
  const Packing p({2, 2, 3}, {Cycle::from({L(0), R(0), L(1), R(1)})});
  expect_error([&] { perform_switch(p, R(0), R(1), L(0)); }, ErrorKind::NoExcess);
  expect_error([&] { perform_switch(p, R(0), R(2), R(1)); }, ErrorKind::NoExcess);
  expect_error([&] { perform_switch(p, R(0), L(0), L(1)); }, ErrorKind::InvalidTwin);
}

TEST(AuditLog, RecordsOneLinePerSwitch) {
  const Packing p({2, 2, 3}, {Cycle::from({L(0), R(0), L(1), R(1)})});
  AuditLog log;
  log.record("test", perform_switch(p, R(0), R(2), L(0)).second);
  log.note("test", "done");
  ASSERT_EQ(log.lines().size(), 2u);
  EXPECT_EQ(log.lines()[0].rfind("switch[test] alpha=R0 beta=R2 origin=L0 terminus=L1", 0), 0u) << log.lines()[0];
  EXPECT_EQ(log.lines()[1], "note[test] done");
}

// Contract checks on random packings: lengths, leave size, degrees away from
// the twins, the packing invariant, cycles untouched unless they meet a twin,
// and the four-slot toggle when the leave is simple.
TEST(SwitchProperty, ContractHoldsOnRandomPackings) {
  std::mt19937 rng(99);
  int calls = 0;
  while (calls < 400) {
    const GraphSpec spec{std::uniform_int_distribution<int>(1, 3)(rng), std::uniform_int_distribution<int>(2, 5)(rng),
                         std::uniform_int_distribution<int>(2, 5)(rng)};
    const Packing p = random_packing(spec, rng);
    if (!p.leave_is_even()) continue;
    const Part side = rng() % 2 ? Part::Left : Part::Right;
    const int n = side == Part::Left ? spec.v : spec.u;
    const Vertex alpha{side, static_cast<int>(rng() % n)};
    const Vertex beta{side, static_cast<int>(rng() % n)};
    if (alpha == beta) continue;
    const int m = side == Part::Left ? spec.u : spec.v;
    const Vertex origin{other(side), static_cast<int>(rng() % m)};
    if (p.leave().at(origin, alpha) == p.leave().at(origin, beta)) continue;
    ++calls;
    const auto outcomes = switch_outcomes(p, alpha, beta, origin);
    ASSERT_FALSE(outcomes.empty());
    const auto first = perform_switch(p, alpha, beta, origin);
    EXPECT_EQ(first.first.cycles(), outcomes.front().first.cycles());
    for (const auto& [q, rec] : outcomes) {
      EXPECT_EQ(q.lengths(), p.lengths());
      EXPECT_EQ(q.leave().size(), p.leave().size());
      EXPECT_EQ(q.leave(), compute_leave(spec, q.cycles()));
      EXPECT_TRUE(verify_packing(q).valid);
      EXPECT_EQ(q.leave().degree(alpha) + q.leave().degree(beta), p.leave().degree(alpha) + p.leave().degree(beta));
      for (int id = 0; id < spec.v + spec.u; ++id) {
        const Vertex x = vertex_from_id(spec.v, id);
        if (x != alpha && x != beta) EXPECT_EQ(q.leave().degree(x), p.leave().degree(x));
      }
      for (size_t k = 0; k < p.cycles().size(); ++k) {
        const Cycle& c = p.cycles()[k];
        if (!c.contains(alpha) && !c.contains(beta)) EXPECT_EQ(q.cycles()[k], c);
        EXPECT_EQ(q.cycles()[k].length(), c.length());
      }
      if (p.leave().max_multiplicity() <= 1) {
        EdgeMultiset want = p.leave();
        for (Vertex end : {origin, rec.terminus}) {
          for (Vertex twin : {alpha, beta}) want.add(end, twin, p.leave().at(end, twin) ? -1 : +1);
        }
        EXPECT_EQ(q.leave(), want);
      }
    }
  }
}
