#include <random>

#include "bicd/certify.hpp"
#include "bicd/constructor.hpp"
#include "support/helpers.hpp"

using namespace bicd;
using namespace bicd::testing;

namespace {
const GraphSpec k33{2, 3, 3};
const LengthSeq base_m(std::vector<int>{2, 2, 4, 4, 6});
}  // namespace

TEST(Verify, BaseCertificateIsValid) {
  const Packing p = base_even(k33, 6);
  EXPECT_EQ(verify_decomposition(k33, p.cycles(), base_m).to_string(), "valid");
}

TEST(Verify, MissingTwoCycleIsReported) {
  std::vector<std::vector<Vertex>> cycles;
  const Packing p = base_even(k33, 6);
  for (const Cycle& c : p.cycles()) cycles.push_back(c.vertices());
  const auto it = std::find(cycles.begin(), cycles.end(), std::vector<Vertex>{L(1), R(2)});
  ASSERT_NE(it, cycles.end());
  cycles.erase(it);
  EXPECT_EQ(verify_decomposition(k33, cycles, LengthSeq({2, 4, 4, 6})).to_string(),
            "invalid: pair (L1,R2) covered 0 of 2");
}

TEST(Verify, RepeatedVertexIsReported) {
  const std::vector<std::vector<Vertex>> cycles{{L(0), R(0), L(0), R(1)}};
  const Verdict v = verify_decomposition({1, 2, 2}, cycles, LengthSeq({4}));
  EXPECT_FALSE(v.valid);
  EXPECT_NE(v.reason.find("repeated vertex"), std::string::npos) << v.reason;
}

TEST(Verify, WrongLengthsAreReported) {
  const Packing p = base_even(k33, 6);
  EXPECT_FALSE(verify_decomposition(k33, p.cycles(), LengthSeq({2, 2, 2, 2, 4, 6})).valid);
}

TEST(Verify, OrderOfCyclesDoesNotMatter) {
  std::mt19937 rng(3);
  const GraphSpec spec{2, 5, 5};
  const Packing p = base_even(spec, 8);
  std::vector<Cycle> cycles = p.cycles();
  for (int k = 0; k < 20; ++k) {
    std::shuffle(cycles.begin(), cycles.end(), rng);
    EXPECT_TRUE(verify_decomposition(spec, cycles, p.lengths()).valid);
  }
  cycles.pop_back();
  for (int k = 0; k < 5; ++k) {
    std::shuffle(cycles.begin(), cycles.end(), rng);
    EXPECT_FALSE(verify_decomposition(spec, cycles, p.lengths()).valid);
  }
}

TEST(VerifyPacking, EmptyPackingAndStaleLeave) {
  EXPECT_TRUE(verify_packing(Packing::empty({3, 2, 4})).valid);
  const Packing p({1, 2, 2}, {Cycle::from({L(0), R(0), L(1), R(1)})});
  EXPECT_TRUE(verify_packing(p).valid);
  // Trusted constructor with a leave that does not add up.
  const Packing bad({1, 2, 2}, p.cycles(), EdgeMultiset::complete({1, 2, 2}));
  EXPECT_FALSE(verify_packing(bad).valid);
}

TEST(Certificate, RoundTripsThroughJson) {
  const Packing p = base_even(k33, 6);
  const std::string text = write_certificate(Certificate::from(p));
  EXPECT_EQ(text.rfind("{\"lambda\":2,\"v\":3,\"u\":3,\"M\":[2,2,4,4,6],\"cycles\":[[[\"L\",1],[\"R\",2]]", 0), 0u)
      << text;
  const Certificate back = read_certificate(text);
  EXPECT_EQ(back.spec, k33);
  EXPECT_EQ(back.m, base_m);
  EXPECT_TRUE(verify_certificate(back).valid);
  EXPECT_EQ(write_certificate(back), text);
}

TEST(Certificate, MalformedInputIsRejected) {
  expect_error([] { read_certificate("not json"); }, ErrorKind::Input);
  expect_error([] { read_certificate(R"({"lambda":1,"v":2,"u":2,"M":[4]})"); }, ErrorKind::Input);
  expect_error([] { read_certificate(R"({"lambda":1,"v":2,"u":2,"M":[4],"cycles":[[["X",0],["R",0]]]})"); },
               ErrorKind::Input);
  const Certificate c = read_certificate(R"({"lambda":1,"v":2,"u":2,"M":[4],"cycles":[[["L",0],["R",0],["L",1],["R",1]]]})");
  EXPECT_TRUE(verify_certificate(c).valid);
}
