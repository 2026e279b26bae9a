#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "rfdepth/errors.hpp"
#include "rfdepth/synth.hpp"
#include "rfdepth/textio.hpp"

namespace rfdepth {
namespace {

Ordinal O(const char* text) { return parse_ordinal(text); }
std::string synth(const char* a, bool fg = true) { return print_term(synthesize(O(a), fg)); }

TEST(Synthesize, Dispatch) {
  EXPECT_EQ(synth("0"), "1");
  EXPECT_EQ(synth("1"), "C(2)");
  EXPECT_EQ(synth("w"), "Z");
  EXPECT_EQ(synth("w*2"), "wr(A5, Z)");
  EXPECT_EQ(synth("w*3"), "wr(A5, wr(A5, Z))");
  EXPECT_EQ(synth("w+1"), "M(1, 3)");
  EXPECT_EQ(synth("w*4+1"), "M(4, 3)");
  EXPECT_EQ(synth("w^2"), "embed3(fpfam(w^2))");
  EXPECT_EQ(synth("w^2", false), "fpfam(w^2)");
  EXPECT_EQ(synth("w^2+w"), "wr(A5, embed3(fpfam(w^2)))");
  EXPECT_EQ(synth("w^2+w+1"), "E(LamBar(3), embed3(fpfam(w^2)))");
  EXPECT_EQ(synth("w^2+1"), "succwit(w^2)");
  EXPECT_EQ(synth("w^w+1"), "succwit(w^w)");
}

TEST(Synthesize, NotRealizable) {
  EXPECT_THROW(synthesize(O("w+2"), true), NotRealizable);
  EXPECT_THROW(synthesize(O("w+2"), false), NotRealizable);
  EXPECT_THROW(synthesize(O("5"), true), NotRealizable);
  EXPECT_THROW(certify_roundtrip(O("5"), true), NotRealizable);
}

TEST(CertifyRoundtrip, Examples) {
  EXPECT_EQ(certify_roundtrip(O("w^w"), true).result.value(), O("w^w"));
  EXPECT_EQ(certify_roundtrip(O("w^3+w*2+1"), true).result.value(), O("w^3+w*2+1"));
  EXPECT_EQ(certify_roundtrip(O("w^(w+1)*2+w^w+w"), false).result.value(),
            O("w^(w+1)*2+w^w+w"));
}

TEST(CertifyRoundtrip, SmallGridExact) {
  for (const Ordinal& a : testing::ordinal_grid(2, 3)) {
    if (!classify_realizable(a).realizable) continue;
    for (bool fg : {true, false}) {
      const GroupTerm t = synthesize(a, fg);
      const auto out = depth(t);
      ASSERT_TRUE(out.result.is_defined()) << print_ordinal(a);
      ASSERT_EQ(out.result.value(), a) << print_term(t);
      if (fg) ASSERT_TRUE(attrs(t).finitely_generated) << print_term(t);
      ASSERT_NO_THROW(certify_roundtrip(a, fg)) << print_ordinal(a);
    }
  }
}

TEST(CertifyRoundtrip, RandomRealizable) {
  testing::Rng rng(5150);
  int tried = 0;
  while (tried < 200) {
    Ordinal a = testing::random_ordinal(rng, 1, 3, 4);
    if (!classify_realizable(a).realizable) continue;
    ++tried;
    const auto c = certify_roundtrip(a, true);
    ASSERT_EQ(c.result.value(), a) << print_ordinal(a);
  }
}

// Every family member used by a synthesized witness is itself realizable and
// sits at a limit.
void check_members(const CertificateNode& node, std::set<const CertificateNode*>& seen) {
  for (const auto& m : node.members) {
    EXPECT_TRUE(classify_realizable(m.element).realizable) << print_ordinal(m.element);
    if (seen.insert(m.certificate.get()).second) check_members(*m.certificate, seen);
  }
  for (const auto& c : node.children) check_members(c, seen);
}

TEST(CertifyRoundtrip, FamilyMembersRealizable) {
  std::set<const CertificateNode*> seen;
  for (const char* a : {"w^2", "w^3*2", "w^w", "w^2+1", "w^w+1", "w^(w+2)*2+w^3"}) {
    check_members(certify_roundtrip(O(a), true, DepthOptions{4}), seen);
  }
  EXPECT_GT(seen.size(), 20u);
}

TEST(CertifyRoundtrip, SuccessorWitnessMembersAreLimits) {
  const auto c = depth(successor_witness(O("w^w")), DepthOptions{4}).certificate;
  ASSERT_EQ(c.members.size(), 4u);
  for (const auto& m : c.members) EXPECT_TRUE(is_limit(m.element));
}

}  // namespace
}  // namespace rfdepth
