#include <gtest/gtest.h>

#include "generators.hpp"
#include "rfdepth/errors.hpp"
#include "rfdepth/ordinal.hpp"
#include "rfdepth/textio.hpp"

namespace rfdepth {
namespace {

using testing::random_ordinal;
using testing::Rng;

Ordinal O(const char* text) { return parse_ordinal(text); }
Ordinal N(std::uint64_t n) { return Ordinal::natural(n); }
const Ordinal w = Ordinal::omega();

// Independent check of the CNF invariants on a value.
bool canonical(const Ordinal& a) {
  const auto ts = a.terms();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].coefficient <= 0) return false;
    if (!canonical(ts[i].exponent)) return false;
    if (i > 0 && !(ts[i].exponent < ts[i - 1].exponent)) return false;
  }
  return true;
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare(Ordinal(), Ordinal()), std::strong_ordering::equal);
  EXPECT_EQ(compare(w, N(1000)), std::strong_ordering::greater);
  EXPECT_EQ(compare(O("w*3+2"), O("w*3+1")), std::strong_ordering::greater);
  EXPECT_LT(O("w^w"), O("w^(w+1)"));
  EXPECT_LT(O("w^2*1000"), O("w^3"));
}

TEST(Add, Examples) {
  EXPECT_EQ(N(1) + w, w);
  EXPECT_EQ(w + O("w^2"), O("w^2"));
  EXPECT_EQ(O("w*3+2") + O("w*5+1"), O("w*8+1"));
  EXPECT_EQ(O("w^2+w*4") + O("w^2*2+3"), O("w^2*3+3"));
  EXPECT_NE(N(1) + w, w + N(1));
}

TEST(Multiply, Examples) {
  EXPECT_EQ(w * N(3), O("w*3"));
  EXPECT_EQ(N(2) * w, w);
  EXPECT_EQ(O("w*2") * w, O("w^2"));
  EXPECT_NE(N(2) * w, O("w*2"));
  EXPECT_EQ(w * O("w^w"), O("w^w"));
  EXPECT_EQ(O("w^2+1") * O("w+1"), O("w^3+w^2+1"));
  EXPECT_EQ(O("w+3") * N(2), O("w*2+3"));
}

TEST(Analyze, Examples) {
  EXPECT_EQ(analyze(Ordinal()).kind, OrdinalShape::Kind::zero);
  const auto s = analyze(O("w*2+1"));
  EXPECT_EQ(s.kind, OrdinalShape::Kind::successor);
  EXPECT_EQ(*s.predecessor, O("w*2"));
  EXPECT_EQ(analyze(O("w^w")).kind, OrdinalShape::Kind::limit);
}

TEST(DivOmega, Examples) {
  EXPECT_EQ(div_omega(O("w*3")), N(3));
  EXPECT_EQ(div_omega(O("w^2")), w);
  EXPECT_EQ(div_omega(O("w^w")), O("w^w"));
  EXPECT_EQ(w * O("w^w"), O("w^w"));
  EXPECT_THROW(div_omega(Ordinal()), NotLimit);
  EXPECT_THROW(div_omega(O("w+1")), NotLimit);
}

TEST(CoreSignature, Examples) {
  EXPECT_EQ(depth_to_core_signature(O("w*3+1")), (CoreSignature{N(3), CoreClass::finite_nontrivial}));
  EXPECT_EQ(depth_to_core_signature(O("w^2")), (CoreSignature{w, CoreClass::trivial}));
  EXPECT_THROW(depth_to_core_signature(O("w+2")), InvalidDepthShape);
  EXPECT_THROW(depth_to_core_signature(N(2)), InvalidDepthShape);
  EXPECT_EQ(depth_to_core_signature(Ordinal()), (CoreSignature{Ordinal(), CoreClass::trivial}));
  EXPECT_EQ(depth_to_core_signature(N(1)),
            (CoreSignature{Ordinal(), CoreClass::finite_nontrivial}));
}

TEST(FundamentalSequence, OmegaSquared) {
  const auto seq = fundamental_sequence(O("w^2"));
  for (std::uint64_t n = 1; n <= 100; ++n) {
    EXPECT_EQ(seq.element(n), w * N(n));
    EXPECT_LT(seq.element(n), seq.target());
    if (n > 1) EXPECT_LT(seq.element(n - 1), seq.element(n));
  }
  // Cofinal: every ordinal below w^2 is passed.
  for (std::uint64_t p = 0; p < 100; ++p) {
    EXPECT_LT(w * N(p) + N(1000), seq.element(p + 1));
  }
}

TEST(FundamentalSequence, Examples) {
  EXPECT_EQ(fundamental_sequence(O("w^2*2")).element(3), O("w^2+w*3"));
  EXPECT_EQ(fundamental_sequence(O("w^w")).element(2), O("w^2"));
  EXPECT_EQ(fundamental_sequence(w).element(7), N(7));
  EXPECT_EQ(fundamental_sequence(O("w^(w+1)")).element(2), O("w^w*2"));
  EXPECT_EQ(fundamental_sequence(O("w^(w^w)")).element(2), O("w^(w^2)"));
  EXPECT_THROW(fundamental_sequence(O("w+1")), NotLimit);
  EXPECT_THROW(fundamental_sequence(Ordinal()), NotLimit);
}

TEST(Classify, Examples) {
  EXPECT_TRUE(classify_realizable(O("w^2+1")).realizable);
  const auto seven = classify_realizable(N(7));
  EXPECT_FALSE(seven.realizable);
  EXPECT_EQ(seven.reason, Realizability::Reason::finite_above_one);
  EXPECT_TRUE(classify_realizable(Ordinal()).realizable);
  EXPECT_TRUE(classify_realizable(N(1)).realizable);
  EXPECT_EQ(classify_realizable(O("w+2")).reason, Realizability::Reason::successor_of_successor);
}

TEST(Absorbs, Examples) {
  EXPECT_TRUE(absorbs(w, O("w^2")));
  EXPECT_FALSE(absorbs(w, O("w*5")));
  EXPECT_TRUE(absorbs(Ordinal(), O("w+4")));
  EXPECT_TRUE(absorbs(Ordinal(), Ordinal()));
  EXPECT_TRUE(absorbs(N(5), w));
}

TEST(Construction, RejectsNonCanonical) {
  EXPECT_THROW(Ordinal::from_terms({{N(1), 1}, {N(2), 1}}), std::invalid_argument);
  EXPECT_THROW(Ordinal::from_terms({{N(1), 0}}), std::invalid_argument);
  EXPECT_THROW(Ordinal::from_terms({{N(1), 1}, {N(1), 2}}), std::invalid_argument);
  EXPECT_EQ(Ordinal::omega_power(w, 0), Ordinal());
}

// --- properties ----------------------------------------------------------------

class OrdinalLaws : public ::testing::Test {
 protected:
  Rng rng{20240917};
  Ordinal any() { return random_ordinal(rng, 3, 3, 50); }
};

TEST_F(OrdinalLaws, Canonicity) {
  for (int i = 0; i < 2000; ++i) {
    const Ordinal a = any(), b = any();
    ASSERT_TRUE(canonical(a + b));
    ASSERT_TRUE(canonical(a * b));
    if (is_limit(a)) ASSERT_TRUE(canonical(div_omega(a)));
    if (is_successor(a)) ASSERT_TRUE(canonical(*analyze(a).predecessor));
  }
}

TEST_F(OrdinalLaws, Addition) {
  for (int i = 0; i < 2000; ++i) {
    const Ordinal a = any(), b = any(), c = any();
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + Ordinal(), a);
    ASSERT_EQ(Ordinal() + a, a);
    if (b < c) ASSERT_LT(a + b, a + c) << print_ordinal(a);
    ASSERT_LE(a, a + b);
    ASSERT_LE(b, a + b);
  }
}

TEST_F(OrdinalLaws, Multiplication) {
  for (int i = 0; i < 1000; ++i) {
    const Ordinal a = random_ordinal(rng, 2, 3, 8), b = random_ordinal(rng, 2, 3, 8),
                  c = random_ordinal(rng, 2, 3, 8);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * N(1), a);
    ASSERT_EQ(N(1) * a, a);
    ASSERT_EQ(a * Ordinal(), Ordinal());
    ASSERT_EQ(Ordinal() * a, Ordinal());
  }
}

TEST_F(OrdinalLaws, CompareIsTotalOrder) {
  for (int i = 0; i < 2000; ++i) {
    const Ordinal a = any(), b = any(), c = any();
    const auto ab = compare(a, b);
    ASSERT_EQ(compare(b, a), 0 <=> ab);
    ASSERT_EQ(ab == 0, a == b);
    if (a <= b && b <= c) ASSERT_LE(a, c);
  }
}

TEST(OrdinalProperties, CompareConsistentWithAddBelowOmegaSquared) {
  // a < b iff some c > 0 has a + c == b; below w^2 any witness c is itself
  // below w^2 with components no larger than b's.
  std::vector<Ordinal> small;
  for (std::uint64_t p = 0; p <= 12; ++p) {
    for (std::uint64_t q = 0; q <= 12; ++q) small.push_back(w * N(p) + N(q));
  }
  for (const auto& a : small) {
    for (const auto& b : small) {
      bool witnessed = false;
      for (const auto& c : small) {
        if (!c.is_zero() && a + c == b) {
          witnessed = true;
          break;
        }
      }
      ASSERT_EQ(a < b, witnessed) << print_ordinal(a) << " vs " << print_ordinal(b);
    }
  }
}

TEST_F(OrdinalLaws, AnalyzeTrichotomyAndDivOmega) {
  for (int i = 0; i < 3000; ++i) {
    const Ordinal a = any();
    const auto s = analyze(a);
    const int branches = int(a.is_zero()) + int(is_limit(a)) + int(is_successor(a));
    ASSERT_EQ(branches, 1);
    if (s.kind == OrdinalShape::Kind::successor) {
      ASSERT_EQ(*s.predecessor + N(1), a);
    }
    if (s.kind == OrdinalShape::Kind::limit) {
      ASSERT_EQ(w * div_omega(a), a) << print_ordinal(a);
    } else {
      ASSERT_THROW(div_omega(a), NotLimit);
    }
  }
}

TEST_F(OrdinalLaws, CoreSignatureRoundTrip) {
  for (int i = 0; i < 2000; ++i) {
    const Ordinal g = any();
    const CoreSignature t{g, CoreClass::trivial};
    const CoreSignature f{g, CoreClass::finite_nontrivial};
    ASSERT_EQ(core_signature_to_depth(t), w * g);
    ASSERT_EQ(core_signature_to_depth(f), w * g + N(1));
    ASSERT_EQ(depth_to_core_signature(core_signature_to_depth(t)), t);
    ASSERT_EQ(depth_to_core_signature(core_signature_to_depth(f)), f);
  }
}

TEST_F(OrdinalLaws, FundamentalSequences) {
  for (int i = 0; i < 500; ++i) {
    const Ordinal a = any();
    if (!is_limit(a)) continue;
    const auto seq = fundamental_sequence(a);
    const bool high = a.least_exponent() >= N(2);
    for (std::uint64_t n = 1; n <= 8; ++n) {
      ASSERT_LT(seq.element(n), seq.element(n + 1));
      ASSERT_LT(seq.element(n + 1), a);
      if (high) ASSERT_TRUE(is_limit(seq.element(n))) << print_ordinal(a);
    }
  }
}

TEST_F(OrdinalLaws, ClassifyMatchesDefinition) {
  for (int i = 0; i < 3000; ++i) {
    const Ordinal a = any();
    const auto s = analyze(a);
    const bool definitional = s.kind != OrdinalShape::Kind::successor || a == N(1) ||
                              is_limit(*s.predecessor);
    ASSERT_EQ(classify_realizable(a).realizable, definitional) << print_ordinal(a);
  }
}

TEST_F(OrdinalLaws, AbsorbsMatchesDefinition) {
  for (int i = 0; i < 2000; ++i) {
    const Ordinal b = any(), a = any();
    ASSERT_EQ(absorbs(b, a), b + a == a);
    if (!b.is_zero()) ASSERT_EQ(absorbs(b, a), a >= b * w);
  }
}

TEST(OrdinalProperties, NaturalsAreExact) {
  const Natural big = Natural(1) << 200;
  const Ordinal a = Ordinal::natural(big);
  EXPECT_EQ((a + a).finite_part(), big * 2);
  EXPECT_EQ((w * a).terms()[0].coefficient, big);
}

}  // namespace
}  // namespace rfdepth
