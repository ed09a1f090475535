#include <gtest/gtest.h>

#include "goldens.hpp"
#include "liftfact/bank.hpp"
#include "liftfact/corpus.hpp"
#include "liftfact/error.hpp"
#include "liftfact/factor.hpp"

namespace liftfact {
namespace {

using testing::poly;

Signal naive_convolve(const std::vector<Rational>& h, const Signal& x) {
  Signal out;
  out.start = x.start;
  out.samples.assign(x.samples.size() + h.size(), Rational(0));
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < x.samples.size(); ++j) out.samples[i + j] += h[i] * x.samples[j];
  return out;
}

Signal signal(std::vector<Rational> s, long start = 0) { return Signal{std::move(s), start}; }

TEST(Signal, EqualityIgnoresPadding) {
  EXPECT_EQ(signal({0, 1, 2, 0}, -1), signal({1, 2}, 0));
  EXPECT_FALSE(signal({1, 2}, 0) == signal({1, 2}, 1));
  EXPECT_TRUE(signal({0, 0}).is_zero());
}

TEST(Signal, ConvolutionMatchesNaiveSum) {
  testing::Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    Poly p = rng.rational_poly(rng.integer(0, 4));
    Signal x = random_signal(static_cast<std::uint64_t>(i), 16);
    EXPECT_EQ(convolve(p, x), naive_convolve({p.coefficients().begin(), p.coefficients().end()}, x));
  }
}

TEST(Signal, RandomSignalsAreDeterministic) {
  EXPECT_EQ(random_signal(7), random_signal(7));
  EXPECT_FALSE(random_signal(7) == random_signal(8));
  EXPECT_EQ(random_signal(7).samples.size(), 64u);
}

TEST(Phases, MuxOfDemuxIsUnitDelay) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Signal x = random_signal(seed, 17);
    EXPECT_EQ(mux(demux(x)), delayed(x, 1));
  }
  PhasePair p = demux(signal({10, 11, 12, 13, 14}));
  EXPECT_EQ(p.y0, signal({10, 12, 14}));
  EXPECT_EQ(p.y1, signal({11, 13}, 1));
}

TEST(Polyphase, LgtFiltersGiveTheCausalMatrix) {
  FilterBank fb{"lgt", LaurentPoly({Rational(-1, 8), Rational(2, 8), Rational(6, 8), Rational(2, 8), Rational(-1, 8)}, 0),
                LaurentPoly({Rational(-1, 2), Rational(2, 2), Rational(-1, 2)}, 0)};
  EXPECT_EQ(polyphase_decompose(fb), goldens::lgt());
}

TEST(Polyphase, RoundTrip) {
  testing::Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    PolyMatrix2 h{rng.rational_poly(rng.integer(0, 3)), rng.rational_poly(rng.integer(0, 3)),
                  rng.rational_poly(rng.integer(0, 3)), rng.rational_poly(rng.integer(0, 3))};
    FilterBank fb = polyphase_compose(h);
    EXPECT_EQ(polyphase_decompose(fb), h);
    FilterBank again = polyphase_compose(polyphase_decompose(fb));
    EXPECT_EQ(again.h0, fb.h0);
    EXPECT_EQ(again.h1, fb.h1);
  }
}

TEST(Polyphase, RejectsNoncausalFilters) {
  FilterBank fb{"x", LaurentPoly({1, 1}, -1), LaurentPoly({1}, 0)};
  EXPECT_THROW(polyphase_decompose(fb), Error);
}

// The analysis bank is filtering by h0, h1 then keeping the even outputs
// of h_i * x.
TEST(Analysis, MatchesFilterThenDownsample) {
  FilterBank fb = polyphase_compose(goldens::cdf());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Signal x = random_signal(seed, 32);
    PhasePair y = analyze(goldens::cdf(), x);
    for (int ch = 0; ch < 2; ++ch) {
      Poly h = (ch == 0 ? fb.h0 : fb.h1).to_poly();
      Signal full = convolve(h, x);
      Signal& got = ch == 0 ? y.y0 : y.y1;
      for (long n = -2; n < 40; ++n) EXPECT_EQ(got.at(n), full.at(2 * n)) << ch << " " << n;
    }
  }
}

TEST(Analysis, LadderMatchesMatrix) {
  Factorization f = factor_cca(goldens::cdf(), parse_strategy("C1@M=1,C1"));
  Factorization n = normalize_standard(f);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Signal x = random_signal(seed);
    PhasePair a = analyze(goldens::cdf(), x);
    PhasePair b = analyze(n, x);
    EXPECT_EQ(a.y0, b.y0);
    EXPECT_EQ(a.y1, b.y1);
    EXPECT_EQ(synthesize(goldens::cdf(), a), synthesize(n, a));
    EXPECT_EQ(synthesize(goldens::cdf(), a, SynthesisMode::kExactInverse),
              synthesize(n, a, SynthesisMode::kExactInverse));
  }
}

// adj(H) H = det H I: reconstruction is the det gain at twice the det
// delay, plus the unit delay of the phase split.
TEST(PerfectReconstruction, GainAndDelayFollowDeterminant) {
  for (const std::string name : {"lgt53", "cdf75", "haar"}) {
    CorpusEntry e = builtin_entry(name);
    DetMonomial d = pr_check(e.polyphase);
    PrReport causal = pr_verify(e.polyphase, 10, 3);
    EXPECT_EQ(causal.gain, d.gain) << name;
    EXPECT_EQ(causal.delay, 1 + 2 * static_cast<long>(d.delay)) << name;
    PrReport exact = pr_verify(e.polyphase, 10, 3, SynthesisMode::kExactInverse);
    EXPECT_EQ(exact.gain, Rational(1)) << name;
    EXPECT_EQ(exact.delay, 1) << name;
  }
}

TEST(PerfectReconstruction, Impulse) {
  PhasePair y = analyze(goldens::lgt(), impulse());
  EXPECT_EQ(synthesize(goldens::lgt(), y), signal({0, 0, 0, 1}));
}

TEST(Align, DetectsMismatch) {
  Signal x = signal({1, 2, 3});
  EXPECT_EQ(align(x, signal({0, 0, -2, -4, -6})), (PrReport{-2, 2, 1}));
  try {
    align(x, signal({0, 1, 2, 4}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReconstructionMismatch);
  }
}

}  // namespace
}  // namespace liftfact
