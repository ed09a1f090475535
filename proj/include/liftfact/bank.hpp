#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liftfact/lifting.hpp"

namespace liftfact {

// x(n) for n in [start, start + samples.size()), zero elsewhere.
struct Signal {
  std::vector<Rational> samples;
  long start = 0;

  Rational at(long n) const;
  long end() const { return start + static_cast<long>(samples.size()); }
  bool is_zero() const;
  Signal trimmed() const;

  // Equality of the underlying zero-extended sequences.
  friend bool operator==(const Signal& a, const Signal& b);
};

Signal impulse();
// Deterministic: mt19937_64 seeded with `seed`, numerators in [-9, 9],
// denominators in [1, 4].
Signal random_signal(std::uint64_t seed, std::size_t length = 64);

Signal convolve(const Poly& p, const Signal& x);
Signal operator+(const Signal& a, const Signal& b);
Signal scaled(const Signal& x, const Rational& c);
Signal delayed(const Signal& x, long m);  // negative m advances

struct FilterBank {
  std::string name;
  LaurentPoly h0;  // lowpass analysis
  LaurentPoly h1;  // highpass analysis
};

// H_i0 = sum h_i(2n) z^-n, H_i1 = sum h_i(2n+1) z^-n.
PolyMatrix2 polyphase_decompose(const FilterBank& fb);
FilterBank polyphase_compose(const PolyMatrix2& h, std::string name = "");

struct PhasePair {
  Signal y0;
  Signal y1;
};

// x0(n) = x(2n), x1(n) = x(2n-1).
PhasePair demux(const Signal& x);
// out(2n+1) = v0(n), out(2n) = v1(n): the mux delays the even branch.
Signal mux(const PhasePair& v);

PhasePair apply_to(const PolyMatrix2& m, const PhasePair& x);
PhasePair apply_to(const std::vector<LiftingStep>& steps, const PhasePair& x);

PhasePair analyze(const PolyMatrix2& h, const Signal& x);
PhasePair analyze(const Factorization& f, const Signal& x);

// kCausalAdjugate synthesizes with adj H(z), an FIR causal inverse up to
// the monomial det H; kExactInverse uses H(z)^-1 with delay advances.
enum class SynthesisMode { kCausalAdjugate, kExactInverse };

Signal synthesize(const PolyMatrix2& h, const PhasePair& y, SynthesisMode mode = SynthesisMode::kCausalAdjugate);
Signal synthesize(const Factorization& f, const PhasePair& y, SynthesisMode mode = SynthesisMode::kCausalAdjugate);

struct PrReport {
  Rational gain;
  long delay = 0;
  std::size_t signals = 0;

  friend bool operator==(const PrReport&, const PrReport&) = default;
};

// out = gain * x(n - delay) for a single (gain, delay), or throws with the
// first offending sample.
PrReport align(const Signal& x, const Signal& out);

PrReport pr_verify(const PolyMatrix2& h, std::size_t trials, std::uint64_t seed = 1,
                   SynthesisMode mode = SynthesisMode::kCausalAdjugate);
PrReport pr_verify(const Factorization& f, std::size_t trials, std::uint64_t seed = 1,
                   SynthesisMode mode = SynthesisMode::kCausalAdjugate);

}  // namespace liftfact
