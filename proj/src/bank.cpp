#include "liftfact/bank.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <random>

#include "liftfact/error.hpp"

namespace liftfact {

namespace {

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

Rational Signal::at(long n) const {
  if (n < start || n >= end()) return Rational(0);
  return samples[static_cast<std::size_t>(n - start)];
}

bool Signal::is_zero() const {
  return std::all_of(samples.begin(), samples.end(), [](const Rational& r) { return r.is_zero(); });
}

Signal Signal::trimmed() const {
  Signal out;
  std::size_t lo = 0, hi = samples.size();
  while (lo < hi && samples[lo].is_zero()) ++lo;
  while (hi > lo && samples[hi - 1].is_zero()) --hi;
  if (lo == hi) return out;
  out.samples.assign(samples.begin() + static_cast<long>(lo), samples.begin() + static_cast<long>(hi));
  out.start = start + static_cast<long>(lo);
  return out;
}

bool operator==(const Signal& a, const Signal& b) {
  Signal ta = a.trimmed(), tb = b.trimmed();
  return ta.samples == tb.samples && (ta.samples.empty() || ta.start == tb.start);
}

Signal impulse() { return Signal{{Rational(1)}, 0}; }

Signal random_signal(std::uint64_t seed, std::size_t length) {
  std::mt19937_64 rng(seed);
  Signal x;
  x.samples.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 4) + 1;
    x.samples.emplace_back(num, den);
  }
  // Keep both ends nonzero so alignment is unambiguous.
  if (x.samples.front().is_zero()) x.samples.front() = Rational(1);
  if (x.samples.back().is_zero()) x.samples.back() = Rational(-1);
  return x;
}

Signal convolve(const Poly& p, const Signal& x) {
  if (p.is_zero() || x.samples.empty()) return Signal{};
  Signal out;
  out.start = x.start;
  out.samples.assign(x.samples.size() + p.size() - 1, Rational(0));
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Rational& c = p.coefficients()[k];
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < x.samples.size(); ++i) out.samples[i + k] += c * x.samples[i];
  }
  return out;
}

Signal operator+(const Signal& a, const Signal& b) {
  if (a.samples.empty()) return b;
  if (b.samples.empty()) return a;
  Signal out;
  out.start = std::min(a.start, b.start);
  long hi = std::max(a.end(), b.end());
  for (long n = out.start; n < hi; ++n) out.samples.push_back(a.at(n) + b.at(n));
  return out;
}

Signal scaled(const Signal& x, const Rational& c) {
  Signal out = x;
  for (auto& s : out.samples) s *= c;
  return out;
}

Signal delayed(const Signal& x, long m) {
  Signal out = x;
  out.start += m;
  return out;
}

PolyMatrix2 polyphase_decompose(const FilterBank& fb) {
  PolyMatrix2 h;
  const LaurentPoly* filters[2] = {&fb.h0, &fb.h1};
  for (int i = 0; i < 2; ++i) {
    const LaurentPoly& f = *filters[i];
    if (f.is_zero()) throw Error(ErrorCode::kPrecondition, "filter h" + std::to_string(i) + " is zero");
    if (!f.is_causal()) throw Error(ErrorCode::kPrecondition, "filter h" + std::to_string(i) + " is not causal");
    std::vector<Rational> even, odd;
    for (long e = 0; e <= f.highest_exponent(); ++e) (e % 2 == 0 ? even : odd).push_back(f.coeff_at(e));
    h.at(i, 0) = Poly(std::move(even));
    h.at(i, 1) = Poly(std::move(odd));
  }
  return h;
}

FilterBank polyphase_compose(const PolyMatrix2& h, std::string name) {
  FilterBank fb;
  fb.name = std::move(name);
  LaurentPoly* filters[2] = {&fb.h0, &fb.h1};
  for (int i = 0; i < 2; ++i) {
    std::size_t n = std::max(h.at(i, 0).size(), h.at(i, 1).size());
    std::vector<Rational> c(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      c[2 * k] = h.at(i, 0).coeff(k);
      c[2 * k + 1] = h.at(i, 1).coeff(k);
    }
    *filters[i] = LaurentPoly(std::move(c), 0);
  }
  return fb;
}

PhasePair demux(const Signal& x) {
  PhasePair out;
  if (x.samples.empty()) return out;
  auto build = [&](long parity_offset) {
    // phase(n) = x(2n - parity_offset)
    Signal s;
    s.start = ceil_div(x.start + parity_offset, 2);
    long last = floor_div(x.end() - 1 + parity_offset, 2);
    for (long n = s.start; n <= last; ++n) s.samples.push_back(x.at(2 * n - parity_offset));
    return s;
  };
  out.y0 = build(0);
  out.y1 = build(1);
  return out;
}

Signal mux(const PhasePair& v) {
  Signal out;
  long lo = LONG_MAX, hi = LONG_MIN;
  if (!v.y0.samples.empty()) {
    lo = std::min(lo, 2 * v.y0.start + 1);
    hi = std::max(hi, 2 * (v.y0.end() - 1) + 1);
  }
  if (!v.y1.samples.empty()) {
    lo = std::min(lo, 2 * v.y1.start);
    hi = std::max(hi, 2 * (v.y1.end() - 1));
  }
  if (lo > hi) return out;
  out.start = lo;
  for (long m = lo; m <= hi; ++m) {
    long n = floor_div(m, 2);
    out.samples.push_back(m % 2 == 0 ? v.y1.at(n) : v.y0.at(n));
  }
  return out;
}

PhasePair apply_to(const PolyMatrix2& m, const PhasePair& x) {
  return {convolve(m.at(0, 0), x.y0) + convolve(m.at(0, 1), x.y1),
          convolve(m.at(1, 0), x.y0) + convolve(m.at(1, 1), x.y1)};
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

PhasePair apply_step(const LiftingStep& s, const PhasePair& x) {
  return std::visit(
      overloaded{
          [&](const UpperLift& u) { return PhasePair{x.y0 + convolve(u.filter, x.y1), x.y1}; },
          [&](const LowerLift& l) { return PhasePair{x.y0, x.y1 + convolve(l.filter, x.y0)}; },
          [&](const DelayDiag& d) {
            long m = static_cast<long>(d.m);
            return d.channel == 0 ? PhasePair{delayed(x.y0, m), x.y1} : PhasePair{x.y0, delayed(x.y1, m)};
          },
          [&](const GainDiag& g) { return PhasePair{scaled(x.y0, g.k0), scaled(x.y1, g.k1)}; },
          [&](const Swap&) { return PhasePair{x.y1, x.y0}; },
      },
      s);
}

// Exact inverse of one step, allowing advances.
PhasePair apply_inverse_step(const LiftingStep& s, const PhasePair& x) {
  return std::visit(
      overloaded{
          [&](const UpperLift& u) { return apply_step(UpperLift{-u.filter}, x); },
          [&](const LowerLift& l) { return apply_step(LowerLift{-l.filter}, x); },
          [&](const DelayDiag& d) {
            long m = -static_cast<long>(d.m);
            return d.channel == 0 ? PhasePair{delayed(x.y0, m), x.y1} : PhasePair{x.y0, delayed(x.y1, m)};
          },
          [&](const GainDiag& g) { return apply_step(GainDiag{g.k0.inverse(), g.k1.inverse()}, x); },
          [&](const Swap&) { return apply_step(Swap{}, x); },
      },
      s);
}

}  // namespace

PhasePair apply_to(const std::vector<LiftingStep>& steps, const PhasePair& x) {
  PhasePair v = x;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) v = apply_step(*it, v);
  return v;
}

PhasePair analyze(const PolyMatrix2& h, const Signal& x) { return apply_to(h, demux(x)); }

PhasePair analyze(const Factorization& f, const Signal& x) { return apply_to(f.steps, demux(x)); }

Signal synthesize(const PolyMatrix2& h, const PhasePair& y, SynthesisMode mode) {
  PolyMatrix2 adj(h.at(1, 1), -h.at(0, 1), -h.at(1, 0), h.at(0, 0));
  PhasePair v = apply_to(adj, y);
  if (mode == SynthesisMode::kExactInverse) {
    DetMonomial dm = pr_check(h);
    long d = static_cast<long>(dm.delay);
    Rational k = dm.gain.inverse();
    v = {delayed(scaled(v.y0, k), -d), delayed(scaled(v.y1, k), -d)};
  }
  return mux(v);
}

Signal synthesize(const Factorization& f, const PhasePair& y, SynthesisMode mode) {
  // adj(AB) = adj(B) adj(A) and inv(AB) = inv(B) inv(A): the first step
  // of the factorization is undone first.
  PhasePair v = y;
  for (const auto& s : f.steps) {
    if (mode == SynthesisMode::kExactInverse) {
      v = apply_inverse_step(s, v);
    } else {
      v = apply_to(adjugate_steps(s), v);
    }
  }
  return mux(v);
}

PrReport align(const Signal& x, const Signal& out) {
  Signal tx = x.trimmed(), to = out.trimmed();
  if (tx.samples.empty()) throw Error(ErrorCode::kPrecondition, "alignment against a zero input");
  if (to.samples.empty()) throw Error(ErrorCode::kReconstructionMismatch, "reconstruction is identically zero");
  PrReport r;
  r.delay = to.start - tx.start;
  r.gain = to.samples.front() / tx.samples.front();
  r.signals = 1;
  long hi = std::max(tx.end() + r.delay, to.end());
  for (long n = to.start; n < hi; ++n) {
    Rational want = r.gain * tx.at(n - r.delay);
    Rational got = to.at(n);
    if (want != got) {
      throw Error(ErrorCode::kReconstructionMismatch,
                  "sample " + std::to_string(n) + ": expected " + want.str() + " (gain " + r.gain.str() +
                      ", delay " + std::to_string(r.delay) + "), got " + got.str());
    }
  }
  return r;
}

namespace {

PrReport verify_with(const std::function<Signal(const Signal&)>& chain, std::size_t trials, std::uint64_t seed) {
  std::vector<Signal> inputs{impulse()};
  for (std::size_t t = 0; t < trials; ++t) inputs.push_back(random_signal(seed + t));
  PrReport first;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    PrReport r = align(inputs[i], chain(inputs[i]));
    if (i == 0) {
      first = r;
    } else if (r.gain != first.gain || r.delay != first.delay) {
      throw Error(ErrorCode::kReconstructionMismatch,
                  "signal " + std::to_string(i) + " reconstructs with gain " + r.gain.str() + ", delay " +
                      std::to_string(r.delay) + " but the impulse gave gain " + first.gain.str() + ", delay " +
                      std::to_string(first.delay));
    }
  }
  first.signals = inputs.size();
  return first;
}

}  // namespace

PrReport pr_verify(const PolyMatrix2& h, std::size_t trials, std::uint64_t seed, SynthesisMode mode) {
  pr_check(h);
  return verify_with([&](const Signal& x) { return synthesize(h, analyze(h, x), mode); }, trials, seed);
}

PrReport pr_verify(const Factorization& f, std::size_t trials, std::uint64_t seed, SynthesisMode mode) {
  pr_check(f.source);
  return verify_with([&](const Signal& x) { return synthesize(f, analyze(f, x), mode); }, trials, seed);
}

}  // namespace liftfact
