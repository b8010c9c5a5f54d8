#pragma once

#include <cstdint>

#include "adorb/rational.hpp"

namespace adorb {

// SplitMix64: tiny splittable deterministic generator. Output is fixed for
// a given seed on every platform; reports embed the seed for reproducibility.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, n). Modulo bias is irrelevant here; determinism is not.
  std::uint64_t bounded(std::uint64_t n) { return next() % n; }

  // Inclusive range.
  long range(long lo, long hi) {
    return lo + static_cast<long>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  SplitMix64 split() { return SplitMix64(next() ^ 0x8D2B9D4F3C7A1E55ULL); }

  Rational rational(long num_lo, long num_hi, long den_lo, long den_hi) {
    long num = range(num_lo, num_hi);
    long den = range(den_lo, den_hi);
    return make_rational(num, den);
  }

  GaussianRational gaussian(long num_lo, long num_hi, long den_lo, long den_hi) {
    Rational re = rational(num_lo, num_hi, den_lo, den_hi);
    Rational im = rational(num_lo, num_hi, den_lo, den_hi);
    return GaussianRational(re, im);
  }

 private:
  std::uint64_t state_;
};

}  // namespace adorb
