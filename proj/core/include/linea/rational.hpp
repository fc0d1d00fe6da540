#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace linea {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown on malformed input (bad text, out-of-range parameters, broken files).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reduced fraction with positive denominator. mpq_class does not
/// canonicalize two-argument constructions on its own.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

/// Parses "p", "-p" or "p/q". Denominator must be nonzero.
Rat parse_rat(const std::string& text);

/// "p/q" with "/1" omitted.
std::string rat_to_string(const Rat& value);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

/// Deterministic 64-bit stream (splitmix64); used wherever seeded
/// randomness is needed so results are reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform value in [lo, hi], inclusive.
  std::int64_t next_in(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

}  // namespace linea
