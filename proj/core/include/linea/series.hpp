#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linea/rational.hpp"

namespace linea {

/// Integer coefficients, index = power of t. No trailing zeros.
using IntPoly = std::vector<Int>;

/// Exact Maclaurin coefficients, index 0..N.
using CoeffSeq = std::vector<Int>;

IntPoly poly_trim(IntPoly p);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Rational function num(t) / (1-t)^denom_pow. Normalized so that
/// (1-t) does not divide the numerator while denom_pow > 0.
class RationalSeries {
 public:
  RationalSeries() : num_{}, denom_pow_(0) {}
  RationalSeries(IntPoly numerator, unsigned denom_pow);

  static RationalSeries zero() { return RationalSeries(); }
  static RationalSeries one() { return RationalSeries({Int(1)}, 0); }

  const IntPoly& numerator() const { return num_; }
  unsigned denom_pow() const { return denom_pow_; }
  bool is_zero() const { return num_.empty(); }

  /// Maclaurin coefficients through degree n, exact.
  CoeffSeq expand(unsigned n) const;

  bool operator==(const RationalSeries& other) const;

  RationalSeries operator+(const RationalSeries& other) const;
  RationalSeries operator-(const RationalSeries& other) const;

  /// "(-3*t^3+2*t^2+5*t+1)/(1-t)^2"; denominator omitted when the power
  /// is zero, "^1" omitted.
  std::string to_string() const;
  static RationalSeries parse(const std::string& text);

 private:
  IntPoly num_;
  unsigned denom_pow_;
};

/// Coefficients of 1/f(-t) through degree n. Requires f(0) = 1.
CoeffSeq reciprocal_series(const RationalSeries& f, unsigned n);

/// Smallest index holding a negative entry, if any.
std::optional<std::size_t> first_negative(const CoeffSeq& seq);

}  // namespace linea
