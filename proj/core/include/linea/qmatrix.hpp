#pragma once

#include <cstdint>
#include <vector>

#include "linea/rational.hpp"

namespace linea {

struct RankOptions {
  bool force_exact = false;
  int primes = 3;             // agreeing modular ranks required
  std::uint64_t seed = 1234;  // selects primes from the pool
};

struct RankResult {
  std::size_t rank = 0;
  bool used_exact = false;
};

/// Dense matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, std::vector<Rat>(cols, Rat(0))) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i][j]; }
  void add_row(std::vector<Rat> row);

  QMatrix transposed() const;

  /// Fraction-free (Bareiss) elimination over cleared integer rows.
  std::size_t rank_exact() const;

  /// Rank modulo `count` distinct ~31-bit primes; empty when a prime
  /// divides some denominator. Modular rank never exceeds the true rank.
  std::vector<std::size_t> ranks_mod_primes(int count,
                                            std::uint64_t seed) const;

  /// Fast path: several modular ranks, accepted when they all agree;
  /// falls back to the exact elimination otherwise.
  RankResult rank(const RankOptions& opts = {}) const;

  /// Reduced row echelon form in place; returns rank. Exact.
  std::size_t rref();

  /// Basis of the right null space, exact. rank + kernel dim = cols.
  std::vector<std::vector<Rat>> kernel_basis() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<Rat>> data_;
};

/// Modular elimination workspace shared by the rank fast path and the
/// quotient-ring Betti cells: rows are inserted one at a time and reduced
/// against the running echelon basis.
class ModEchelon {
 public:
  ModEchelon(std::uint32_t p, std::size_t cols);
  std::uint32_t prime() const { return p_; }
  /// Reduces the row and absorbs it when nonzero; returns current rank.
  std::size_t insert(std::vector<std::uint32_t> row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::uint32_t p_;
  std::size_t cols_;
  std::vector<std::size_t> pivot_col_;
  std::vector<std::vector<std::uint32_t>> pivots_;
};

/// Distinct primes drawn from a fixed pool of 31-bit primes.
std::vector<std::uint32_t> select_primes(int count, std::uint64_t seed);

std::uint32_t mod_reduce(const Int& z, std::uint32_t p);
/// num/den mod p; throws bad_prime when p divides den.
struct bad_prime {};
std::uint32_t mod_reduce(const Rat& q, std::uint32_t p);
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);

}  // namespace linea
