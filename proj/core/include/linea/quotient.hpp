#pragma once

#include <unordered_map>

#include "linea/groebner.hpp"

namespace linea {

/// Graded pieces of R = S/J as explicit vector spaces: standard-monomial
/// bases per degree and multiplication-by-variable maps between them.
/// warm_up() must cover every degree used afterwards; reads are then
/// safe from multiple threads.
class QuotientRing {
 public:
  using SparseCol = std::vector<std::pair<std::size_t, Rat>>;

  QuotientRing(Ideal J, const MonomialOrder& order);

  int nvars() const { return nvars_; }
  const Ideal& ideal() const { return ideal_; }
  const GroebnerBasis& gb() const { return gb_; }
  const MonomialOrder& order() const { return order_; }

  void warm_up(int max_degree);

  long dim(int d) const;
  const std::vector<Monomial>& basis(int d) const;
  std::size_t basis_index(int d, const Monomial& m) const;

  /// Column of multiplication by x_var from degree d to d+1.
  const SparseCol& mult(int var, int d, std::size_t col) const;

  /// Normal form mod J.
  Polynomial reduce(const Polynomial& p) const;
  /// Coordinates of a reduced homogeneous polynomial in basis(d).
  std::vector<Rat> coords(const Polynomial& reduced, int d) const;

 private:
  void extend(int max_degree);

  int nvars_;
  Ideal ideal_;
  MonomialOrder order_;
  GroebnerBasis gb_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
  // mult_[d][var][col]
  std::vector<std::vector<std::vector<SparseCol>>> mult_;
};

}  // namespace linea
