#pragma once

#include <string>
#include <vector>

#include "linea/polynomial.hpp"

namespace linea {

/// Generator list in S = Q[x0..x_{ambient_n}]; nvars = ambient_n + 1.
struct Ideal {
  int nvars = 0;
  std::vector<Polynomial> gens;

  Ideal() = default;
  Ideal(int nvars_, std::vector<Polynomial> gens_);

  static Ideal zero(int nvars) { return Ideal(nvars, {}); }
  static Ideal from_strings(int nvars, const std::vector<std::string>& gens,
                            const MonomialOrder& order);

  bool is_zero() const { return gens.empty(); }
  bool is_homogeneous() const;
  int max_gen_degree() const;

  /// Generators sorted by (degree, leading monomial) under `order`;
  /// the deterministic output form.
  Ideal canonicalized(const MonomialOrder& order) const;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);

}  // namespace linea
