#pragma once

#include <map>
#include <vector>

#include "linea/ideal.hpp"
#include "linea/qmatrix.hpp"

namespace linea {

/// Reduced Groebner basis: elements monic, no term of any element divisible
/// by another element's leading monomial; unique for (ideal, order).
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elems)
      : order_(order), elems_(std::move(elems)) {}

  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  int nvars() const { return elems_.empty() ? 0 : elems_[0].nvars(); }
  bool is_zero_ideal() const { return elems_.empty(); }
  bool is_unit_ideal() const;

  bool operator==(const GroebnerBasis& other) const;

 private:
  MonomialOrder order_;
  std::vector<Polynomial> elems_;  // sorted ascending by leading monomial
};

/// Remainder of f on division by G: no term divisible by any leading
/// monomial of G. f is in the ideal iff the remainder is zero.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order);

bool is_member(const Polynomial& f, const GroebnerBasis& G);
bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order);

/// I cap J by elimination of one auxiliary variable.
Ideal intersect(const Ideal& a, const Ideal& b, const MonomialOrder& order);

/// I : f, exact quotient; f must be nonzero.
Ideal colon(const Ideal& I, const Polynomial& f, const MonomialOrder& order);

/// I : J = intersection of I : g over generators g of J. Generators of J
/// already lying in I contribute the unit ideal and are skipped. Returns
/// the unit ideal (single generator 1) when every generator lies in I.
Ideal colon_ideal(const Ideal& I, const Ideal& J, const MonomialOrder& order);

/// Monomial ideal of leading terms.
Ideal initial_ideal(const GroebnerBasis& G);

/// Counts of minimal generators per degree j <= max_degree, computed as
/// dim I_j - dim(S_1 * I_{j-1}) by graded linear algebra on generator
/// multiples. Requires a homogeneous ideal.
std::map<int, long> minimal_generators_up_to(const Ideal& I, int max_degree,
                                             const MonomialOrder& order,
                                             const RankOptions& ropts = {});

/// Exact polynomial division; throws unless g divides f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

/// Monomials of degree d not divisible by any leading monomial of G;
/// their count is the Hilbert function of S/I at d (Macaulay).
long standard_monomial_count(const GroebnerBasis& G, int nvars, int d);

}  // namespace linea
