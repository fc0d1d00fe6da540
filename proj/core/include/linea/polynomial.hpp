#pragma once

#include <string>
#include <vector>

#include "linea/monomial.hpp"

namespace linea {

struct Term {
  Monomial mon;
  Rat coeff;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted strictly
/// descending under the order the polynomial was built with; operations
/// take that order explicitly.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rat& c);
  static Polynomial variable(int idx, int nvars);
  static Polynomial from_terms(int nvars, std::vector<Term> terms,
                               const MonomialOrder& order);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mon; }

  int degree() const;  // total degree, -1 for zero
  bool is_homogeneous() const;

  Polynomial plus(const Polynomial& other, const MonomialOrder& order) const;
  Polynomial minus(const Polynomial& other, const MonomialOrder& order) const;
  Polynomial times(const Polynomial& other, const MonomialOrder& order) const;
  Polynomial scaled(const Rat& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  /// this - c * m * other, the division-step workhorse.
  Polynomial axpy(const Rat& c, const Monomial& m, const Polynomial& other,
                  const MonomialOrder& order) const;
  Polynomial monic() const;
  Polynomial without_leading() const;

  /// Re-sorts terms for use under a different order.
  Polynomial resorted(const MonomialOrder& order) const;

  /// Substitute variables: whenever image[i] is non-null, xi is replaced
  /// by *image[i]. Result is normalized under `order`.
  Polynomial substituted(const std::vector<const Polynomial*>& image,
                         const MonomialOrder& order) const;

  /// Extend/shrink the ambient variable list. Shrinking requires the
  /// dropped trailing variables to be unused.
  Polynomial with_nvars(int nvars) const;

  bool equals(const Polynomial& other) const;

  std::string to_string() const;
  /// Accepts the grammar "1/2*x0^2*x3 - x1*x2" (whitespace optional,
  /// '*' optional between factors).
  static Polynomial parse(const std::string& text, int nvars,
                          const MonomialOrder& order);

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
};

/// Coefficient of the monomial, 0 if absent.
Rat coeff_of(const Polynomial& p, const Monomial& m);

/// Coefficient vector of a linear form; rejects other degrees.
std::vector<Rat> linear_form_coeffs(const Polynomial& f, int nvars);

}  // namespace linea
