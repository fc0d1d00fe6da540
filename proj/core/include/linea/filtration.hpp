#pragma once

#include <string>

#include "linea/arrangement.hpp"

namespace linea {

/// A family of linear-form ideals in R = S/J, each given by lifted linear
/// forms in S, with one chain step per nonzero member: ideal = sub + (gen)
/// and (sub : ideal) = colon, all ids into the member list.
struct FiltrationIdeal {
  std::string id;
  std::vector<Polynomial> gens;  // linear forms in S
};

struct FiltrationStep {
  std::string ideal, sub, colon;
  Polynomial gen;
};

struct Filtration {
  int nvars = 0;
  std::vector<FiltrationIdeal> ideals;
  std::vector<FiltrationStep> steps;

  const FiltrationIdeal* find(const std::string& id) const;
};

struct StepCheck {
  std::string ideal, sub, colon;
  bool span_ok = false;   // sub + (gen) spans the ideal, one new form
  bool colon_ok = false;  // (J + sub) : gen equals J + colon in S
  std::string note;
};

struct FiltrationReport {
  bool accepted = false;
  std::size_t ideal_count = 0;
  std::vector<std::string> structural_errors;
  std::vector<StepCheck> steps;
};

struct VerifyOptions {
  int jobs = 1;
  /// Also recompute each colon with the generic full-ring colon_ideal
  /// (slow; meant for cross-checking the reduced-context path).
  bool cross_check_full_ring = false;
};

/// Checks the three filtration conditions mechanically, lifting every
/// ideal to S as J + (linear forms). Colons are computed after modding
/// out the sub-ideal's span, which is a coordinate change of S.
FiltrationReport verify_filtration(const Ideal& J, const Filtration& F,
                                   const VerifyOptions& opts = {});

/// Chain filtration for a quadratic monomial defining ideal: members are
/// variable-subset ideals, closed under the colon operation.
Filtration quadratic_monomial_filtration(const Ideal& J);

struct ConstructedFiltration {
  LineArrangement arrangement;
  Ideal ideal;
  Filtration filtration;
};

/// Filtration for the staircase arrangement of m generic lines in P^n:
/// the quadratic-monomial chain when 2m <= n+1, otherwise the two-chain
/// construction through the colon ideals (J+(x0)):(x1) and (J+(l0)):(l1).
ConstructedFiltration construct_staircase_filtration(int m, int n,
                                                     std::uint64_t seed);

/// The 57-member filtration for five generic lines in P^6 with
/// parameters (a, b), transcribed member by member.
Filtration five_p6_filtration(const Rat& a, const Rat& b);

}  // namespace linea
