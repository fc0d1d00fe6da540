#pragma once

#include <optional>
#include <string>

#include "linea/groebner.hpp"
#include "linea/qmatrix.hpp"

namespace linea {

/// A line in P^n: n-1 independent linear forms, plus two rational points
/// spanning the line when available.
struct Line {
  std::vector<Polynomial> forms;
  std::optional<std::array<std::vector<Rat>, 2>> span_points;
};

struct Provenance {
  enum class Kind { generic, staircase, named };
  Kind kind = Kind::generic;
  std::uint64_t seed = 0;   // generic / mixed staircase
  std::string id;           // named
  Rat a, b;                 // five_p6 parameters
};

struct LineArrangement {
  int n = 0;  // ambient projective dimension
  std::vector<Line> lines;
  Provenance prov;

  int nvars() const { return n + 1; }
  int m() const { return int(lines.size()); }
  Ideal line_ideal(std::size_t i) const;
};

/// m lines through seeded random integer points in [-10^6, 10^6]^{n+1}.
/// Deterministic per (m, n, seed); degenerate draws are retried.
LineArrangement random_generic(int m, int n, std::uint64_t seed);

/// Coordinate-subset lines L_i = (all variables except the i-th pair from
/// the top). Requires 2m <= n+1.
LineArrangement staircase_monomial(int m, int n);

/// ceil(m/2) coordinate-subset lines plus floor(m/2) lines in the same
/// pattern over seeded general linear forms l_0..l_n.
LineArrangement staircase_mixed(int m, int n, std::uint64_t seed);

/// Monomial variant when 2m <= n+1, mixed layout otherwise.
LineArrangement staircase(int m, int n, std::uint64_t seed = 1);

/// The named arrangements: "three_p4", "four_p3_special", "five_p6".
LineArrangement named_three_p4();
LineArrangement named_four_p3_special();
LineArrangement named_five_p6(const Rat& a, const Rat& b);
LineArrangement named_arrangement(const std::string& id);

/// Intersection of the line ideals; generators in canonical order.
Ideal defining_ideal(const LineArrangement& A, const MonomialOrder& order);

/// Any s lines span a projective subspace of dimension min(2s-1, n),
/// checked on the stacked span points for all subset sizes up to
/// ceil((n+1)/2).
bool general_position_check(const LineArrangement& A);

/// Hilbert function of the defining ideal matches the generic-lines
/// formula through degree D.
bool genericity_certificate(const LineArrangement& A, int max_degree,
                            const RankOptions& ropts = {});

}  // namespace linea
