#pragma once

#include <map>
#include <optional>
#include <string>

#include "linea/groebner.hpp"
#include "linea/series.hpp"

namespace linea {

/// Hilbert function values with an optional closed-form series and a tag
/// recording which method produced them.
struct HilbertProfile {
  std::map<int, long> values;
  std::optional<RationalSeries> series;
  std::string source;  // "formula", "gb" or "linalg"
};

/// Hilbert function of m generic lines in P^n: min{C(n+d,d), m(d+1)}.
/// Only valid for n >= 3; smaller n is rejected (for n = 2 two lines in
/// the plane already violate the formula in degree 2).
Int generic_lines_hilbert(int m, int n, int d);

/// Hilbert function of p generic points in P^n: min{C(n+d,d), p}.
Int points_hilbert(int p, int n, int d);

/// Closed-form Hilbert series of m generic lines in P^n over (1-t)^2.
RationalSeries generic_lines_series(int m, int n);

/// ((p-1)t+1)/(1-t), the series of p <= n+1 generic points.
RationalSeries points_series(int p);

/// dim (S/I)_d = C(n+d,d) - rank of the generator-multiple matrix in
/// degree d. Independent of any Groebner structure.
long hilbert_linalg(const Ideal& I, int d, const RankOptions& ropts = {});

/// Hilbert function of S/I at d via standard monomials of the initial
/// ideal (Macaulay).
long hilbert_standard_monomials(const GroebnerBasis& G, int nvars, int d);

/// Smallest alpha >= 0 with C(n+alpha, alpha) >= m(alpha+1); equals the
/// regularity of the coordinate ring of m generic lines in P^n.
int regularity_alpha(int m, int n);

/// ceil((n!)^{1/(n-1)} (m^{1/(n-1)} - 1)), certified by exact integer
/// root isolation (no floating point).
int regularity_bound(int m, int n);

/// Measured regularity of the intersection of linear-form ideals is at
/// most the number of ideals. Rejects non-linear generators.
bool derksen_sidman_check(const std::vector<Ideal>& linear_ideals,
                          const RankOptions& ropts = {});

}  // namespace linea
