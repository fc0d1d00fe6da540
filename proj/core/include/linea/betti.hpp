#pragma once

#include <map>

#include "linea/hilbert.hpp"
#include "linea/quotient.hpp"

namespace linea {

/// Graded Betti numbers beta_{i,j}(S/J); absent entries are zero inside
/// the computed bounds. pdim is the largest i, regularity the largest j-i
/// over nonzero entries.
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;
  int imax = 0;
  int jmax = 0;
  bool truncated = false;  // nonzero entries touch the computed boundary
  bool used_exact = false;

  long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
};

/// Homology of the Koszul complex on the variables tensored with S/J,
/// one pair of rank computations per (i, j) cell.
BettiTable graded_betti(const Ideal& J, int imax, int jmax,
                        const RankOptions& ropts = {}, int jobs = 1);

int pdim_of(const BettiTable& table);  // rejects truncated tables
int reg_of(const BettiTable& table);

/// Macaulay-style layout: rows j-i, columns i, "-" for zero.
std::string render_betti(const BettiTable& table);

/// beta_{i,i+1} <= C(g, i) for i = 2..g, a necessary condition for the
/// Koszul property when the defining ideal has g minimal generators.
bool mantero_inequality_check(const BettiTable& table, long quadric_count);

/// Bounded-degree minimal free resolution of the residue field over
/// R = S/J. betti[(i,j)] counts minimal generators of F_i in degree j,
/// for i <= steps and j <= cutoff.
struct ResolutionProbe {
  std::map<std::pair<int, int>, long> betti;
  bool cutoff_hit = false;  // generators appeared at j = cutoff

  long at(int i, int j) const {
    auto it = betti.find({i, j});
    return it == betti.end() ? 0 : it->second;
  }
  /// True when every computed entry off the diagonal vanishes.
  bool linear_through(int steps, int cutoff) const;
};

ResolutionProbe residue_field_resolution(const Ideal& J, int steps, int cutoff,
                                         const RankOptions& ropts = {});

}  // namespace linea
