#pragma once

#include <optional>

#include "linea/filtration.hpp"
#include "linea/hilbert.hpp"

namespace linea {

enum class Verdict { Koszul, NotKoszul, Unknown };

std::string verdict_to_string(Verdict v);

/// Verdict plus the rule tag that produced it; Unknown carries no tag.
struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
};

/// Exact-integer form of the line-count threshold
/// m > (3(n^2+10n+13) + sqrt(3(n-1)^3(3n+5)))/72.
bool threshold_exceeded(int m, int n);

/// Discriminant -m(108m^2 - 9m(n^2+10n+13) + 4(n+2)^3) of the cubic
/// denominator of the reciprocal Hilbert series.
Int discriminant(int m, int n);

/// First index <= terms where 1/H(-t) has a negative coefficient; a
/// negative coefficient rules out the Koszul property.
std::optional<std::size_t> froberg_probe(int m, int n, unsigned terms);

/// Rule scan for m generic lines in P^n, first match wins.
Classification classify(int m, int n);

struct ClaimRow {
  std::string name;
  std::string claimed;
  std::string measured;
  bool ok = false;
};

struct ClaimsReport {
  bool all_ok = false;
  std::vector<ClaimRow> rows;
};

/// Recomputes the intermediate Hilbert series used by the staircase
/// filtration construction on a seeded instance and compares them exactly
/// against the independent linear-algebra oracle.
ClaimsReport hilbert_claims_check(int m, int n, std::uint64_t seed,
                                  const RankOptions& ropts = {});

}  // namespace linea
