#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "linea/rational.hpp"

namespace linea {

inline constexpr int kMaxVars = 12;

/// Exponent vector over a fixed number of variables with cached degree.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::int32_t deg = 0;
  std::int16_t nvars = 0;

  static Monomial one(int nvars);
  static Monomial var(int idx, int nvars);

  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial divide(const Monomial& other) const;  // this / other, exact
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;
  bool is_one() const { return deg == 0; }

  bool operator==(const Monomial& other) const {
    return nvars == other.nvars && deg == other.deg && e == other.e;
  }

  std::string to_string() const;  // "x0^2*x3", "1" for the unit
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int i = 0; i < m.nvars; ++i) {
      h ^= m.e[i];
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Term orders. grevlex and lex fix x0 > x1 > ... > xn; the block order
/// makes the first `block` variables dominate (for elimination) and falls
/// back to grevlex inside and outside the block.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, elim_block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elim(int block) {
    return MonomialOrder(Kind::elim_block, block);
  }

  Kind kind() const { return kind_; }
  int block() const { return block_; }

  /// +1 when a > b, 0 on equality, -1 when a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  bool operator==(const MonomialOrder& other) const {
    return kind_ == other.kind_ && block_ == other.block_;
  }

 private:
  MonomialOrder(Kind k, int b) : kind_(k), block_(b) {}
  Kind kind_;
  int block_;
};

/// All monomials in nvars variables of total degree d, sorted descending
/// under `order`. Count is C(nvars-1+d, d).
std::vector<Monomial> monomials_of_degree(int nvars, int d,
                                          const MonomialOrder& order);

}  // namespace linea
