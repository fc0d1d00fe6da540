#include "linea/monomial.hpp"

#include <algorithm>

namespace linea {

Monomial Monomial::one(int nvars) {
  Monomial m;
  m.nvars = static_cast<std::int16_t>(nvars);
  return m;
}

Monomial Monomial::var(int idx, int nvars) {
  Monomial m = one(nvars);
  m.e[idx] = 1;
  m.deg = 1;
  return m;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial m = *this;
  for (int i = 0; i < nvars; ++i) m.e[i] += other.e[i];
  m.deg += other.deg;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg > other.deg) return false;
  for (int i = 0; i < nvars; ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& other) const {
  Monomial m = *this;
  for (int i = 0; i < nvars; ++i) m.e[i] -= other.e[i];
  m.deg -= other.deg;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.deg = 0;
  for (int i = 0; i < a.nvars; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < nvars; ++i)
    if (e[i] && other.e[i]) return false;
  return true;
}

std::string Monomial::to_string() const {
  if (deg == 0) return "1";
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

namespace {

// a > b iff the rightmost nonzero entry of a-b is negative (degrees equal).
int revlex_tail(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = hi - 1; i >= lo; --i) {
    int d = int(a.e[i]) - int(b.e[i]);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int grevlex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  return revlex_tail(a, b, lo, hi);
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::grevlex:
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      return revlex_tail(a, b, 0, a.nvars);
    case Kind::lex:
      for (int i = 0; i < a.nvars; ++i) {
        int d = int(a.e[i]) - int(b.e[i]);
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    case Kind::elim_block: {
      int c = grevlex_cmp(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_cmp(a, b, block_, a.nvars);
    }
  }
  return 0;
}

namespace {

void enumerate(int nvars, int pos, int rem, Monomial& cur,
               std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur.e[pos] = static_cast<std::uint16_t>(rem);
    cur.deg = 0;
    for (int i = 0; i < nvars; ++i) cur.deg += cur.e[i];
    out.push_back(cur);
    cur.e[pos] = 0;
    return;
  }
  for (int k = rem; k >= 0; --k) {
    cur.e[pos] = static_cast<std::uint16_t>(k);
    enumerate(nvars, pos + 1, rem - k, cur, out);
  }
  cur.e[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d,
                                          const MonomialOrder& order) {
  if (d < 0) return {};
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(nvars);
  if (nvars == 1) {
    cur.e[0] = static_cast<std::uint16_t>(d);
    cur.deg = d;
    return {cur};
  }
  enumerate(nvars, 0, d, cur, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return order.greater(a, b);
  });
  return out;
}

}  // namespace linea
